#include "homolog/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace homolog {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') take();
            } else if (std::isspace((unsigned char)c)) {
                take();
            } else {
                break;
            }
        }
    }
    void skip_inline_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) take();
    }
    ParseError err(const std::string& msg) const { return ParseError(msg, line, col); }
};

std::string parse_ident(Cursor& c) {
    c.skip_inline_ws();
    std::string s;
    while (!c.eof() && (std::isalnum((unsigned char)c.peek()) || c.peek() == '_' || c.peek() == '-'))
        s += c.take();
    if (s.empty()) throw c.err("expected identifier");
    return s;
}

std::string parse_string(Cursor& c) {
    c.skip_inline_ws();
    if (c.eof() || c.peek() != '"') throw c.err("expected string literal");
    c.take();
    std::string s;
    while (!c.eof() && c.peek() != '"') {
        if (c.peek() == '\n') throw c.err("unterminated string");
        s += c.take();
    }
    if (c.eof()) throw c.err("unterminated string");
    c.take();
    return s;
}

long long parse_int(Cursor& c) {
    c.skip_inline_ws();
    std::string s;
    if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) s += c.take();
    while (!c.eof() && std::isdigit((unsigned char)c.peek())) s += c.take();
    if (s.empty() || s == "-" || s == "+") throw c.err("expected integer");
    return std::stoll(s);
}

bool parse_bool(Cursor& c) {
    c.skip_inline_ws();
    std::string s;
    while (!c.eof() && std::isalpha((unsigned char)c.peek())) s += c.take();
    if (s == "true") return true;
    if (s == "false") return false;
    throw c.err("expected true/false");
}

void expect(Cursor& c, char ch) {
    c.skip_inline_ws();
    if (c.eof() || c.peek() != ch)
        throw c.err(std::string("expected '") + ch + "'");
    c.take();
}

std::vector<std::string> parse_string_array(Cursor& c) {
    expect(c, '[');
    std::vector<std::string> out;
    c.skip_ws_and_comments();
    if (!c.eof() && c.peek() == ']') {
        c.take();
        return out;
    }
    while (true) {
        c.skip_ws_and_comments();
        out.push_back(parse_string(c));
        c.skip_ws_and_comments();
        if (!c.eof() && c.peek() == ',') {
            c.take();
            continue;
        }
        expect(c, ']');
        return out;
    }
}

std::vector<std::vector<std::string>> parse_matrix(Cursor& c) {
    expect(c, '[');
    std::vector<std::vector<std::string>> out;
    c.skip_ws_and_comments();
    if (!c.eof() && c.peek() == ']') {
        c.take();
        return out;
    }
    while (true) {
        c.skip_ws_and_comments();
        out.push_back(parse_string_array(c));
        c.skip_ws_and_comments();
        if (!c.eof() && c.peek() == ',') {
            c.take();
            continue;
        }
        expect(c, ']');
        return out;
    }
}

} // namespace

CorpusFile parse_corpus_text(const std::string& text) {
    CorpusFile out;
    Cursor c{text};
    enum class Section { None, Ring, Module } section = Section::None;

    while (true) {
        c.skip_ws_and_comments();
        if (c.eof()) break;
        if (c.peek() == '[') {
            c.take();
            std::string name = parse_ident(c);
            expect(c, ']');
            if (name == "ring") {
                out.rings.push_back({});
                out.rings.back().line = c.line;
                section = Section::Ring;
            } else if (name == "module") {
                out.modules.push_back({});
                out.modules.back().line = c.line;
                section = Section::Module;
            } else {
                throw c.err("unknown section [" + name + "]");
            }
            continue;
        }
        std::string key = parse_ident(c);
        expect(c, '=');
        if (section == Section::Ring) {
            RingSpec& r = out.rings.back();
            if (key == "name")
                r.name = parse_string(c);
            else if (key == "char")
                r.characteristic = parse_int(c);
            else if (key == "vars")
                r.vars = parse_string_array(c);
            else if (key == "ideal")
                r.ideal = parse_string_array(c);
            else if (key == "notes")
                r.notes = parse_string(c);
            else if (key == "labels") {
                expect(c, '{');
                while (true) {
                    c.skip_ws_and_comments();
                    std::string lk = parse_ident(c);
                    expect(c, '=');
                    if (lk == "ci")
                        r.label_ci = parse_bool(c);
                    else if (lk == "codim")
                        r.label_codim = parse_int(c);
                    else if (lk == "gorenstein")
                        r.label_gorenstein = parse_bool(c);
                    else if (lk == "notes")
                        r.notes = parse_string(c);
                    else
                        throw c.err("unknown label '" + lk + "'");
                    c.skip_inline_ws();
                    if (!c.eof() && c.peek() == ',') {
                        c.take();
                        continue;
                    }
                    expect(c, '}');
                    break;
                }
            } else
                throw c.err("unknown ring key '" + key + "'");
        } else if (section == Section::Module) {
            ModuleSpec& m = out.modules.back();
            if (key == "name")
                m.name = parse_string(c);
            else if (key == "ring")
                m.ring = parse_string(c);
            else if (key == "matrix")
                m.matrix = parse_matrix(c);
            else if (key == "gens") {
                m.gens = parse_int(c);
                m.has_gens = true;
            } else
                throw c.err("unknown module key '" + key + "'");
        } else {
            throw c.err("key outside of a [ring]/[module] section");
        }
    }

    // validation
    std::set<std::string> ring_names;
    for (const auto& r : out.rings) {
        if (r.name.empty()) throw ParseError("ring without a name", r.line, 1);
        if (!ring_names.insert(r.name).second)
            throw ParseError("duplicate ring name '" + r.name + "'", r.line, 1);
        if (r.vars.empty()) throw ParseError("ring '" + r.name + "' has no variables", r.line, 1);
    }
    std::set<std::pair<std::string, std::string>> mod_names;
    for (const auto& m : out.modules) {
        if (m.name.empty()) throw ParseError("module without a name", m.line, 1);
        if (!ring_names.count(m.ring))
            throw ParseError("module '" + m.name + "' references unknown ring '" + m.ring + "'",
                             m.line, 1);
        if (m.name == "k" || m.name == "R" || m.name == "E")
            throw ParseError("module name '" + m.name + "' is reserved", m.line, 1);
        if (!mod_names.insert({m.ring, m.name}).second)
            throw ParseError("duplicate module name '" + m.name + "' in ring '" + m.ring + "'",
                             m.line, 1);
        if (m.matrix.empty() && !m.has_gens)
            throw ParseError("module '" + m.name + "' needs a matrix or gens", m.line, 1);
        for (const auto& row : m.matrix)
            if (row.size() != m.matrix[0].size())
                throw ParseError("module '" + m.name + "' matrix rows have uneven length", m.line, 1);
    }
    return out;
}

Corpus load_corpus(const std::string& text) {
    CorpusFile file = parse_corpus_text(text);
    Corpus out;
    for (const auto& rs : file.rings) {
        std::vector<ModuleSpec> mods;
        for (const auto& m : file.modules)
            if (m.ring == rs.name) mods.push_back(m);
        try {
            if (rs.characteristic == 0) {
                QQ q;
                auto ring = build_algebra(q, rs.vars, rs.ideal);
                out.instances.push_back(Instance<QQ>(rs, ring, std::move(mods)));
            } else {
                GF f((uint32_t)rs.characteristic);
                auto ring = build_algebra(f, rs.vars, rs.ideal);
                out.instances.push_back(Instance<GF>(rs, ring, std::move(mods)));
            }
        } catch (const NotMPrimaryError& e) {
            throw NotMPrimaryError("ring '" + rs.name + "': " + e.what());
        } catch (const ConstantTermError& e) {
            throw ConstantTermError("ring '" + rs.name + "': " + e.what());
        }
    }
    return out;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw HomologError("cannot open corpus file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_corpus(ss.str());
}

} // namespace homolog
