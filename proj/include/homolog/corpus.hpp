#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "homolog/module.hpp"

namespace homolog {

struct RingSpec {
    std::string name;
    long long characteristic = 0; // 0 = rationals, else a prime
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    bool label_ci = false;
    long long label_codim = 0;
    bool label_gorenstein = false;
    std::string notes;
    int line = 0;
};

struct ModuleSpec {
    std::string name;
    std::string ring;
    std::vector<std::vector<std::string>> matrix; // q rows of p entries
    long long gens = 0;                           // free rank when matrix is []
    bool has_gens = false;
    int line = 0;
};

struct CorpusFile {
    std::vector<RingSpec> rings;
    std::vector<ModuleSpec> modules;
};

// Parse the corpus text format. Throws ParseError with line/column info.
CorpusFile parse_corpus_text(const std::string& text);

// Text of a built-in corpus ("paper-examples"). Deterministic.
std::string builtin_corpus_text(const std::string& name);

// One ring with its modules, realized lazily and cached. "k" and "R" are
// always available; "E" is the Matlis dual of R.
template <class F>
class Instance {
public:
    Instance(RingSpec spec, AlgebraPtr<F> ring, std::vector<ModuleSpec> mods)
        : spec_(std::move(spec)), ring_(std::move(ring)), module_specs_(std::move(mods)) {}

    const RingSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    const AlgebraPtr<F>& ring() const { return ring_; }

    std::vector<std::string> module_names() const {
        std::vector<std::string> out;
        for (const auto& m : module_specs_) out.push_back(m.name);
        return out;
    }

    RealizationPtr<F> module(const std::string& name) const {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        RealizationPtr<F> r;
        if (name == "k") {
            r = residue_field(ring_);
        } else if (name == "R") {
            r = free_module(ring_, 1);
        } else if (name == "E") {
            r = matlis_dual(module("R"));
        } else {
            const ModuleSpec* spec = nullptr;
            for (const auto& m : module_specs_)
                if (m.name == name) spec = &m;
            if (!spec) throw HomologError("unknown module '" + name + "' in instance " + name_str());
            ModulePresentation<F> pres;
            pres.ring = ring_;
            if (spec->matrix.empty()) {
                pres.gens = (int)spec->gens;
            } else {
                pres.gens = (int)spec->matrix[0].size();
                for (const auto& row : spec->matrix) {
                    std::vector<typename ArtinAlgebra<F>::RElem> r2;
                    for (const auto& s : row)
                        r2.push_back(ring_->from_poly(parse_poly(ring_->field(), s, ring_->vars())));
                    pres.relations.push_back(std::move(r2));
                }
            }
            r = realize(pres);
        }
        cache_[name] = r;
        return r;
    }

private:
    std::string name_str() const { return spec_.name; }

    RingSpec spec_;
    AlgebraPtr<F> ring_;
    std::vector<ModuleSpec> module_specs_;
    mutable std::map<std::string, RealizationPtr<F>> cache_;
};

using InstanceVar = std::variant<Instance<GF>, Instance<QQ>>;

struct Corpus {
    std::vector<InstanceVar> instances;
};

inline const std::string& instance_name(const InstanceVar& v) {
    return std::visit([](const auto& inst) -> const std::string& { return inst.name(); }, v);
}

// Build algebras and attach module specs. Throws parse errors and surfaces
// NotMPrimaryError per ring (tagged with the ring name).
Corpus load_corpus(const std::string& text);

Corpus load_corpus_file(const std::string& path);

} // namespace homolog
