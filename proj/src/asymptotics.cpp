#include "homolog/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "homolog/field.hpp"
#include "homolog/linalg.hpp"

namespace homolog {

std::string CxValue::to_string() const {
    switch (kind) {
        case Exact: return "exact(" + std::to_string(b) + ")";
        case AtLeast: return "at_least(" + std::to_string(b) + ")";
        case Infinite: return "infinite";
        default: return "inconclusive";
    }
}

std::string CurvValue::to_string() const {
    if (kind == Exact) return "exact(" + rho.get_str() + ")";
    std::ostringstream os;
    os << "estimate(" << est << ", window=" << window << ")";
    return os.str();
}

std::optional<std::vector<mpq_class>> detect_recurrence(const InvariantSequence& s) {
    const int len = (int)s.size();
    if (len < 6) return std::nullopt;
    const int max_order = len / 2 - 1;
    QQ q;
    for (int r = 1; r <= max_order; ++r) {
        Mat<QQ> A(len - r, r);
        std::vector<mpq_class> b(len - r);
        for (int t = r; t < len; ++t) {
            for (int j = 0; j < r; ++j) A.at(t - r, j) = mpq_class((long)s.values[t - 1 - j]);
            b[t - r] = mpq_class((long)s.values[t]);
        }
        auto x = solve(q, A, b);
        if (x) return *x;
    }
    return std::nullopt;
}

namespace {

using QPoly = std::vector<mpq_class>; // ascending coefficients

void poly_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// characteristic polynomial t^r - sum c_j t^{r-1-j}, ascending coefficients
QPoly char_poly(const std::vector<mpq_class>& rec) {
    const int r = (int)rec.size();
    QPoly p(r + 1);
    p[r] = 1;
    for (int j = 0; j < r; ++j) p[r - 1 - j] = -rec[j];
    return p;
}

mpq_class eval_poly(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

QPoly poly_derivative(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * mpq_class((long)i));
    poly_trim(d);
    return d;
}

// remainder of a / b (b nonzero)
QPoly poly_rem(QPoly a, const QPoly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

QPoly poly_monic(QPoly p) {
    poly_trim(p);
    if (p.empty()) return p;
    mpq_class f = p.back();
    for (auto& c : p) c /= f;
    return p;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// exact quotient a / b when b | a
QPoly poly_quot(QPoly a, const QPoly& b) {
    poly_trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return q;
}

// multiplicity of root `x`
int root_multiplicity(QPoly p, const mpq_class& x) {
    int m = 0;
    while (p.size() > 1 && sgn(eval_poly(p, x)) == 0) {
        QPoly q(p.size() - 1);
        mpq_class carry = 0;
        for (int i = (int)p.size() - 1; i >= 1; --i) {
            carry = p[i] + carry * x;
            q[i - 1] = carry;
        }
        p = std::move(q);
        ++m;
    }
    return m;
}

struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const QPoly& squarefree) {
        seq.push_back(squarefree);
        QPoly d = poly_derivative(squarefree);
        if (!d.empty()) seq.push_back(d);
        while (seq.back().size() > 1) {
            QPoly r = poly_rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations_at(const mpq_class& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sgn(eval_poly(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_inf() const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            if (p.empty()) continue;
            int s = sgn(p.back());
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // number of real roots in (x, +inf)
    int roots_above(const mpq_class& x) const { return variations_at(x) - variations_at_inf(); }
};

// simplest rational (smallest denominator) in the closed interval [lo, hi]
mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi) {
    mpz_class fl = mpz_class(lo.get_num() / lo.get_den());
    if (lo < 0 && lo != mpq_class(fl)) fl -= 1; // floor for negatives
    if (mpq_class(fl) >= lo) {
        if (mpq_class(fl) <= hi) return mpq_class(fl);
    } else if (mpq_class(fl + 1) <= hi) {
        return mpq_class(fl + 1);
    }
    // now fl < lo <= hi < fl + 1
    mpq_class rlo = mpq_class(1) / (hi - mpq_class(fl));
    mpq_class rhi = mpq_class(1) / (lo - mpq_class(fl));
    mpq_class inner = simplest_rational(rlo, rhi);
    mpq_class out = mpq_class(fl) + mpq_class(1) / inner;
    out.canonicalize();
    return out;
}

// Largest real root of the characteristic polynomial, certified exactly if
// rational. For non-negative linearly recurrent integer sequences the
// dominant root modulus is attained at the largest positive real root, so
// this certifies the curvature.
std::optional<mpq_class> certified_dominant_root(const QPoly& p_in, std::string& diag) {
    QPoly p = p_in;
    poly_trim(p);
    // factor out roots at zero
    size_t z = 0;
    while (z < p.size() && sgn(p[z]) == 0) ++z;
    p.erase(p.begin(), p.begin() + z);
    if (p.size() <= 1) return mpq_class(0); // only roots at zero

    QPoly d = poly_derivative(p);
    QPoly g = poly_gcd(p, d);
    QPoly sf = g.size() <= 1 ? poly_monic(p) : poly_monic(poly_quot(p, g));

    // Cauchy bound on root modulus
    mpq_class bound = 0;
    for (size_t i = 0; i + 1 < sf.size(); ++i) {
        mpq_class m = abs(sf[i] / sf.back());
        if (m > bound) bound = m;
    }
    bound += 1;

    SturmChain chain(sf);
    if (chain.roots_above(-bound) == 0) {
        diag += "no real roots; ";
        return std::nullopt;
    }
    mpq_class lo = -bound, hi = bound;
    // invariant: at least one root in (lo, hi]; shrink to the largest
    for (int iter = 0; iter < 220; ++iter) {
        mpq_class mid = (lo + hi) / 2;
        if (chain.roots_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
        if (iter >= 40 && iter % 20 == 0) {
            mpq_class cand = simplest_rational(lo, hi);
            if (sgn(eval_poly(p, cand)) == 0 && chain.roots_above(cand) == 0) return cand;
        }
    }
    diag += "largest real root not certified rational; ";
    return std::nullopt;
}

int trailing_zeros(const std::vector<long long>& v) {
    int n = 0;
    for (int i = (int)v.size() - 1; i >= 0 && v[i] == 0; --i) ++n;
    return n;
}

// The recurrence extension must stay non-negative for the dominance
// argument; probe a stretch of it.
bool extension_nonnegative(const std::vector<long long>& prefix,
                           const std::vector<mpq_class>& rec, int steps) {
    const int r = (int)rec.size();
    std::vector<mpq_class> a;
    for (long long v : prefix) a.emplace_back((long)v);
    for (int t = (int)a.size(); t < (int)prefix.size() + steps; ++t) {
        mpq_class acc = 0;
        for (int j = 0; j < r; ++j) acc += rec[j] * a[t - 1 - j];
        if (sgn(acc) < 0) return false;
        a.push_back(acc);
    }
    return true;
}

} // namespace

CurvValue curv_window_estimate(const InvariantSequence& s) {
    const int len = (int)s.size();
    const int window = (len + 2) / 3;
    double best = 0.0;
    for (int n = std::max(1, len - window); n < len; ++n)
        if (s.values[n] > 0)
            best = std::max(best, std::exp(std::log((double)s.values[n]) / n));
    return CurvValue::estimate(best, window);
}

AsymptoticsReport analyze(const InvariantSequence& s) {
    const int len = (int)s.size();
    if (len < 4) throw TooShortError("analyze needs at least 4 entries, got " + std::to_string(len));
    AsymptoticsReport rep;
    const int window = (len + 2) / 3;

    if (trailing_zeros(s.values) >= window) {
        rep.cx = CxValue::exact(0);
        rep.curv = CurvValue::exact(0);
        rep.diagnostics = "tail of the prefix is zero";
        return rep;
    }

    rep.recurrence = detect_recurrence(s);
    if (rep.recurrence) {
        auto p = char_poly(*rep.recurrence);
        std::string diag;
        if (!extension_nonnegative(s.values, *rep.recurrence, 120)) {
            diag += "recurrence extension goes negative; ";
        } else if (auto root = certified_dominant_root(p, diag)) {
            if (*root < 1) {
                rep.cx = CxValue::exact(0);
                rep.curv = CurvValue::exact(0);
                rep.diagnostics = "dominant root " + root->get_str() + " < 1: eventually zero";
            } else if (*root == 1) {
                int m = root_multiplicity(p, mpq_class(1));
                rep.cx = CxValue::exact(m);
                rep.curv = CurvValue::exact(mpq_class(1));
                rep.diagnostics = "dominant root 1 with multiplicity " + std::to_string(m);
            } else {
                rep.cx = CxValue::infinite();
                rep.curv = CurvValue::exact(*root);
                rep.diagnostics = "dominant root " + root->get_str() + " > 1";
            }
            return rep;
        }
        rep.diagnostics = "recurrence found; " + diag;
    }

    // estimator path
    rep.curv = curv_window_estimate(s);

    // successive finite differences: largest j whose difference sequence has
    // an all-positive tail gives the lower bound cx >= j + 1
    std::vector<long long> d = s.values;
    int jstar = -1;
    for (int j = 0; j <= 8 && (int)d.size() >= 3; ++j) {
        int tail = std::max(2, (int)d.size() / 3);
        bool pos = true;
        for (int i = (int)d.size() - tail; i < (int)d.size(); ++i)
            if (d[i] <= 0) { pos = false; break; }
        if (!pos) break;
        jstar = j;
        std::vector<long long> nd(d.size() - 1);
        for (size_t i = 0; i + 1 < d.size(); ++i) nd[i] = d[i + 1] - d[i];
        d = std::move(nd);
    }
    rep.cx = jstar >= 0 ? CxValue::at_least(jstar + 1) : CxValue::inconclusive();
    rep.diagnostics += "estimator: trailing-window limsup with window " + std::to_string(window);
    return rep;
}

std::optional<bool> cx_le(const CxValue& a, const CxValue& b) {
    if (a.kind == CxValue::Infinite && b.kind == CxValue::Infinite) return true;
    if (a.kind == CxValue::Exact && b.kind == CxValue::Infinite) return true;
    if (a.kind == CxValue::Infinite && b.kind == CxValue::Exact) return false;
    if (a.kind == CxValue::Exact && b.kind == CxValue::Exact) return a.b <= b.b;
    return std::nullopt;
}

std::optional<bool> cx_eq(const CxValue& a, const CxValue& b) {
    if (a.is_exact() && b.is_exact())
        return a.kind == b.kind && (a.kind != CxValue::Exact || a.b == b.b);
    return std::nullopt;
}

std::optional<bool> cx_le_plus_one(const CxValue& a, const CxValue& b) {
    if (b.kind == CxValue::Infinite) return a.is_exact() ? std::optional<bool>(true) : std::nullopt;
    if (a.kind == CxValue::Infinite && b.kind == CxValue::Exact) return false;
    if (a.kind == CxValue::Exact && b.kind == CxValue::Exact) return a.b <= b.b + 1;
    return std::nullopt;
}

std::optional<bool> curv_le(const CurvValue& a, const CurvValue& b) {
    if (a.is_exact() && b.is_exact()) return a.rho <= b.rho;
    return std::nullopt;
}

std::optional<bool> curv_eq(const CurvValue& a, const CurvValue& b) {
    if (a.is_exact() && b.is_exact()) return a.rho == b.rho;
    return std::nullopt;
}

std::optional<bool> curv_le_sup(const CurvValue& a, const mpq_class& q, const CurvValue& b) {
    if (!a.is_exact()) return std::nullopt;
    if (a.rho <= q) return true;
    if (b.is_exact()) return a.rho <= (b.rho > q ? b.rho : q);
    return std::nullopt;
}

std::optional<bool> curv_le_one(const CurvValue& a) {
    if (a.is_exact()) return a.rho <= 1;
    return std::nullopt;
}

namespace {

std::optional<bool> opt_and(std::optional<bool> a, std::optional<bool> b) {
    if (a && b) return *a && *b;
    if (a && !*a) return false;
    if (b && !*b) return false;
    return std::nullopt;
}

LemmaCheckResult conclude(std::optional<bool> ok) {
    LemmaCheckResult r;
    if (!ok) {
        r.status = LemmaCheckResult::Inconclusive;
        r.detail = "conclusion needs exact reports on both sides";
    } else if (*ok) {
        r.status = LemmaCheckResult::Pass;
    } else {
        r.status = LemmaCheckResult::Fail;
    }
    return r;
}

// sup of two cx values (for the sum lemma)
std::optional<bool> cx_le_sup2(const CxValue& a, const CxValue& x, const CxValue& y) {
    if (x.kind == CxValue::Infinite || y.kind == CxValue::Infinite)
        return a.is_exact() ? std::optional<bool>(true) : std::nullopt;
    if (x.kind == CxValue::Exact && y.kind == CxValue::Exact) {
        CxValue s = CxValue::exact(std::max(x.b, y.b));
        return cx_le(a, s);
    }
    return std::nullopt;
}

std::optional<bool> curv_le_sup2(const CurvValue& a, const CurvValue& x, const CurvValue& y) {
    if (!a.is_exact() || !x.is_exact() || !y.is_exact()) return std::nullopt;
    return a.rho <= (x.rho > y.rho ? x.rho : y.rho);
}

} // namespace

LemmaCheckResult check_sequence_lemma(const std::string& lemma_id, const LemmaInputs& in) {
    LemmaCheckResult r;
    const auto& x = in.x.values;
    const auto& y = in.y.values;

    if (lemma_id == "domination") {
        // hypothesis: x_n <= w (y_n + y_{n-1}) for n >= 1
        size_t n = std::min(x.size(), y.size());
        for (size_t i = 1; i < n; ++i) {
            if (mpq_class((long)x[i]) > in.w * (mpq_class((long)y[i]) + mpq_class((long)y[i - 1]))) {
                r.status = LemmaCheckResult::HypothesisFailed;
                r.counterexample = (long long)i;
                return r;
            }
        }
        auto ra = analyze(in.x), rb = analyze(in.y);
        return conclude(opt_and(cx_le(ra.cx, rb.cx), curv_le(ra.curv, rb.curv)));
    }

    if (lemma_id == "recursion-bound") {
        // hypothesis: x_{n+1} <= b x_n + a y_n
        size_t n = std::min(x.size(), y.size());
        for (size_t i = 0; i + 1 < n; ++i) {
            if (mpq_class((long)x[i + 1]) >
                in.b * mpq_class((long)x[i]) + in.a * mpq_class((long)y[i])) {
                r.status = LemmaCheckResult::HypothesisFailed;
                r.counterexample = (long long)i;
                return r;
            }
        }
        auto ra = analyze(in.x), rb = analyze(in.y);
        return conclude(curv_le_sup(ra.curv, in.b, rb.curv));
    }

    if (lemma_id == "shift-sum") {
        // y_n := a x_{n+1} + b x_n has the same curvature as x (a, b > 0).
        if (!(in.a > 0 && in.b > 0)) {
            r.status = LemmaCheckResult::HypothesisFailed;
            return r;
        }
        // scale through by the common denominator; scaling preserves cx/curv
        mpz_class den = lcm(in.a.get_den(), in.b.get_den());
        mpq_class as = in.a * den, bs = in.b * den;
        std::vector<long long> z(x.size() - 1);
        for (size_t i = 0; i + 1 < x.size(); ++i) {
            mpq_class v = as * (long)x[i + 1] + bs * (long)x[i];
            z[i] = (long long)mpz_class(v.get_num()).get_si();
        }
        auto rx = analyze(in.x), rz = analyze(InvariantSequence(z, "shift-sum"));
        return conclude(curv_eq(rz.curv, rx.curv));
    }

    if (lemma_id == "sum") {
        size_t n = std::min(x.size(), y.size());
        std::vector<long long> z(n);
        for (size_t i = 0; i < n; ++i) z[i] = x[i] + y[i];
        auto rx = analyze(in.x), ry = analyze(in.y), rz = analyze(InvariantSequence(z, "sum"));
        return conclude(opt_and(cx_le_sup2(rz.cx, rx.cx, ry.cx),
                                curv_le_sup2(rz.curv, rx.curv, ry.curv)));
    }

    if (lemma_id == "laurent") {
        // a_n := sum_i y_{n+i} c_i with P nonzero, non-negative; then
        // cx(y) <= cx(a) and curv(y) <= curv(a).
        bool nonzero = false;
        for (long long c : in.poly) {
            if (c < 0) {
                r.status = LemmaCheckResult::HypothesisFailed;
                return r;
            }
            if (c > 0) nonzero = true;
        }
        if (!nonzero || in.poly.size() > y.size()) {
            r.status = LemmaCheckResult::HypothesisFailed;
            return r;
        }
        size_t n = y.size() - (in.poly.size() - 1);
        std::vector<long long> a(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < in.poly.size(); ++j) a[i] += y[i + j] * in.poly[j];
        auto ry = analyze(in.y), ra = analyze(InvariantSequence(a, "laurent"));
        return conclude(opt_and(cx_le(ry.cx, ra.cx), curv_le(ry.curv, ra.curv)));
    }

    throw UnknownCheckError("unknown sequence lemma '" + lemma_id + "'");
}

} // namespace homolog
