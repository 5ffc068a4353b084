#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "homolog/errors.hpp"

namespace homolog {

// Prime field GF(p), p < 2^31. Elements are residues in [0, p) stored as
// uint32_t; the field object carries the modulus and a Barrett constant so
// reduction avoids hardware division in inner loops.
class GF {
public:
    using Elem = uint32_t;

    explicit GF(uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw HomologError("GF modulus must be a prime < 2^31, got " + std::to_string(p));
        magic_ = ~uint64_t(0) / p_;
    }

    uint32_t p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return reduce(uint64_t(a) * b); }

    Elem inv(Elem a) const {
        if (a == 0) throw HomologError("division by zero in GF(p)");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return Elem(r);
    }

    // Barrett-style reduction of a 64-bit product.
    Elem reduce(uint64_t x) const {
        uint64_t q = (uint64_t)(((__uint128_t)x * magic_) >> 64);
        uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return Elem(r);
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const GF& o) const { return p_ == o.p_; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
    uint64_t magic_;
};

// The rationals, backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) through arithmetic.
class QQ {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw HomologError("division by zero in QQ");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(long long v) const { return Elem((long)v); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const QQ&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw HomologError("division by zero in QQ");
        return b;
    }
};

} // namespace homolog
