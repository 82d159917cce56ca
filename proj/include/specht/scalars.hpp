#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "specht/error.hpp"

namespace specht {

using Int = mpz_class; ///< arbitrary-precision integer
using Rat = mpq_class; ///< reduced rational with positive denominator (gmp canonical form)

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// p-adic valuation of a nonzero integer; valuation of 0 is reported as -1.
inline int valuation(const Int& x, long long p) {
    if (x == 0) return -1;
    Int y = abs(x);
    int v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
        y /= static_cast<unsigned long>(p);
        ++v;
    }
    return v;
}

inline long long mod_ll(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

/// Prime-field element carrying its modulus; mixing moduli is an error.
struct Fp {
    uint32_t v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(long long value, uint32_t modulus) : p(modulus) {
        require(modulus >= 2, "Fp: modulus must be >= 2");
        v = static_cast<uint32_t>(mod_ll(value, modulus));
    }
    static Fp from_int(const Int& value, uint32_t modulus) {
        Int r = value % static_cast<unsigned long>(modulus);
        long long rr = r.get_si();
        return Fp(rr, modulus);
    }

    bool is_zero() const { return v == 0; }

    friend void same_modulus(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw precondition_error("Fp: mixed scalar domains (moduli differ)");
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        same_modulus(a, b);
        uint64_t s = uint64_t(a.v) + b.v;
        return Fp(static_cast<long long>(s >= a.p ? s - a.p : s), a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        same_modulus(a, b);
        return Fp(static_cast<long long>(a.v + a.p - b.v), a.p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        same_modulus(a, b);
        return Fp(static_cast<long long>((uint64_t(a.v) * b.v) % a.p), a.p);
    }
    Fp operator-() const { return Fp(static_cast<long long>(p - v), p); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        require(v != 0, "Fp: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = v;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return Fp(t, p);
    }
};

/// Field tag/ops over GF(p) on raw uint32 values, for the dense kernels.
struct GFpOps {
    uint32_t p;
    using elem = uint32_t;
    elem zero() const { return 0; }
    elem one() const { return 1 % p; }
    bool is_zero(elem a) const { return a == 0; }
    elem add(elem a, elem b) const { uint64_t s = uint64_t(a) + b; return s >= p ? elem(s - p) : elem(s); }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem mul(elem a, elem b) const { return elem((uint64_t(a) * b) % p); }
    elem inv(elem a) const { return Fp(static_cast<long long>(a), p).inverse().v; }
    elem from_int(const Int& x) const { return Fp::from_int(x, p).v; }
    std::string to_string(elem a) const { return std::to_string(a); }
};

/// Field ops over the rationals (exact), same interface as GFpOps.
struct QQOps {
    using elem = Rat;
    elem zero() const { return Rat(0); }
    elem one() const { return Rat(1); }
    bool is_zero(const elem& a) const { return a == 0; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem inv(const elem& a) const {
        require(a != 0, "QQ: inverse of zero");
        return 1 / a;
    }
    elem from_int(const Int& x) const { return Rat(x); }
    std::string to_string(const elem& a) const { return a.get_str(); }
};

} // namespace specht
