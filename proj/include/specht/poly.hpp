#pragma once

#include <algorithm>
#include <vector>

#include "specht/error.hpp"
#include "specht/linalg.hpp"
#include "specht/scalars.hpp"

namespace specht {

/// Dense polynomial over a field object, little-endian coefficients, no
/// trailing zeros. Only what the x^m - 1 factorizations need.
template <class F>
using Poly = std::vector<typename F::elem>;

template <class F>
void poly_trim(const F& f, Poly<F>& p) {
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
int poly_deg(const Poly<F>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> c(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    poly_trim(f, c);
    return c;
}

/// Remainder and quotient of a by b (b nonzero).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
    require(!b.empty(), "poly_divmod: division by zero polynomial");
    Poly<F> q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, f.zero());
    auto lead_inv = f.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        auto c = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        if (!f.is_zero(c)) {
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        }
        a.pop_back();
        poly_trim(f, a);
        if (a.size() < b.size()) break;
    }
    poly_trim(f, q);
    poly_trim(f, a);
    return {q, a};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(f, a, b).second;
}

template <class F>
Poly<F> poly_monic(const F& f, Poly<F> p) {
    if (p.empty()) return p;
    auto inv = f.inv(p.back());
    for (auto& c : p) c = f.mul(c, inv);
    return p;
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
    poly_trim(f, a);
    poly_trim(f, b);
    while (!b.empty()) {
        auto r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> base, Int e, const Poly<F>& mod) {
    Poly<F> r{f.one()};
    base = poly_mod(f, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(f, poly_mul(f, r, base), mod);
        base = poly_mod(f, poly_mul(f, base, base), mod);
        e >>= 1;
    }
    return r;
}

/// Cyclotomic polynomial over Z (as rationals), by the recursive quotient
/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
inline Poly<QQOps> cyclotomic(int d) {
    QQOps f;
    Poly<QQOps> num(d + 1, f.zero());
    num[0] = Rat(-1);
    num[d] = Rat(1);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) {
            auto [q, r] = poly_divmod(f, num, cyclotomic(e));
            require(r.empty(), "cyclotomic: non-exact division");
            num = q;
        }
    return num;
}

/// Irreducible monic factors of x^m - 1 over Q: the cyclotomics Phi_d, d | m.
inline std::vector<Poly<QQOps>> factor_xm_minus_one(const QQOps&, int m) {
    std::vector<Poly<QQOps>> out;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(cyclotomic(d));
    return out;
}

/// Irreducible monic factors of x^m - 1 over GF(p), p not dividing m (so the
/// polynomial is squarefree). Distinct-degree then Cantor-Zassenhaus splits,
/// derandomized by sweeping a fixed sequence of seed polynomials.
inline std::vector<Poly<GFpOps>> factor_xm_minus_one(const GFpOps& f, int m) {
    require(m % f.p != 0, "factor_xm_minus_one: p divides m (not squarefree)");
    using P = Poly<GFpOps>;
    P xm1(m + 1, 0);
    xm1[0] = f.p - 1;
    xm1[m] = 1;
    std::vector<P> irreducible;
    std::vector<P> work{xm1};
    // distinct-degree: peel gcd(x^{p^d} - x, g)
    std::vector<std::pair<P, int>> equal_degree;
    {
        P g = xm1;
        P x{0, 1};
        P h = x;
        for (int d = 1; poly_deg<GFpOps>(g) > 0; ++d) {
            h = poly_powmod(f, h, Int(f.p), g);
            P hx = h;
            if (hx.size() < 2) hx.resize(2, 0);
            hx[1] = f.sub(hx[1], 1);
            poly_trim(f, hx);
            P d_part = poly_gcd(f, hx, g);
            if (poly_deg<GFpOps>(d_part) > 0) {
                equal_degree.emplace_back(d_part, d);
                g = poly_divmod(f, g, d_part).first;
                h = poly_mod(f, h, g);
            }
            if (poly_deg<GFpOps>(g) > 0 && d + 1 > poly_deg<GFpOps>(g) / 2) {
                equal_degree.emplace_back(poly_monic(f, g), poly_deg<GFpOps>(g));
                break;
            }
        }
    }
    // equal-degree: split products of degree-d irreducibles
    for (auto& [prod, d] : equal_degree) {
        std::vector<P> stack{prod};
        Int pd = 1;
        for (int i = 0; i < d; ++i) pd *= f.p;
        Int e = (pd - 1) / 2;
        unsigned long seed = 1;
        while (!stack.empty()) {
            P g = stack.back();
            stack.pop_back();
            if (poly_deg<GFpOps>(g) == d) {
                irreducible.push_back(poly_monic(f, g));
                continue;
            }
            // deterministic trial elements a(x) of degree < deg g
            bool split_done = false;
            while (!split_done) {
                P a;
                unsigned long s = seed++;
                for (int i = 0; i < poly_deg<GFpOps>(g); ++i) {
                    a.push_back(static_cast<uint32_t>(s % f.p));
                    s = s * 6364136223846793005ul + 1442695040888963407ul;
                }
                poly_trim(f, a);
                if (poly_deg<GFpOps>(a) < 1) continue;
                P b = poly_powmod(f, a, e, g);
                if (!b.empty()) b[0] = f.sub(b[0], 1);
                poly_trim(f, b);
                P h = poly_gcd(f, b, g);
                int dh = poly_deg<GFpOps>(h);
                if (dh > 0 && dh < poly_deg<GFpOps>(g)) {
                    stack.push_back(h);
                    stack.push_back(poly_divmod(f, g, h).first);
                    split_done = true;
                }
            }
        }
    }
    std::sort(irreducible.begin(), irreducible.end());
    return irreducible;
}

/// Evaluate a polynomial at a matrix.
template <class F>
Mat<F> poly_at_matrix(const F& f, const Poly<F>& p, const Mat<F>& A) {
    Mat<F> R = Mat<F>::zero(f, A.rows, A.cols);
    for (std::size_t k = p.size(); k-- > 0;) {
        R = mul(f, R, A);
        if (!f.is_zero(p[k]))
            for (int i = 0; i < A.rows; ++i) R.at(i, i) = f.add(R.at(i, i), p[k]);
    }
    return R;
}

} // namespace specht
