#pragma once

#include <numeric>
#include <vector>

#include "specht/error.hpp"

namespace specht {

/// Permutation of {1..n}. Everything acts on the right: s * pi = pi.apply(s),
/// and (pi * sigma) means "pi, then sigma".
class Perm {
public:
    Perm() : img_(1, 0) {}
    explicit Perm(int n) : img_(n + 1) { std::iota(img_.begin(), img_.end(), 0); }
    static Perm from_images(std::vector<int> images_1based) {
        Perm p;
        p.img_ = std::move(images_1based);
        return p;
    }
    static Perm transposition(int n, int i, int j) {
        require(1 <= i && i <= n && 1 <= j && j <= n && i != j, "transposition: bad indices");
        Perm p(n);
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }
    /// The n-cycle (1 2 ... m) inside Sigma_n.
    static Perm cycle(int n, int m) {
        require(m <= n, "cycle: m > n");
        Perm p(n);
        for (int i = 1; i < m; ++i) p.img_[i] = i + 1;
        if (m >= 1) p.img_[m] = 1;
        return p;
    }

    int n() const { return static_cast<int>(img_.size()) - 1; }
    int apply(int s) const { return img_[s]; }

    friend Perm operator*(const Perm& a, const Perm& b) {
        require(a.n() == b.n(), "Perm: degree mismatch in composition");
        Perm r(a.n());
        for (int s = 1; s <= a.n(); ++s) r.img_[s] = b.img_[a.img_[s]];
        return r;
    }
    Perm inverse() const {
        Perm r(n());
        for (int s = 1; s <= n(); ++s) r.img_[img_[s]] = s;
        return r;
    }
    int sign() const {
        std::vector<bool> seen(img_.size(), false);
        int sgn = 1;
        for (int s = 1; s <= n(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (int x = s; !seen[x]; x = img_[x]) {
                seen[x] = true;
                ++len;
            }
            if (len % 2 == 0) sgn = -sgn;
        }
        return sgn;
    }
    bool is_identity() const {
        for (int s = 1; s <= n(); ++s)
            if (img_[s] != s) return false;
        return true;
    }
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }

private:
    std::vector<int> img_; // img_[0] unused
};

/// Sum of the transpositions of Sigma_n that are not in Sigma_m.
/// m = 0 gives E_n; m = n-1 gives the Jucys-Murphy element L_n.
struct TranspositionSum {
    int n = 0;
    int excluded_m = 0;

    TranspositionSum(int n_, int m_) : n(n_), excluded_m(m_) {
        require(n_ >= 1 && 0 <= m_ && m_ < n_, "TranspositionSum: need 0 <= m < n");
    }
    static TranspositionSum E(int n) { return TranspositionSum(n, 0); }
    static TranspositionSum L(int n) { return TranspositionSum(n, n - 1); }

    /// Transpositions (i j), i<j<=n, with j > m, in lex order.
    std::vector<std::pair<int, int>> transpositions() const {
        std::vector<std::pair<int, int>> out;
        for (int j = excluded_m + 1; j <= n; ++j)
            for (int i = 1; i < j; ++i) out.emplace_back(i, j);
        return out;
    }
};

} // namespace specht
