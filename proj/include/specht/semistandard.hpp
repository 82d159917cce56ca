#pragma once

#include <vector>

#include "specht/partition.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// Semistandard alpha-set of type beta for the one-box shift moving the
/// removable node of row a to the addable node of row b. Members X satisfy
/// a in X, X subset of {a..b-1}, and u in X with alpha_u = alpha_{u+1}
/// forces u+1 in X. The attached bijection is the cycle (u_1,...,u_m,b).
struct SemistandardSet {
    Partition alpha;
    int a = 0;
    int b = 0;
    std::vector<int> members; // sorted ascending

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int u) const {
        return std::binary_search(members.begin(), members.end(), u);
    }

    void validate() const {
        one_box_shift(alpha, a, b); // validates the (a,b) context
        require(!members.empty() && members.front() == a, "SemistandardSet: must contain a");
        for (std::size_t i = 0; i < members.size(); ++i) {
            int u = members[i];
            require(u >= a && u <= b - 1, "SemistandardSet: member out of {a..b-1}");
            if (i) require(members[i - 1] < u, "SemistandardSet: members must be strictly increasing");
            if (alpha.part(u) == alpha.part(u + 1))
                require(contains(u + 1), "SemistandardSet: u in X with alpha_u = alpha_{u+1} forces u+1");
        }
    }

    /// T-hat on {a..b-1}: next member along the cycle, b after the last; fixes
    /// non-members.
    int hat(int u) const {
        require(u >= a && u <= b - 1, "hat: argument out of {a..b-1}");
        auto it = std::lower_bound(members.begin(), members.end(), u);
        if (it == members.end() || *it != u) return u;
        ++it;
        return it == members.end() ? b : *it;
    }

    /// Inverse on {a+1..b}: previous member of the cycle; fixes non-members.
    int hat_inverse(int j) const {
        require(j >= a + 1 && j <= b, "hat_inverse: argument out of {a+1..b}");
        if (j == b) return members.back();
        auto it = std::lower_bound(members.begin(), members.end(), j);
        if (it == members.end() || *it != j) return j;
        require(it != members.begin(), "hat_inverse: no preimage");
        return *(it - 1);
    }

    friend bool operator==(const SemistandardSet& x, const SemistandardSet& y) {
        return x.alpha == y.alpha && x.a == y.a && x.b == y.b && x.members == y.members;
    }
    friend bool operator<(const SemistandardSet& x, const SemistandardSet& y) {
        return x.members < y.members;
    }
};

/// Tableau from a set: T(i,j) = i except at the row ends (i, alpha_i) for
/// a <= i <= b-1, which carry T-hat(i).
inline Tableau tableau_from_set(const SemistandardSet& s) {
    s.validate();
    Tableau t = tableau_of_shape(s.alpha.parts());
    for (int i = 1; i <= s.alpha.rows(); ++i)
        for (int j = 1; j <= s.alpha.part(i); ++j) t.set(i, j, i);
    for (int i = s.a; i <= std::min(s.b - 1, s.alpha.rows()); ++i)
        if (s.alpha.part(i) >= 1) t.set(i, s.alpha.part(i), s.hat(i));
    return t;
}

/// Set from a semistandard tableau of one-box-shift type: chase the cycle of
/// row-end entries starting at a.
inline SemistandardSet set_from_tableau(const Tableau& t, const Partition& alpha, int a, int b) {
    SemistandardSet s{alpha, a, b, {}};
    int u = a;
    while (u < b) {
        s.members.push_back(u);
        int next = t.at(u, alpha.part(u));
        require(next > u, "set_from_tableau: row-end entries must increase along the cycle");
        u = next;
    }
    require(u == b, "set_from_tableau: cycle must end at b");
    s.validate();
    return s;
}

/// Number of semistandard alpha-tableaux of type beta: product of (m_i + 1)
/// over part sizes i with alpha_b < i < alpha_a, m_i the multiplicity of i.
inline long long count_semistandard_one_box(const Partition& alpha, int a, int b) {
    one_box_shift(alpha, a, b);
    long long count = 1;
    for (int v = alpha.part(b) + 1; v < alpha.part(a); ++v) {
        long long m = 0;
        for (int i = 1; i <= alpha.rows(); ++i)
            if (alpha.part(i) == v) ++m;
        count *= m + 1;
    }
    return count;
}

/// All semistandard sets, in the paper's display order: rows a+1..b-1 split
/// into maximal runs of constant part size; each run contributes a suffix,
/// counted mixed-radix with the topmost run most significant.
inline std::vector<SemistandardSet> enumerate_semistandard_sets(const Partition& alpha, int a,
                                                                int b) {
    one_box_shift(alpha, a, b);
    std::vector<std::pair<int, int>> runs; // [first,last] rows of constant part size
    int i = a + 1;
    while (i <= b - 1) {
        int j = i;
        while (j + 1 <= b - 1 && alpha.part(j + 1) == alpha.part(i)) ++j;
        runs.emplace_back(i, j);
        i = j + 1;
    }
    std::vector<SemistandardSet> out;
    std::vector<int> suffix(runs.size(), 0); // suffix length chosen per run
    for (;;) {
        SemistandardSet s{alpha, a, b, {a}};
        for (std::size_t k = 0; k < runs.size(); ++k)
            for (int u = runs[k].second - suffix[k] + 1; u <= runs[k].second; ++u)
                s.members.push_back(u);
        std::sort(s.members.begin(), s.members.end());
        s.validate();
        out.push_back(s);
        int k = static_cast<int>(runs.size()) - 1;
        while (k >= 0) {
            if (suffix[k] < runs[k].second - runs[k].first + 1) {
                suffix[k]++;
                break;
            }
            suffix[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

inline std::vector<std::pair<SemistandardSet, Tableau>> enumerate_semistandard_one_box(
    const Partition& alpha, int a, int b) {
    std::vector<std::pair<SemistandardSet, Tableau>> out;
    for (const auto& s : enumerate_semistandard_sets(alpha, a, b))
        out.emplace_back(s, tableau_from_set(s));
    return out;
}

/// {R}: rows of removable nodes within {a..b-1}; always a semistandard set.
inline SemistandardSet removable_set(const Partition& alpha, int a, int b) {
    one_box_shift(alpha, a, b);
    SemistandardSet s{alpha, a, b, {}};
    for (int i = a; i <= b - 1; ++i)
        if (alpha.part(i) > alpha.part(i + 1)) s.members.push_back(i);
    s.validate();
    return s;
}

/// T v i: smallest semistandard set containing {T} and i+1. Requires
/// T-hat(i) != i; equals T when T-hat(i) = i+1.
inline SemistandardSet join_vee(const SemistandardSet& t, int i) {
    require(i >= t.a && i <= t.b - 1, "join_vee: i out of {a..b-1}");
    require(t.hat(i) != i, "join_vee: requires T-hat(i) != i");
    if (t.hat(i) == i + 1) return t;
    int k = 1;
    while (!(t.alpha.part(i + k) == t.alpha.part(i + 1) &&
             t.alpha.part(i + k) > t.alpha.part(i + k + 1)))
        ++k;
    SemistandardSet s = t;
    for (int u = i + 1; u <= i + k; ++u)
        if (!s.contains(u)) s.members.push_back(u);
    std::sort(s.members.begin(), s.members.end());
    s.validate();
    return s;
}

} // namespace specht
