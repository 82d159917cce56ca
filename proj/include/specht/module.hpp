#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/scalars.hpp"
#include "specht/tableau.hpp"

namespace specht {

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const Fp& c) { return c.is_zero(); }

/// Sparse exact vector in the tabloid basis of M^shape (shape a composition).
template <class C>
struct TabVec {
    std::vector<int> shape;
    std::map<std::uint64_t, C> terms; // index -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }

    void add_term(std::uint64_t idx, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms.find(idx);
        if (it == terms.end()) {
            terms.emplace(idx, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    friend bool operator==(const TabVec& x, const TabVec& y) {
        return x.shape == y.shape && x.terms == y.terms;
    }
};

template <class C>
void same_shape(const TabVec<C>& x, const TabVec<C>& y) {
    if (x.shape != y.shape) throw precondition_error("TabVec: module (shape) mismatch");
}

template <class C>
TabVec<C> add_scaled(const TabVec<C>& x, const C& c, const TabVec<C>& y) {
    same_shape(x, y);
    TabVec<C> r = x;
    for (const auto& [idx, v] : y.terms) r.add_term(idx, c * v);
    return r;
}

template <class C>
TabVec<C> scale(const TabVec<C>& x, const C& c) {
    TabVec<C> r{x.shape, {}};
    for (const auto& [idx, v] : x.terms) r.add_term(idx, c * v);
    return r;
}

/// Right action v * pi, tabloid by tabloid.
template <class C>
TabVec<C> act(const TabloidSpace& space, const TabVec<C>& v, const Perm& pi) {
    require(space.shape() == v.shape, "act: vector not in this module");
    require(pi.n() == space.n(), "act: degree mismatch");
    TabVec<C> r{v.shape, {}};
    for (const auto& [idx, c] : v.terms) r.add_term(space.act(idx, pi), c);
    return r;
}

/// v * L for a transposition sum L (degree may embed: L.n <= space degree).
template <class C>
TabVec<C> act_jm(const TabloidSpace& space, const TabVec<C>& v, const TranspositionSum& L) {
    require(space.shape() == v.shape, "act_jm: vector not in this module");
    require(L.n <= space.n(), "act_jm: degree mismatch (transposition sum too large)");
    TabVec<C> r{v.shape, {}};
    for (auto [i, j] : L.transpositions()) {
        Perm tau = Perm::transposition(space.n(), i, j);
        for (const auto& [idx, c] : v.terms) r.add_term(space.act(idx, tau), c);
    }
    return r;
}

/// Orthonormal-tabloid bilinear form <u,v>.
template <class C>
C bilinear_form(const TabVec<C>& u, const TabVec<C>& v) {
    same_shape(u, v);
    std::optional<C> s;
    for (const auto& [idx, c] : u.terms) {
        auto it = v.terms.find(idx);
        if (it == v.terms.end()) continue;
        C p = c * it->second;
        s = s ? *s + p : p;
    }
    return s.value_or(C());
}

template <>
inline Fp bilinear_form<Fp>(const TabVec<Fp>& u, const TabVec<Fp>& v) {
    same_shape(u, v);
    require(!u.terms.empty() || !v.terms.empty(), "bilinear_form<Fp>: cannot infer modulus of two zeros");
    uint32_t p = u.terms.empty() ? v.terms.begin()->second.p : u.terms.begin()->second.p;
    Fp s(0, p);
    for (const auto& [idx, c] : u.terms) {
        auto it = v.terms.find(idx);
        if (it != v.terms.end()) s = s + c * it->second;
    }
    return s;
}

inline TabVec<Fp> reduce_mod(const TabVec<Int>& v, uint32_t p) {
    TabVec<Fp> r{v.shape, {}};
    for (const auto& [idx, c] : v.terms) r.add_term(idx, Fp::from_int(c, p));
    return r;
}

inline TabVec<Rat> to_rational(const TabVec<Int>& v) {
    TabVec<Rat> r{v.shape, {}};
    for (const auto& [idx, c] : v.terms) r.add_term(idx, Rat(c));
    return r;
}

/// Signed column-stabilizer sum e_t = sum_{pi in C_t} sgn(pi) {t pi} of a
/// bijective tableau. More generally, applies C_t^- of `columns` to any word
/// vector, which is how type-beta fillings enter M^beta.
template <class C>
TabVec<C> signed_column_sum(const TabloidSpace& space, const std::vector<int>& word,
                            const std::vector<std::vector<int>>& columns, const C& unit) {
    TabVec<C> r{space.shape(), {}};
    int n = space.n();
    std::vector<int> img(n + 1);
    std::iota(img.begin(), img.end(), 0);
    // iterate the product of symmetric groups on the column symbol sets
    auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
        if (c == columns.size()) {
            std::vector<int> w(n);
            for (int s = 1; s <= n; ++s) w[img[s] - 1] = word[s - 1];
            C coeff = sign > 0 ? unit : (C() - unit);
            r.add_term(space.rank(w), coeff);
            return;
        }
        const auto& syms = columns[c];
        std::vector<int> perm(syms.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int s2 = sign;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) s2 = -s2;
            for (std::size_t i = 0; i < perm.size(); ++i) img[syms[i]] = syms[perm[i]];
            self(self, c + 1, s2);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int s : syms) img[s] = s;
    };
    rec(rec, 0, 1);
    return r;
}

inline std::vector<std::vector<int>> column_symbols(const Tableau& t) {
    std::vector<std::vector<int>> cols;
    int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    for (int j = 1; j <= width; ++j) {
        std::vector<int> c;
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            if (static_cast<int>(t.rows[i].size()) >= j) c.push_back(t.at(static_cast<int>(i) + 1, j));
        cols.push_back(c);
    }
    return cols;
}

/// e_t over Z for a bijective tableau of partition shape.
inline TabVec<Int> polytabloid(const TabloidSpace& space, const Tableau& t) {
    require(t.is_bijective(), "polytabloid: tableau must be bijective");
    require(space.shape() == t.shape, "polytabloid: shape mismatch");
    return signed_column_sum<Int>(space, tabloid_word(t), column_symbols(t), Int(1));
}

// ---------------------------------------------------------------------------
// Standard basis of the Specht module.
//
// In the tabloid order used here, each standard polytabloid e_s has {s} as
// its least tabloid, with coefficient 1, and the leaders are distinct. That
// makes the basis matrix unitriangular, so expansion is a division-free
// forward substitution valid over Z, Q and GF(p) alike, with a definite
// not-in-span verdict.
// ---------------------------------------------------------------------------

class SpechtBasis {
public:
    explicit SpechtBasis(const Partition& shape, int max_n = 12)
        : shape_(shape), space_(shape.parts()) {
        require(shape.n() <= max_n,
                "SpechtBasis: degree " + std::to_string(shape.n()) + " exceeds the guard (" +
                    std::to_string(max_n) + "); raise the cap to override");
        std::vector<Tableau> tabs = standard_tableaux(shape);
        std::map<std::uint64_t, Tableau> by_leader;
        for (auto& t : tabs) by_leader.emplace(space_.rank(tabloid_word(t)), t);
        for (auto& [leader, t] : by_leader) {
            TabVec<Int> e = polytabloid(space_, t);
            check(!e.terms.empty() && e.terms.begin()->first == leader &&
                      e.terms.begin()->second == 1,
                  "SpechtBasis: standard polytabloid is not unitriangular at its leader");
            leaders_.push_back(leader);
            tableaux_.push_back(t);
            polys_.push_back(std::move(e));
        }
    }

    const Partition& shape() const { return shape_; }
    const TabloidSpace& space() const { return space_; }
    int dim() const { return static_cast<int>(polys_.size()); }
    const std::vector<Tableau>& tableaux() const { return tableaux_; }
    const TabVec<Int>& poly(int i) const { return polys_[i]; }
    std::uint64_t leader(int i) const { return leaders_[i]; }

    /// Coefficients of v in the standard basis, or nullopt when v is outside
    /// the span (over the coefficient domain of v).
    template <class C>
    std::optional<std::vector<C>> expand(const TabVec<C>& v) const {
        require(v.shape == space_.shape(), "expand: vector not in M^shape");
        TabVec<C> r = v;
        std::vector<std::pair<int, C>> coeffs;
        while (!r.terms.empty()) {
            std::uint64_t lead = r.terms.begin()->first;
            auto it = std::lower_bound(leaders_.begin(), leaders_.end(), lead);
            if (it == leaders_.end() || *it != lead) return std::nullopt;
            int k = static_cast<int>(it - leaders_.begin());
            C c = r.terms.begin()->second;
            coeffs.emplace_back(k, c);
            for (const auto& [idx, pc] : polys_[k].terms) {
                C delta = c * convert<C>(pc, c);
                r.add_term(idx, -delta);
            }
        }
        std::vector<C> out(dim(), zero_like<C>(v));
        for (auto& [k, c] : coeffs) out[k] = c;
        return out;
    }

    template <class C>
    TabVec<C> vector_of(const std::vector<C>& coeffs) const {
        require(static_cast<int>(coeffs.size()) == dim(), "vector_of: wrong length");
        TabVec<C> r{space_.shape(), {}};
        for (int k = 0; k < dim(); ++k)
            if (!coeff_is_zero(coeffs[k]))
                for (const auto& [idx, pc] : polys_[k].terms)
                    r.add_term(idx, coeffs[k] * convert<C>(pc, coeffs[k]));
        return r;
    }

private:
    template <class C>
    static C convert(const Int& x, const C& like);
    template <class C>
    static C zero_like(const TabVec<C>&) { return C(); }

    Partition shape_;
    TabloidSpace space_;
    std::vector<Tableau> tableaux_;
    std::vector<TabVec<Int>> polys_;
    std::vector<std::uint64_t> leaders_;
};

template <>
inline Int SpechtBasis::convert<Int>(const Int& x, const Int&) { return x; }
template <>
inline Rat SpechtBasis::convert<Rat>(const Int& x, const Rat&) { return Rat(x); }
template <>
inline Fp SpechtBasis::convert<Fp>(const Int& x, const Fp& like) { return Fp::from_int(x, like.p); }
template <>
inline Fp SpechtBasis::zero_like<Fp>(const TabVec<Fp>& v) {
    return v.terms.empty() ? Fp() : Fp(0, v.terms.begin()->second.p);
}

// ---------------------------------------------------------------------------
// Specht series of the restriction S^lambda|_{Sigma_{n-1}} (lambda a partition
// of the module degree, n its largest symbol). Removable nodes are numbered
// top-down; layer i is spanned by the standard polytabloids whose largest
// symbol sits in one of the first i removable nodes, and layer quotients are
// S^{lambda_i} via deletion of that symbol. The quotient shapes increase in
// dominance with i.
// ---------------------------------------------------------------------------

struct SpechtSeriesLayer {
    Node node;                       // removable node (top-down order)
    Partition quotient;              // lambda minus node
    long long node_residue;          // integer residue col - row
    std::vector<int> tableau_indices; // basis indices of this layer's standard tableaux
};

inline Node largest_symbol_node(const Tableau& t) {
    int n = t.n();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            if (t.rows[i][j] == n) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw precondition_error("largest_symbol_node: symbol missing");
}

/// Delete the largest symbol (which sits at a removable node in a standard
/// tableau).
inline Tableau delete_largest(const Tableau& t) {
    Node nd = largest_symbol_node(t);
    Tableau r = t;
    r.rows[nd.row - 1].pop_back();
    r.shape[nd.row - 1] -= 1;
    while (!r.shape.empty() && r.shape.back() == 0) {
        r.shape.pop_back();
        r.rows.pop_back();
    }
    return r;
}

inline std::vector<SpechtSeriesLayer> specht_series_restriction(const SpechtBasis& B) {
    const Partition& lam = B.shape();
    std::vector<Node> rem = removable_nodes(lam);
    require(!rem.empty(), "specht_series_restriction: shape has no removable node");
    std::vector<SpechtSeriesLayer> layers;
    for (const Node& nd : rem)
        layers.push_back({nd, remove_node(lam, nd), residue(nd, 0), {}});
    for (int k = 0; k < B.dim(); ++k) {
        Node nd = largest_symbol_node(B.tableaux()[k]);
        for (auto& layer : layers)
            if (layer.node == nd) layer.tableau_indices.push_back(k);
    }
    return layers;
}

} // namespace specht
