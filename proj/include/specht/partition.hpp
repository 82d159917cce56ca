#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "specht/error.hpp"
#include "specht/scalars.hpp"

namespace specht {

/// Box (i,j) of a Young diagram, 1-based, row 1 at the top.
struct Node {
    int row = 0;
    int col = 0;
    friend bool operator==(const Node& a, const Node& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const Node& a, const Node& b) { return !(a == b); }
};

/// Weakly decreasing positive parts; zero parts are trimmed on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "Partition: parts must be positive");
            if (i + 1 < parts_.size())
                require(parts_[i] >= parts_[i + 1], "Partition: parts must be weakly decreasing");
        }
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                parts.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw precondition_error("Partition: cannot parse part '" + item + "'");
            }
        }
        require(!parts.empty() || text.empty(), "Partition: empty text");
        return Partition(parts);
    }

    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// part(i) for 1-based i; 0 beyond the last row.
    int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(Node nd) const {
        return nd.row >= 1 && nd.col >= 1 && nd.col <= part(nd.row);
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= part(1); ++j) {
            int len = 0;
            while (len < rows() && parts_[len] >= j) ++len;
            c.push_back(len);
        }
        return Partition(c);
    }

    /// Length of the column through (1, j).
    int col_length(int j) const {
        int len = 0;
        while (len < rows() && parts_[len] >= j) ++len;
        return len;
    }

    /// Sum of contents j-i over the diagram.
    long long content_sum() const {
        long long s = 0;
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= part(i); ++j) s += j - i;
        return s;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

/// residue j-i of a node, reduced to {0,..,p-1} when p > 0.
inline long long residue(Node nd, long long p) {
    require(nd.row >= 1 && nd.col >= 1, "residue: node indices must be >= 1");
    require(p == 0 || is_prime(p), "residue: p must be 0 or prime");
    long long r = nd.col - nd.row;
    return p > 0 ? mod_ll(r, p) : r;
}

/// Removable nodes (a, alpha_a) with alpha_a > alpha_{a+1}, listed top to bottom.
inline std::vector<Node> removable_nodes(const Partition& p) {
    std::vector<Node> out;
    for (int i = 1; i <= p.rows(); ++i)
        if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
    return out;
}

/// Addable nodes (b, alpha_b + 1), listed top to bottom; always includes row rows()+1.
inline std::vector<Node> addable_nodes(const Partition& p) {
    std::vector<Node> out;
    for (int i = 1; i <= p.rows() + 1; ++i)
        if (i == 1 || p.part(i - 1) > p.part(i)) out.push_back({i, p.part(i) + 1});
    return out;
}

inline Partition remove_node(const Partition& p, Node nd) {
    require(p.contains(nd) && nd.col == p.part(nd.row) && p.part(nd.row) > p.part(nd.row + 1),
            "remove_node: not a removable node");
    auto parts = p.parts();
    parts[nd.row - 1] -= 1;
    return Partition(parts);
}

inline Partition add_node(const Partition& p, Node nd) {
    require(nd.col == p.part(nd.row) + 1 && (nd.row == 1 || p.part(nd.row - 1) > p.part(nd.row)),
            "add_node: not an addable node");
    auto parts = p.parts();
    if (nd.row > p.rows()) parts.resize(nd.row, 0);
    parts[nd.row - 1] += 1;
    return Partition(parts);
}

/// Dominance order: every partial sum of a >= the one of b. Requires equal n.
inline bool dominates(const Partition& a, const Partition& b) {
    require(a.n() == b.n(), "dominates: partitions of different n");
    long long sa = 0, sb = 0;
    int rows = std::max(a.rows(), b.rows());
    for (int i = 1; i <= rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

/// beta with beta_a = alpha_a - 1, beta_b = alpha_b + 1 (row b may be new).
inline Partition one_box_shift(const Partition& alpha, int a, int b) {
    require(a >= 1 && b >= 1, "one_box_shift: rows are 1-based");
    require(a < b, "one_box_shift: requires a < b");
    require(b <= alpha.rows() + 1, "one_box_shift: row b beyond the first addable row");
    require(alpha.part(a) > alpha.part(a + 1),
            "one_box_shift: alpha_a > alpha_{a+1} fails (no removable node in row a)");
    require(alpha.part(b - 1) > alpha.part(b),
            "one_box_shift: alpha_{b-1} > alpha_b fails (no addable node in row b)");
    std::vector<int> parts = alpha.parts();
    if (b > alpha.rows()) parts.resize(b, 0);
    parts[a - 1] -= 1;
    parts[b - 1] += 1;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        require(parts[i] >= parts[i + 1], "one_box_shift: result not weakly decreasing");
    return Partition(parts);
}

/// Hook lengths h_1..h_{b-1} in column alpha_b + 1: h_i = alpha_i - alpha_b + b - i - 1.
inline std::vector<long long> hook_lengths_column_b(const Partition& alpha, int b) {
    require(b >= 2 && b <= alpha.rows() + 1, "hook_lengths_column_b: invalid row b");
    std::vector<long long> h;
    for (int i = 1; i <= b - 1; ++i) h.push_back(alpha.part(i) - alpha.part(b) + b - i - 1);
    return h;
}

/// p-core via the abacus on first-column hook lengths (beta-numbers).
inline Partition p_core(const Partition& lam, long long prime) {
    require(is_prime(prime), "p_core: prime required");
    int len = lam.rows();
    std::vector<long long> beta;
    for (int i = 1; i <= len; ++i) beta.push_back(lam.part(i) + (len - i));
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto& b : beta) {
            if (b >= prime && std::find(beta.begin(), beta.end(), b - prime) == beta.end()) {
                b -= prime;
                moved = true;
            }
        }
    }
    std::sort(beta.rbegin(), beta.rend());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) parts.push_back(static_cast<int>(beta[i] - (len - 1 - i)));
    return Partition(parts);
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
    if (max_part < 0 || max_part > n) max_part = n;
    if (n == 0) return {Partition()};
    std::vector<Partition> out;
    for (int first = max_part; first >= 1; --first)
        for (const auto& rest : partitions_of(n - first, first)) {
            std::vector<int> parts = {first};
            parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
            out.emplace_back(parts);
        }
    return out;
}

/// All (a,b) with one_box_shift(alpha,a,b) valid.
inline std::vector<std::pair<int, int>> one_box_shift_pairs(const Partition& alpha) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= alpha.rows(); ++a)
        for (int b = a + 1; b <= alpha.rows() + 1; ++b) {
            try {
                one_box_shift(alpha, a, b);
            } catch (const precondition_error&) {
                continue;
            }
            out.emplace_back(a, b);
        }
    return out;
}

} // namespace specht
