#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "specht/partition.hpp"
#include "specht/permutation.hpp"

namespace specht {

/// Filling of a Young diagram with symbols from {1..n}, repeats allowed.
struct Tableau {
    std::vector<int> shape;             // composition of n (row lengths)
    std::vector<std::vector<int>> rows; // entries, rows[i].size() == shape[i]

    int n() const {
        int s = 0;
        for (int p : shape) s += p;
        return s;
    }
    int at(int i, int j) const { return rows[i - 1][j - 1]; } // 1-based
    void set(int i, int j, int v) { rows[i - 1][j - 1] = v; }

    /// Content vector: type()[k-1] = number of entries equal to k.
    std::vector<int> type() const {
        int maxsym = 0;
        for (const auto& r : rows)
            for (int v : r) maxsym = std::max(maxsym, v);
        std::vector<int> t(maxsym, 0);
        for (const auto& r : rows)
            for (int v : r) t[v - 1]++;
        return t;
    }

    bool is_bijective() const {
        std::vector<int> seen(n() + 1, 0);
        for (const auto& r : rows)
            for (int v : r) {
                if (v < 1 || v > n() || seen[v]) return false;
                seen[v] = 1;
            }
        return true;
    }

    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
                if (i > 0 && rows[i - 1].size() > j && rows[i][j] <= rows[i - 1][j]) return false;
            }
        return true;
    }

    bool is_standard() const {
        if (!is_bijective()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 1; j < rows[i].size(); ++j)
                if (rows[i][j] <= rows[i][j - 1]) return false;
        for (std::size_t i = 1; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[i][j] <= rows[i - 1][j]) return false;
        return true;
    }

    /// Compact text form: rows joined by '/', symbols by ','; "1,2,3/4,5/6".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) s += '/';
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows[i][j]);
            }
        }
        return s;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape == b.shape && a.rows == b.rows;
    }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        return a.rows < b.rows;
    }
};

inline Tableau tableau_of_shape(const std::vector<int>& shape) {
    Tableau t;
    t.shape = shape;
    for (int p : shape) t.rows.emplace_back(p, 0);
    return t;
}

/// 1,2,...,alpha_1 in row 1, then continuing row by row.
inline Tableau row_reading_tableau(const Partition& shape) {
    Tableau t = tableau_of_shape(shape.parts());
    int s = 1;
    for (auto& r : t.rows)
        for (auto& v : r) v = s++;
    return t;
}

inline Tableau parse_tableau(const std::string& text, const std::vector<int>& shape) {
    Tableau t;
    t.shape = shape;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, '/')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ','))
            if (!item.empty()) r.push_back(std::stoi(item));
        t.rows.push_back(r);
    }
    require(t.rows.size() == shape.size(), "parse_tableau: wrong number of rows");
    for (std::size_t i = 0; i < shape.size(); ++i)
        require(static_cast<int>(t.rows[i].size()) == shape[i], "parse_tableau: row length mismatch");
    return t;
}

/// All standard tableaux of a partition shape, grown symbol by symbol.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau t = tableau_of_shape(shape.parts());
    std::vector<int> filled(shape.rows(), 0); // boxes filled per row
    auto rec = [&](auto&& self, int sym) -> void {
        if (sym > shape.n()) {
            out.push_back(t);
            return;
        }
        for (int i = 0; i < shape.rows(); ++i) {
            if (filled[i] >= shape.part(i + 1)) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;
            t.rows[i][filled[i]++] = sym;
            self(self, sym + 1);
            filled[i]--;
        }
    };
    rec(rec, 1);
    return out;
}

/// All semistandard tableaux of the given shape and content (exhaustive).
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape,
                                                  const std::vector<int>& content) {
    std::vector<Tableau> out;
    Tableau t = tableau_of_shape(shape.parts());
    std::vector<int> remaining = content;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i > shape.rows()) {
            out.push_back(t);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj > shape.part(i)) {
            ni = i + 1;
            nj = 1;
        }
        int lo = (j > 1) ? t.at(i, j - 1) : 1;
        if (i > 1 && shape.part(i - 1) >= j) lo = std::max(lo, t.at(i - 1, j) + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            remaining[v - 1]--;
            t.set(i, j, v);
            self(self, ni, nj);
            remaining[v - 1]++;
        }
    };
    if (shape.n() == 0)
        out.push_back(t);
    else
        rec(rec, 1, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Tabloids.
//
// A tabloid of shape nu (a composition of n, parts >= 0) is an ordered
// partition of {1..n} with |row i| = nu_i. We store it as its "row word":
// word[s-1] = 1-based row containing symbol s. Basis order is lexicographic
// on the row word, which coincides with lexicographic comparison of the
// sequences of sorted rows.
// ---------------------------------------------------------------------------

class TabloidSpace {
public:
    explicit TabloidSpace(std::vector<int> shape) : shape_(std::move(shape)) {
        n_ = 0;
        for (int p : shape_) {
            require(p >= 0, "TabloidSpace: negative part");
            n_ += p;
        }
        dim_ = multinomial(shape_);
    }

    const std::vector<int>& shape() const { return shape_; }
    int n() const { return n_; }
    std::uint64_t dim() const { return dim_; }

    static std::uint64_t multinomial(const std::vector<int>& counts) {
        std::uint64_t r = 1;
        int seen = 0;
        for (int c : counts)
            for (int i = 1; i <= c; ++i) {
                r = r * (++seen) / i; // binomial(seen, i) stays integral
            }
        return r;
    }

    std::uint64_t rank(const std::vector<int>& word) const {
        std::vector<int> cnt(shape_.size(), 0);
        for (std::size_t i = 0; i < shape_.size(); ++i) cnt[i] = shape_[i];
        std::uint64_t idx = 0;
        std::uint64_t m = dim_;
        int remaining = n_;
        for (int s = 0; s < n_; ++s) {
            int w = word[s] - 1;
            for (int v = 0; v < w; ++v)
                if (cnt[v] > 0) idx += m * cnt[v] / remaining;
            m = m * cnt[w] / remaining;
            cnt[w]--;
            remaining--;
        }
        return idx;
    }

    std::vector<int> unrank(std::uint64_t idx) const {
        std::vector<int> cnt = shape_;
        std::vector<int> word(n_);
        std::uint64_t m = dim_;
        int remaining = n_;
        for (int s = 0; s < n_; ++s) {
            for (int v = 0; v < static_cast<int>(cnt.size()); ++v) {
                if (cnt[v] == 0) continue;
                std::uint64_t block = m * cnt[v] / remaining;
                if (idx < block) {
                    word[s] = v + 1;
                    m = block;
                    cnt[v]--;
                    remaining--;
                    break;
                }
                idx -= block;
            }
        }
        return word;
    }

    /// Tabloid action {t}pi: symbol s of the result sits where pi^{-1}(s) sat.
    std::uint64_t act(std::uint64_t idx, const Perm& pi) const {
        std::vector<int> w = unrank(idx), out(n_);
        for (int s = 1; s <= n_; ++s) out[pi.apply(s) - 1] = w[s - 1];
        return rank(out);
    }

    std::vector<std::vector<int>> rows_of(std::uint64_t idx) const {
        std::vector<int> w = unrank(idx);
        std::vector<std::vector<int>> rows(shape_.size());
        for (int s = 1; s <= n_; ++s) rows[w[s - 1] - 1].push_back(s);
        return rows;
    }

    std::string to_string(std::uint64_t idx) const {
        auto rows = rows_of(idx);
        std::string s;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) s += '|';
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows[i][j]);
            }
        }
        return s;
    }

private:
    std::vector<int> shape_;
    int n_ = 0;
    std::uint64_t dim_ = 1;
};

/// Row word of the tabloid {t} of a bijective tableau t.
inline std::vector<int> tabloid_word(const Tableau& t) {
    require(t.is_bijective(), "tabloid_word: tableau must be bijective");
    std::vector<int> w(t.n());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (int v : t.rows[i]) w[v - 1] = static_cast<int>(i) + 1;
    return w;
}

/// Row word of the M^type tabloid attached to a type-beta filling U of [alpha],
/// relative to the row-reading base tableau of [alpha]: symbol t(x) of the base
/// lies in row U(x). Since the base is row-reading this is just the row-major
/// flattening of U.
inline std::vector<int> typed_tableau_word(const Tableau& u) {
    std::vector<int> w;
    w.reserve(u.n());
    for (const auto& r : u.rows)
        for (int v : r) w.push_back(v);
    return w;
}

} // namespace specht
