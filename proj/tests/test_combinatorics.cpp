#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "specht/partition.hpp"
#include "specht/semistandard.hpp"
#include "specht/tableau.hpp"

using namespace specht;

TEST_CASE("residues") {
    CHECK(residue({1, 1}, 0) == 0);
    CHECK(residue({3, 1}, 0) == -2);
    CHECK(residue({1, 4}, 5) == 3);
    CHECK(residue({3, 1}, 5) == 3); // -2 = 3 mod 5
    CHECK_THROWS_AS(residue({1, 1}, 4), precondition_error);
}

TEST_CASE("removable and addable nodes") {
    Partition lam({4, 3, 1});
    auto rem = removable_nodes(lam);
    REQUIRE(rem.size() == 3);
    CHECK(rem[0] == Node{1, 4});
    CHECK(rem[1] == Node{2, 3});
    CHECK(rem[2] == Node{3, 1});

    Partition row({5});
    auto rrow = removable_nodes(row);
    REQUIRE(rrow.size() == 1);
    CHECK(rrow[0] == Node{1, 5});
    auto arow = addable_nodes(row);
    REQUIRE(arow.size() == 2);
    CHECK(arow[0] == Node{1, 6});
    CHECK(arow[1] == Node{2, 1});

    auto req = removable_nodes(Partition({3, 3}));
    REQUIRE(req.size() == 1);
    CHECK(req[0] == Node{2, 3});

    // removing/adding each listed node yields a valid partition
    for (auto nd : removable_nodes(lam)) CHECK(remove_node(lam, nd).n() == lam.n() - 1);
    for (auto nd : addable_nodes(lam)) CHECK(add_node(lam, nd).n() == lam.n() + 1);
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition({4, 3}), Partition({3, 3, 1})));
    CHECK(dominates(Partition({3, 1}), Partition({3, 1})));
    CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
    CHECK_THROWS_AS(dominates(Partition({2}), Partition({3})), precondition_error);
}

TEST_CASE("dominance is a partial order on partitions of n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto parts = partitions_of(n);
        for (const auto& a : parts) CHECK(dominates(a, a));
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : parts)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
    }
}

TEST_CASE("one box shift") {
    CHECK(one_box_shift(Partition({4, 3}), 1, 3) == Partition({3, 3, 1}));
    CHECK(one_box_shift(Partition({2, 2}), 2, 3) == Partition({2, 1, 1}));
    CHECK_THROWS_AS(one_box_shift(Partition({4, 3, 1}), 1, 2), precondition_error);
    CHECK_THROWS_AS(one_box_shift(Partition({4, 3}), 2, 1), precondition_error);
    // shifted partition is dominated by the original
    for (int n = 2; n <= 7; ++n)
        for (const auto& alpha : partitions_of(n))
            for (auto [a, b] : one_box_shift_pairs(alpha)) {
                Partition beta = one_box_shift(alpha, a, b);
                CHECK(beta.n() == n);
                CHECK(dominates(alpha, beta));
                CHECK(alpha != beta);
            }
}

TEST_CASE("hook lengths in column alpha_b + 1") {
    CHECK(hook_lengths_column_b(Partition({4, 3}), 3) == std::vector<long long>{5, 3});
    CHECK(hook_lengths_column_b(Partition({4, 3, 1}), 3) == std::vector<long long>{4, 2});
    // h_i - h_j = (alpha_i - alpha_j) + (j - i)
    for (int n = 2; n <= 8; ++n)
        for (const auto& alpha : partitions_of(n))
            for (auto [a, b] : one_box_shift_pairs(alpha)) {
                auto h = hook_lengths_column_b(alpha, b);
                for (int i = 1; i <= b - 1; ++i) {
                    CHECK(h[i - 1] > 0);
                    for (int j = 1; j <= b - 1; ++j)
                        CHECK(h[i - 1] - h[j - 1] ==
                              (alpha.part(i) - alpha.part(j)) + (j - i));
                }
            }
}

TEST_CASE("p-core") {
    CHECK(p_core(Partition({3, 1}), 2) == Partition());
    // no hook length divisible by p => fixed point: (2,1) has hooks 3,1,1
    CHECK(p_core(Partition({2, 1}), 2) == Partition({2, 1}));
    CHECK(p_core(Partition({2, 1}), 5) == Partition({2, 1}));
    CHECK(p_core(Partition({4, 3}), 5) == p_core(Partition({3, 3, 1}), 5));
    // partitions obtained from (4,3,1) by removing equal-residue nodes share a core
    CHECK(p_core(Partition({4, 3}), 5) == p_core(Partition({3, 3, 1}), 5));
    CHECK_THROWS_AS(p_core(Partition({2, 1}), 4), precondition_error);
}

TEST_CASE("partition parsing and text form") {
    CHECK(Partition::parse("4,3,1") == Partition({4, 3, 1}));
    CHECK(Partition({4, 3, 1}).to_string() == "4,3,1");
    CHECK_THROWS_AS(Partition::parse("3,4"), precondition_error);
    CHECK_THROWS_AS(Partition::parse("x"), precondition_error);
}

TEST_CASE("semistandard one-box enumeration: the 12-set example") {
    Partition alpha({4, 3, 3, 2, 1});
    auto pairs = enumerate_semistandard_one_box(alpha, 1, 6);
    REQUIRE(pairs.size() == 12);
    CHECK(count_semistandard_one_box(alpha, 1, 6) == 12);
    std::vector<std::vector<int>> expected = {
        {1},          {1, 5},          {1, 4},          {1, 4, 5},
        {1, 3},       {1, 3, 5},       {1, 3, 4},       {1, 3, 4, 5},
        {1, 2, 3},    {1, 2, 3, 5},    {1, 2, 3, 4},    {1, 2, 3, 4, 5}};
    for (std::size_t k = 0; k < 12; ++k) CHECK(pairs[k].first.members == expected[k]);
    Partition beta = one_box_shift(alpha, 1, 6);
    CHECK(beta == Partition({3, 3, 3, 2, 1, 1}));
    for (const auto& [s, t] : pairs) {
        CHECK(t.is_semistandard());
        CHECK(t.type() == beta.parts());
    }
}

TEST_CASE("semistandard one-box enumeration: small instances") {
    auto p43 = enumerate_semistandard_one_box(Partition({4, 3}), 1, 3);
    REQUIRE(p43.size() == 2);
    CHECK(p43[0].first.members == std::vector<int>{1});
    CHECK(p43[1].first.members == std::vector<int>{1, 2});
    CHECK(p43[0].second.to_string() == "1,1,1,3/2,2,2");
    CHECK(p43[1].second.to_string() == "1,1,1,2/2,2,3");

    // (2,1), a=1, b=3: the set rule admits {1} and {1,2}
    auto p21 = enumerate_semistandard_one_box(Partition({2, 1}), 1, 3);
    REQUIRE(p21.size() == 2);
    CHECK(p21[0].first.members == std::vector<int>{1});
    CHECK(p21[1].first.members == std::vector<int>{1, 2});
}

TEST_CASE("bijection round trip and one-box reconstruction") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& alpha : partitions_of(n))
            for (auto [a, b] : one_box_shift_pairs(alpha)) {
                auto pairs = enumerate_semistandard_one_box(alpha, a, b);
                for (const auto& [s, t] : pairs) {
                    CHECK(set_from_tableau(t, alpha, a, b) == s);
                    CHECK(tableau_from_set(s) == t);
                    // reconstruction property: entries equal the row index except
                    // possibly at row ends (i, alpha_i), a <= i < b
                    for (int i = 1; i <= alpha.rows(); ++i)
                        for (int j = 1; j <= alpha.part(i); ++j)
                            if (!(j == alpha.part(i) && a <= i && i < b))
                                CHECK(t.at(i, j) == i);
                }
            }
}

TEST_CASE("one-box count matches exhaustive semistandard enumeration") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& alpha : partitions_of(n))
            for (auto [a, b] : one_box_shift_pairs(alpha)) {
                Partition beta = one_box_shift(alpha, a, b);
                std::vector<int> content = beta.parts();
                auto exhaustive = semistandard_tableaux(alpha, content);
                auto pairs = enumerate_semistandard_one_box(alpha, a, b);
                CHECK(static_cast<long long>(exhaustive.size()) ==
                      count_semistandard_one_box(alpha, a, b));
                REQUIRE(pairs.size() == exhaustive.size());
                std::set<Tableau> from_pairs, from_exhaustive;
                for (const auto& [s, t] : pairs) from_pairs.insert(t);
                for (const auto& t : exhaustive) from_exhaustive.insert(t);
                CHECK(from_pairs == from_exhaustive);
            }
}

TEST_CASE("removable set and join") {
    CHECK(removable_set(Partition({4, 3, 3, 2, 1}), 1, 6).members ==
          std::vector<int>{1, 3, 4, 5});

    SemistandardSet t1{Partition({4, 3}), 1, 3, {1}};
    CHECK(join_vee(t1, 1).members == std::vector<int>{1, 2});
    SemistandardSet t12{Partition({4, 3}), 1, 3, {1, 2}};
    CHECK(join_vee(t12, 1) == t12); // T-hat(1) = 2 = i+1
    CHECK_THROWS_AS(join_vee(t1, 2), precondition_error); // T-hat(2) = 2
}

TEST_CASE("tabloid space ranking") {
    TabloidSpace sp({2, 1});
    REQUIRE(sp.dim() == 3);
    for (std::uint64_t i = 0; i < sp.dim(); ++i) CHECK(sp.rank(sp.unrank(i)) == i);
    CHECK(sp.to_string(0) == "1,2|3");
    CHECK(sp.to_string(1) == "1,3|2");
    CHECK(sp.to_string(2) == "2,3|1");

    // action: {1,2|3}(2 3) = {1,3|2}
    Perm tau = Perm::transposition(3, 2, 3);
    CHECK(sp.act(0, tau) == 1);

    TabloidSpace big({3, 3, 1});
    CHECK(big.dim() == 140); // 7!/(3!3!1!)
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        std::uint64_t i = rng() % big.dim();
        CHECK(big.rank(big.unrank(i)) == i);
    }
}

TEST_CASE("standard tableaux enumeration") {
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(standard_tableaux(Partition({4, 3, 1})).size() == 70);
    CHECK(standard_tableaux(Partition({3, 3, 1})).size() == 21);
    CHECK(standard_tableaux(Partition({4, 2, 1})).size() == 35);
    CHECK(standard_tableaux(Partition({4, 3})).size() == 14);
    for (const auto& t : standard_tableaux(Partition({3, 2}))) CHECK(t.is_standard());
}
