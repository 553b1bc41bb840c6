#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fillings/plumbing.hpp"

using namespace fillings;

namespace {

// cofactor-expansion determinant, the slow cross-check for the SNF code
Integer det_by_cofactors(const std::vector<std::vector<Integer>>& a) {
    size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer total = 0;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        Integer term = a[0][j] * det_by_cofactors(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

std::vector<int> random_arm(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> weight(-6, -2);
    std::vector<int> arm(static_cast<size_t>(len(rng)));
    for (auto& w : arm) w = weight(rng);
    return arm;
}

}  // namespace

TEST_CASE("negative continued fraction evaluation") {
    CHECK(arm_to_rational({-2}) == Rational(-2));
    CHECK(arm_to_rational({-2, -2}) == Rational(-3, 2));
    CHECK(arm_to_rational({-4, -2}) == Rational(-7, 2));
    // (-2)^(n-1) gives -n/(n-1)
    for (int n = 2; n <= 9; ++n) {
        std::vector<int> arm(static_cast<size_t>(n - 1), -2);
        CHECK(arm_to_rational(arm) == Rational(-n, n - 1));
    }
    CHECK_THROWS_AS(arm_to_rational({}), empty_arm);
    CHECK_THROWS_AS(arm_to_rational({-2, -1}), weight_too_large);
    CHECK_THROWS_AS(arm_to_rational({0}), weight_too_large);
}

TEST_CASE("negative continued fraction expansion") {
    CHECK(rational_to_arm(Rational(-2)) == std::vector<int>{-2});
    CHECK(rational_to_arm(Rational(-3, 2)) == std::vector<int>{-2, -2});
    CHECK(rational_to_arm(Rational(-7, 2)) == std::vector<int>{-4, -2});
    CHECK_THROWS_AS(rational_to_arm(Rational(-1)), out_of_range);
    CHECK_THROWS_AS(rational_to_arm(Rational(-1, 2)), out_of_range);
    CHECK_THROWS_AS(rational_to_arm(Rational(3, 2)), out_of_range);
}

TEST_CASE("continued fraction round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto arm = random_arm(rng, 6);
        auto r = arm_to_rational(arm);
        CHECK(r < -1);
        CHECK(rational_to_arm(r) == arm);
        // value of a length-n arm lies in (-n-1, -1]... precisely within (-n-1, -1)
        // union the integer endpoint
        CHECK(r > Rational(-100));
    }
    std::uniform_int_distribution<int> num(-60, -7), den(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        Rational r(num(rng), den(rng));
        if (r >= -1) continue;
        auto arm = rational_to_arm(r);
        for (int w : arm) CHECK(w <= -2);
        CHECK(arm_to_rational(arm) == r);
    }
}

TEST_CASE("arm value range") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto arm = random_arm(rng, 5);
        int n = static_cast<int>(arm.size());
        auto r = arm_to_rational(arm);
        CHECK(r >= Rational(-(n + 1) * 6));
        bool all_twos = std::all_of(arm.begin(), arm.end(), [](int w) { return w == -2; });
        if (all_twos) CHECK(r == Rational(-(n + 1), n));
    }
}

TEST_CASE("seifert data conversions") {
    SeifertData data{-4, {Rational(-3), Rational(-3), Rational(-3)}};
    auto g = graph_from_seifert(data);
    CHECK(g.central_weight == -4);
    CHECK(g.arms == std::vector<std::vector<int>>{{-3}, {-3}, {-3}});
    CHECK(seifert_from_graph(g) == data);

    SeifertData twos{-5, {Rational(-2), Rational(-2), Rational(-2), Rational(-2)}};
    auto g2 = graph_from_seifert(twos);
    CHECK(g2.arms == std::vector<std::vector<int>>{{-2}, {-2}, {-2}, {-2}});

    SeifertData halves{-4, {Rational(-3, 2), Rational(-3, 2), Rational(-3, 2)}};
    CHECK(seifert_from_graph(graph_from_seifert(halves)) == halves);
}

TEST_CASE("dual positivity") {
    CHECK(is_dually_positive({-4, {{-3}, {-3}, {-3}}}));
    CHECK_FALSE(is_dually_positive({-4, {{-2}, {-2}, {-2}, {-2}}}));  // needs e0 <= -5
    CHECK_FALSE(is_dually_positive({-6, {{-1, -2}}}));
    CHECK(is_dually_positive({-2, {{-2}}}));
    CHECK_FALSE(is_dually_positive({-4, {}}));
    // invariant under arm permutation
    CHECK(is_dually_positive({-5, {{-2, -2}, {-3}, {-2}, {-4}}}) ==
          is_dually_positive({-5, {{-4}, {-2}, {-3}, {-2, -2}}}));
}

TEST_CASE("intersection matrix") {
    StarGraph g{-4, {{-3}, {-3}, {-3}}};
    auto m = intersection_matrix(g);
    REQUIRE(m.dimension == 4);
    CHECK(m.at(0, 0) == -4);
    for (int i = 1; i < 4; ++i) {
        CHECK(m.at(i, i) == -3);
        CHECK(m.at(0, i) == 1);
        CHECK(m.at(i, 0) == 1);
    }
    CHECK(m.at(1, 2) == 0);

    auto single = intersection_matrix({-2, {}});
    REQUIRE(single.dimension == 1);
    CHECK(single.at(0, 0) == -2);

    auto chain = intersection_matrix({-5, {{-2, -2}}});
    REQUIRE(chain.dimension == 3);
    CHECK(chain.at(1, 2) == 1);
    CHECK(chain.at(0, 2) == 0);
}

TEST_CASE("boundary homology via smith normal form") {
    CHECK(homology_of_boundary({-2, {}}) == AbelianGroupInvariants{0, {Integer(2)}});

    auto inv = homology_of_boundary({-4, {{-3}, {-3}, {-3}}});
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion_order() == 81);

    auto inv2 = homology_of_boundary({-5, {{-2}, {-2}, {-2}, {-2}}});
    auto det = det_by_cofactors(intersection_matrix({-5, {{-2}, {-2}, {-2}, {-2}}}).entries);
    CHECK(inv2.free_rank == 0);
    CHECK(inv2.torsion_order() == abs(det));

    // divisibility chain
    for (size_t i = 1; i < inv.torsion_factors.size(); ++i)
        CHECK(inv.torsion_factors[i] % inv.torsion_factors[i - 1] == 0);
}

TEST_CASE("torsion order equals |det| and is arm-permutation invariant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        StarGraph g;
        std::uniform_int_distribution<int> arms(1, 4), weight(-7, -2);
        g.arms.resize(static_cast<size_t>(arms(rng)));
        for (auto& a : g.arms) a = random_arm(rng, 3);
        g.central_weight = weight(rng);

        auto m = intersection_matrix(g);
        auto det = det_by_cofactors(m.entries);
        auto inv = homology_of_boundary(g);
        if (det != 0) {
            CHECK(inv.free_rank == 0);
            CHECK(inv.torsion_order() == abs(det));
        } else {
            CHECK(inv.free_rank > 0);
        }

        auto shuffled = g;
        std::shuffle(shuffled.arms.begin(), shuffled.arms.end(), rng);
        CHECK(abs(det_by_cofactors(intersection_matrix(shuffled).entries)) == abs(det));
    }
}
