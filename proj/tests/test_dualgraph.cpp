#include <catch2/catch_amalgamated.hpp>

#include "fillings/dualgraph.hpp"

using namespace fillings;

TEST_CASE("blow-up bookkeeping") {
    auto config = CurveConfig::sphere_bundle(3);
    REQUIRE(config.curves.size() == 5);
    CHECK(config.curve(0).self_int == -1);
    CHECK(config.curve(1).self_int == 1);
    CHECK(config.multiplicity(0, 2) == 1);
    CHECK(config.multiplicity(0, 1) == 0);

    SECTION("at an intersection of two curves") {
        auto next = blowup_step(config, {0, 2});
        CHECK(next.curve(0).self_int == -2);
        CHECK(next.curve(2).self_int == -1);
        const auto& e = next.curves.back();
        CHECK(e.self_int == -1);
        CHECK(next.multiplicity(0, e.id) == 1);
        CHECK(next.multiplicity(2, e.id) == 1);
        CHECK(next.multiplicity(0, 2) == 0);
        CHECK(next.step_count() == 1);
    }

    SECTION("at a smooth point of one curve") {
        auto next = blowup_step(config, {2});
        CHECK(next.curve(2).self_int == -1);
        const auto& e = next.curves.back();
        CHECK(e.self_int == -1);
        CHECK(next.multiplicity(2, e.id) == 1);
        CHECK(next.multiplicity(0, 2) == 1);  // untouched
    }

    SECTION("the intersection is consumed") {
        auto once = blowup_step(config, {0, 2});
        CHECK_THROWS_AS(blowup_step(once, {0, 2}), no_such_intersection);
    }
}

TEST_CASE("dual of the minimal example") {
    // (-4; [-2],[-2],[-2]) is self-shaped: dual +1 with three [-2] arms
    StarGraph g{-4, {{-2}, {-2}, {-2}}};
    auto dual = build_dual(g);
    CHECK(dual.central_weight == 1);
    CHECK(dual.arms == std::vector<std::vector<int>>{{-2}, {-2}, {-2}});
    CHECK(dual.config.step_count() == 6);
    CHECK(verify_duality(dual, g).ok);
}

TEST_CASE("dual of the -4/-3/-3/-3 graph") {
    StarGraph g{-4, {{-3}, {-3}, {-3}}};
    auto dual = build_dual(g);
    CHECK(dual.arms == std::vector<std::vector<int>>{{-2, -2}, {-2, -2}, {-2, -2}});
    CHECK(dual.config.step_count() == 9);
    auto check = verify_duality(dual, g);
    CHECK(check.ok);
    CHECK(check.diagnostics.empty());
}

TEST_CASE("duals of the all-(-2)-arm families") {
    // k arms of (-2)^(n_j - 1) dualize to [-n_j], plus [-1] arms when e0 < -k-1
    for (int k = 3; k <= 6; ++k)
        for (int e0 = -k - 1; e0 >= -10; --e0)
            for (int n : {2, 3, 6}) {
                StarGraph g;
                g.central_weight = e0;
                for (int j = 0; j < k; ++j)
                    g.arms.push_back(std::vector<int>(static_cast<size_t>(n - 1), -2));
                auto dual = build_dual(g);
                REQUIRE(dual.arms.size() == static_cast<size_t>(-e0 - 1));
                for (int j = 0; j < k; ++j) CHECK(dual.arms[static_cast<size_t>(j)] == std::vector<int>{-n});
                for (size_t j = static_cast<size_t>(k); j < dual.arms.size(); ++j)
                    CHECK(dual.arms[j] == std::vector<int>{-1});
                CHECK(verify_duality(dual, g).ok);
            }
}

TEST_CASE("duals of the length-one-arm family") {
    // (-4; [-n1],[-n2],[-n3]) dualizes to chains of -2 of length n_j - 1
    for (int n1 = 2; n1 <= 6; ++n1)
        for (int n2 = n1; n2 <= 6; ++n2)
            for (int n3 = n2; n3 <= 6; ++n3) {
                StarGraph g{-4, {{-n1}, {-n2}, {-n3}}};
                auto dual = build_dual(g);
                std::vector<std::vector<int>> expect;
                for (int n : {n1, n2, n3})
                    expect.push_back(std::vector<int>(static_cast<size_t>(n - 1), -2));
                CHECK(dual.arms == expect);
                CHECK(verify_duality(dual, g).ok);
            }
}

TEST_CASE("mixed-weight arms dualize by the fraction complement") {
    // arm [-4,-2] has fraction -7/2, dual arm expands -7/5
    StarGraph g{-4, {{-4, -2}, {-3}, {-3}}};
    auto dual = build_dual(g);
    CHECK(dual.arms[0] == std::vector<int>{-2, -2, -3});
    CHECK(verify_duality(dual, g).ok);

    // W_{p,q,r} arm [-2^q, -(p+3)] dualizes to [-(q+2), -2^(p+1)]
    StarGraph w121{-4, {{-2, -2, -4}, {-2, -4}, {-2, -5}}};
    auto dual_w = build_dual(w121);
    CHECK(dual_w.arms == std::vector<std::vector<int>>{{-4, -2, -2}, {-3, -2, -2}, {-3, -2, -2, -2}});
    CHECK(verify_duality(dual_w, w121).ok);
}

TEST_CASE("duality bookkeeping invariants") {
    std::vector<StarGraph> graphs{
        {-4, {{-3}, {-3}, {-3}}},
        {-7, {{-2, -2}, {-3}, {-2}}},
        {-5, {{-2, -3, -2}, {-4}, {-2}, {-2, -2}}},
        {-9, {{-6}, {-2, -2, -2, -2, -2}, {-3, -3}}},
    };
    for (const auto& g : graphs) {
        auto dual = build_dual(g);
        int gamma = static_cast<int>(dual.gamma_ids().size());
        int gamma_prime = static_cast<int>(dual.gamma_prime_ids().size());
        CHECK(gamma + gamma_prime == dual.config.step_count() + 2);
        CHECK(static_cast<int>(dual.arms.size()) == -g.central_weight - 1);
        CHECK(dual.central_weight == 1);
        for (int id : dual.cut_ids) CHECK(dual.config.curve(id).self_int == -1);
        CHECK(verify_duality(dual, g).ok);
    }
}

TEST_CASE("arm permutation equivariance of the dual") {
    StarGraph g{-6, {{-2, -2}, {-3}, {-4, -2}}};
    StarGraph permuted{-6, {{-4, -2}, {-2, -2}, {-3}}};
    auto d1 = build_dual(g);
    auto d2 = build_dual(permuted);
    CHECK(d1.arms[0] == d2.arms[1]);
    CHECK(d1.arms[1] == d2.arms[2]);
    CHECK(d1.arms[2] == d2.arms[0]);
}

TEST_CASE("corrupted log fails verification") {
    StarGraph g{-4, {{-3}, {-3}, {-3}}};
    auto dual = build_dual(g);
    auto corrupted = dual;
    corrupted.config.curve(corrupted.gamma_arm_ids[0][0]).self_int -= 1;
    auto check = verify_duality(corrupted, g);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.diagnostics.empty());
}

TEST_CASE("rejects graphs that are not dually positive") {
    CHECK_THROWS_AS(build_dual(StarGraph{-4, {{-2}, {-2}, {-2}, {-2}}}), not_dually_positive);
    CHECK_THROWS_AS(build_dual(StarGraph{-3, {{-2}, {-2}, {-2}}}), not_dually_positive);
}
