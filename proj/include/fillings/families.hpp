#ifndef FILLINGS_FAMILIES_HPP
#define FILLINGS_FAMILIES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fillings/plumbing.hpp"

namespace fillings {

// What a known classification predicts for a census: how many candidates,
// with which Euler characteristics (sorted descending).
struct FamilyExpectation {
    std::string family;
    long long count = 0;
    std::vector<long long> chis;
};

namespace families {

inline bool all_arms_minus_two(const StarGraph& g) {
    for (const auto& a : g.arms)
        for (int w : a)
            if (w != -2) return false;
    return true;
}

// Arm lengths + 1 = the dual decorations n_j of the length-one-arm dual graphs.
inline std::vector<int> arm_n_values(const StarGraph& g) {
    std::vector<int> n;
    for (const auto& a : g.arms) n.push_back(static_cast<int>(a.size()) + 1);
    return n;
}

// ---- representation shapes for dual graphs with all arms of length one ----
//
// Center-adjacent classes pairwise share exactly one basis element, so the
// shared elements partition the edge set of K_d into cliques. A role is
// feasible for an arm when the class has room: n >= (#cliques at the role) - 1.
// For d <= 5 the clique partitions below are all of them, so this counting is
// a complete independent oracle for such censuses.

struct SphereShape {
    std::vector<std::vector<int>> groups;  // cliques on roles 0..d-1, each of size >= 2
};

inline std::vector<SphereShape> clique_shapes(int d) {
    auto pad_pairs = [](int d_, std::vector<std::vector<int>> seed) {
        std::set<std::set<int>> have;
        for (auto& g : seed) have.insert(std::set<int>(g.begin(), g.end()));
        for (int i = 0; i < d_; ++i)
            for (int j = i + 1; j < d_; ++j) {
                bool covered = false;
                for (auto& g : have) covered |= g.count(i) && g.count(j);
                if (!covered) seed.push_back({i, j});
            }
        return seed;
    };
    std::vector<SphereShape> shapes;
    if (d == 3) {
        shapes.push_back({{{0, 1, 2}}});
        shapes.push_back({pad_pairs(3, {})});
    } else if (d == 4) {
        shapes.push_back({{{0, 1, 2, 3}}});
        shapes.push_back({pad_pairs(4, {{0, 1, 2}})});
        shapes.push_back({pad_pairs(4, {})});
    } else if (d == 5) {
        shapes.push_back({{{0, 1, 2, 3, 4}}});
        shapes.push_back({pad_pairs(5, {{0, 1, 2, 3}})});
        shapes.push_back({pad_pairs(5, {{0, 1, 2}, {2, 3, 4}})});
        shapes.push_back({pad_pairs(5, {{0, 1, 2}})});
        shapes.push_back({pad_pairs(5, {})});
    }
    return shapes;
}

inline std::vector<int> shape_degrees(const SphereShape& shape, int d) {
    std::vector<int> deg(static_cast<size_t>(d), 0);
    for (const auto& g : shape.groups)
        for (int r : g) ++deg[static_cast<size_t>(r)];
    return deg;
}

// chi = sum(n) - (sum of group sizes - #groups - 1)
inline long long shape_chi_offset(const SphereShape& shape) {
    long long total = 0;
    for (const auto& g : shape.groups) total += static_cast<long long>(g.size());
    return total - static_cast<long long>(shape.groups.size()) - 1;
}

inline std::vector<std::vector<int>> shape_automorphisms(const SphereShape& shape, int d) {
    std::set<std::set<int>> groups;
    for (const auto& g : shape.groups) groups.insert(std::set<int>(g.begin(), g.end()));
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> auts;
    do {
        std::set<std::set<int>> image;
        for (const auto& g : groups) {
            std::set<int> im;
            for (int r : g) im.insert(perm[static_cast<size_t>(r)]);
            image.insert(im);
        }
        if (image == groups) auts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return auts;
}

// Number of ways to hang the arms (given by their n values) on the roles of
// one shape, up to the shape's symmetries; equal n values are interchangeable.
inline long long count_shape_assignments(const SphereShape& shape, std::vector<int> n) {
    int d = static_cast<int>(n.size());
    auto deg = shape_degrees(shape, d);
    auto auts = shape_automorphisms(shape, d);
    std::sort(n.begin(), n.end());
    std::set<std::vector<int>> canon;
    do {
        bool feasible = true;
        for (int r = 0; r < d && feasible; ++r)
            feasible = n[static_cast<size_t>(r)] >= deg[static_cast<size_t>(r)] - 1;
        if (!feasible) continue;
        std::vector<int> best = n;
        for (const auto& sigma : auts) {
            std::vector<int> image(n.size());
            for (int r = 0; r < d; ++r)
                image[static_cast<size_t>(r)] = n[static_cast<size_t>(sigma[static_cast<size_t>(r)])];
            best = std::min(best, image);
        }
        canon.insert(best);
    } while (std::next_permutation(n.begin(), n.end()));
    return static_cast<long long>(canon.size());
}

// All arms are (-2) chains and the dual has d = -e0-1 <= 5 length-one arms
// (the unused fiber arms count as n = 1). The census is governed entirely by
// the clique shapes above.
inline std::optional<FamilyExpectation> length_one_dual_family(const StarGraph& g) {
    int k = g.arm_count();
    if (k < 1) return std::nullopt;
    int d = -g.central_weight - 1;
    if (d < 3 || d > 5 || d < k) return std::nullopt;
    if (!all_arms_minus_two(g)) return std::nullopt;
    auto n = arm_n_values(g);
    n.resize(static_cast<size_t>(d), 1);
    long long total = std::accumulate(n.begin(), n.end(), 0LL);
    FamilyExpectation exp;
    exp.family = "pencil census (d=" + std::to_string(d) + ")";
    for (const auto& shape : clique_shapes(d)) {
        long long ways = count_shape_assignments(shape, n);
        for (long long i = 0; i < ways; ++i) exp.chis.push_back(total - shape_chi_offset(shape));
    }
    exp.count = static_cast<long long>(exp.chis.size());
    std::sort(exp.chis.rbegin(), exp.chis.rend());
    return exp;
}

// Central -4 with three length-one arms of weight < -4: the plumbing and the
// blow-down of the central sphere, nothing else.
inline std::optional<FamilyExpectation> steep_three_arm_family(const StarGraph& g) {
    if (g.central_weight != -4 || g.arm_count() != 3) return std::nullopt;
    for (const auto& a : g.arms)
        if (a.size() != 1 || a[0] >= -4) return std::nullopt;
    return FamilyExpectation{"central -4 with three steep arms", 2, {5, 4}};
}

inline std::optional<FamilyExpectation> w000_family(const StarGraph& g) {
    StarGraph w000{-4, {{-3}, {-3}, {-3}}};
    if (!(g == w000)) return std::nullopt;
    return FamilyExpectation{"central -4 with three [-3] arms", 3, {5, 4, 1}};
}

// e0 <= -k-3, all (-2) arms: the plumbing plus one blow-down per arm-length
// class that is long enough to absorb the central chain (n_j >= -e0-3).
inline std::optional<FamilyExpectation> deep_center_family(const StarGraph& g) {
    int k = g.arm_count();
    if (k < 3) return std::nullopt;
    if (g.central_weight > -k - 3) return std::nullopt;
    if (!all_arms_minus_two(g)) return std::nullopt;
    auto n = arm_n_values(g);
    int d = -g.central_weight - 1;
    std::set<int> classes;
    for (int v : n)
        if (v >= -g.central_weight - 3) classes.insert(v);
    long long total = std::accumulate(n.begin(), n.end(), 0LL);
    FamilyExpectation exp;
    exp.family = "deep central weight, all (-2) arms";
    exp.chis.push_back(total - k + 2);
    for (size_t i = 0; i < classes.size(); ++i) exp.chis.push_back(total - k + 4 - d);
    exp.count = static_cast<long long>(exp.chis.size());
    std::sort(exp.chis.rbegin(), exp.chis.rend());
    return exp;
}

// The W(p,q,r) family: central -4 with arms [-2^q, -(p+3)], [-2^p, -(r+3)],
// [-2^r, -(q+3)] read from the center. Its boundary bounds a rational ball.
struct WParameters {
    int p = 0, q = 0, r = 0;
};

inline std::optional<WParameters> detect_w_family(const StarGraph& g) {
    if (g.central_weight != -4 || g.arm_count() != 3) return std::nullopt;
    struct ArmForm {
        int twos;
        int tail;  // arm = [-2^twos, -(tail+3)]
    };
    std::vector<ArmForm> forms;
    for (const auto& a : g.arms) {
        int twos = 0;
        while (twos < static_cast<int>(a.size()) - 1 && a[static_cast<size_t>(twos)] == -2) ++twos;
        if (twos != static_cast<int>(a.size()) - 1) return std::nullopt;
        int tail = a.back();
        if (tail > -3) return std::nullopt;
        forms.push_back({twos, -tail - 3});
    }
    std::vector<int> idx{0, 1, 2};
    do {
        const auto& f1 = forms[static_cast<size_t>(idx[0])];
        const auto& f2 = forms[static_cast<size_t>(idx[1])];
        const auto& f3 = forms[static_cast<size_t>(idx[2])];
        if (f2.twos == f1.tail && f3.twos == f2.tail && f1.twos == f3.tail)
            return WParameters{f1.tail, f1.twos, f2.tail};
    } while (std::next_permutation(idx.begin(), idx.end()));
    return std::nullopt;
}

// Blow-down census of W(p,q,r): the plumbing, the central -4 sphere, the three
// arm chains under their inequalities (strict when combined with the central
// sphere), any disjoint combination, and the whole graph. Note: for uneven
// parameters the complete homology enumeration can exceed this list; see the
// census fixtures.
inline std::optional<FamilyExpectation> w_family(const StarGraph& g) {
    auto params = detect_w_family(g);
    if (!params) return std::nullopt;
    auto [p, q, r] = *params;

    // per-arm blow-down data, arms in the detector's order
    std::vector<int> chain_len{p, r, q};
    std::vector<bool> weak{p >= 1 && p - 1 <= q, r >= 1 && r - 1 <= p, q >= 1 && q - 1 <= r};
    std::vector<bool> strong{p >= 1 && p <= q, r >= 1 && r <= p, q >= 1 && q <= r};

    // symmetry group: arm permutations preserving (twos, tail)
    std::vector<std::pair<int, int>> tags{{q, p}, {p, r}, {r, q}};
    std::vector<std::vector<int>> auts;
    std::vector<int> perm{0, 1, 2};
    do {
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            ok &= tags[static_cast<size_t>(perm[static_cast<size_t>(i)])] == tags[static_cast<size_t>(i)];
        if (ok) auts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    long long chi_plumbing = 1 + g.vertex_count();
    FamilyExpectation exp;
    exp.family = "W(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                 ") blow-down list";
    for (int central = 0; central <= 1; ++central) {
        const auto& allowed = central ? strong : weak;
        std::set<std::vector<int>> orbits;
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> pick(3);
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                pick[static_cast<size_t>(i)] = (mask >> i) & 1;
                if (pick[static_cast<size_t>(i)] && !allowed[static_cast<size_t>(i)]) ok = false;
            }
            if (!ok) continue;
            std::vector<int> best = pick;
            for (const auto& sigma : auts) {
                std::vector<int> image(3);
                for (int i = 0; i < 3; ++i)
                    image[static_cast<size_t>(i)] = pick[static_cast<size_t>(sigma[static_cast<size_t>(i)])];
                best = std::min(best, image);
            }
            if (!orbits.insert(best).second) continue;
            long long chi = chi_plumbing - central;
            for (int i = 0; i < 3; ++i)
                if (pick[static_cast<size_t>(i)]) chi -= chain_len[static_cast<size_t>(i)];
            exp.chis.push_back(chi);
        }
    }
    exp.chis.push_back(1);  // blow-down of the whole graph
    exp.count = static_cast<long long>(exp.chis.size());
    std::sort(exp.chis.rbegin(), exp.chis.rend());
    return exp;
}

}  // namespace families

// Every classification a graph matches, with the predicted census.
inline std::vector<FamilyExpectation> known_family_expectations(const StarGraph& g) {
    std::vector<FamilyExpectation> out;
    if (auto e = families::length_one_dual_family(g)) out.push_back(*e);
    if (auto e = families::steep_three_arm_family(g)) out.push_back(*e);
    if (auto e = families::w000_family(g)) out.push_back(*e);
    if (auto e = families::deep_center_family(g)) out.push_back(*e);
    if (auto e = families::w_family(g)) out.push_back(*e);
    return out;
}

}  // namespace fillings

#endif
