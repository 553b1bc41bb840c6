#ifndef FILLINGS_PLUMBING_HPP
#define FILLINGS_PLUMBING_HPP

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "fillings/errors.hpp"
#include "fillings/numeric.hpp"

namespace fillings {

// Star-shaped plumbing tree: one central vertex, k arms hanging off it.
// Arm weights are listed from the vertex adjacent to the center outward.
struct StarGraph {
    int central_weight = 0;
    std::vector<std::vector<int>> arms;

    int arm_count() const { return static_cast<int>(arms.size()); }

    int vertex_count() const {
        int n = 1;
        for (const auto& a : arms) n += static_cast<int>(a.size());
        return n;
    }

    friend bool operator==(const StarGraph&, const StarGraph&) = default;
};

struct SeifertData {
    int e0 = 0;
    std::vector<Rational> coefficients;  // each < -1, reduced

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// Arms must be nonempty; a bare central vertex (no arms) is allowed so the
// intersection-form operations cover single-vertex plumbings.
inline void validate_star_graph(const StarGraph& g) {
    for (const auto& a : g.arms)
        if (a.empty()) throw empty_arm();
}

// b1 - 1/(b2 - 1/(... - 1/bn)), every bi <= -2. Result is a reduced rational < -1.
inline Rational arm_to_rational(const std::vector<int>& arm) {
    if (arm.empty()) throw empty_arm();
    for (int w : arm)
        if (w > -2) throw weight_too_large(w);
    Rational x = arm.back();
    for (auto it = arm.rbegin() + 1; it != arm.rend(); ++it) x = Rational(*it) - 1 / x;
    return x;
}

// Unique expansion of r < -1 with all entries <= -2.
inline std::vector<int> rational_to_arm(const Rational& r) {
    if (r >= -1) throw out_of_range("rational " + rational_to_string(r) + " is not < -1");
    std::vector<int> arm;
    Rational x = r;
    while (true) {
        Integer b = floor_int(x);
        arm.push_back(static_cast<int>(b));
        Rational frac = x - Rational(b);
        if (frac == 0) break;
        x = -1 / frac;
    }
    return arm;
}

inline StarGraph graph_from_seifert(const SeifertData& data) {
    StarGraph g;
    g.central_weight = data.e0;
    for (const auto& r : data.coefficients) g.arms.push_back(rational_to_arm(r));
    validate_star_graph(g);
    return g;
}

inline SeifertData seifert_from_graph(const StarGraph& g) {
    validate_star_graph(g);
    SeifertData data;
    data.e0 = g.central_weight;
    for (const auto& a : g.arms) data.coefficients.push_back(arm_to_rational(a));
    return data;
}

inline bool is_dually_positive(const StarGraph& g) {
    int k = g.arm_count();
    if (k < 1) return false;
    if (g.central_weight > -k - 1) return false;
    for (const auto& a : g.arms) {
        if (a.empty()) return false;
        for (int w : a)
            if (w > -2) return false;
    }
    return true;
}

struct IntegerSymmetricMatrix {
    int dimension = 0;
    std::vector<std::vector<Integer>> entries;

    Integer& at(int i, int j) { return entries[i][j]; }
    const Integer& at(int i, int j) const { return entries[i][j]; }
};

// Vertex order: center first, then arms in input order, each outward.
inline IntegerSymmetricMatrix intersection_matrix(const StarGraph& g) {
    validate_star_graph(g);
    int n = g.vertex_count();
    IntegerSymmetricMatrix m;
    m.dimension = n;
    m.entries.assign(n, std::vector<Integer>(n, 0));
    m.entries[0][0] = g.central_weight;
    int idx = 1;
    for (const auto& arm : g.arms) {
        int prev = 0;
        for (int w : arm) {
            m.entries[idx][idx] = w;
            m.entries[idx][prev] = 1;
            m.entries[prev][idx] = 1;
            prev = idx;
            ++idx;
        }
    }
    return m;
}

struct AbelianGroupInvariants {
    int free_rank = 0;
    std::vector<Integer> torsion_factors;  // each >= 2, divisibility order

    Integer torsion_order() const {
        Integer t = 1;
        for (const auto& f : torsion_factors) t *= f;
        return t;
    }

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

// Diagonal of the Smith normal form, nonnegative, d1 | d2 | ... (zeros last).
inline std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int t = 0;
    while (t < rows && t < cols) {
        // pivot: nonzero entry of least magnitude in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int c = t; c < cols; ++c) a[t][c] += a[i][c];
                        clean = false;
                    }
        }
        ++t;
    }
    std::vector<Integer> diag;
    for (int i = 0; i < std::min(rows, cols); ++i) diag.push_back(abs(a[i][i]));
    std::sort(diag.begin(), diag.end(), [](const Integer& x, const Integer& y) {
        if (x == 0) return false;
        if (y == 0) return true;
        return x < y;
    });
    return diag;
}

// H1 of the plumbing boundary as the cokernel of the intersection form.
inline AbelianGroupInvariants homology_of_boundary(const StarGraph& g) {
    auto m = intersection_matrix(g);
    auto diag = smith_diagonal(m.entries);
    AbelianGroupInvariants inv;
    for (const auto& d : diag) {
        if (d == 0)
            ++inv.free_rank;
        else if (d >= 2)
            inv.torsion_factors.push_back(d);
    }
    return inv;
}

}  // namespace fillings

#endif
