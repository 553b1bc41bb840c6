#ifndef FILLINGS_HOMOLOGY_HPP
#define FILLINGS_HOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fillings/dualgraph.hpp"
#include "fillings/errors.hpp"

namespace fillings {

// The combinatorial shape of a dual graph: central vertex of weight +1 with
// arms listed from the center outward. Vertex ids: 0 is the center, then the
// arms in order, each outward.
struct DualShape {
    std::vector<std::vector<int>> arms;

    static DualShape of(const DualGraph& dual) { return DualShape{dual.arms}; }

    int arm_count() const { return static_cast<int>(arms.size()); }

    int vertex_count() const {
        int n = 1;
        for (const auto& a : arms) n += static_cast<int>(a.size());
        return n;
    }

    // Upper bound for the number of basis elements meeting the configuration.
    int basis_bound() const {
        int n = 0;
        for (const auto& a : arms)
            for (int w : a) n += -w + 1;
        return n;
    }

    int weight_of(int vertex) const {
        if (vertex == 0) return 1;
        int id = 1;
        for (const auto& a : arms) {
            if (vertex < id + static_cast<int>(a.size())) return a[static_cast<size_t>(vertex - id)];
            id += static_cast<int>(a.size());
        }
        throw dimension_mismatch("vertex id out of range");
    }

    int first_vertex_of_arm(int arm) const {
        int id = 1;
        for (int a = 0; a < arm; ++a) id += static_cast<int>(arms[static_cast<size_t>(a)].size());
        return id;
    }

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (u == 0) {
            for (int a = 0; a < arm_count(); ++a)
                if (v == first_vertex_of_arm(a)) return true;
            return false;
        }
        // consecutive vertices of the same arm have consecutive ids
        if (v != u + 1) return false;
        for (int a = 0; a < arm_count(); ++a) {
            int lo = first_vertex_of_arm(a);
            int hi = lo + static_cast<int>(arms[static_cast<size_t>(a)].size()) - 1;
            if (u >= lo && v <= hi) return true;
        }
        return false;
    }

    friend bool operator==(const DualShape&, const DualShape&) = default;
};

// Homology classes of the dual-graph spheres in the basis (l, e_1, ..., e_M):
// classes[v][0] is the l coefficient, classes[v][i] the coefficient of e_i.
struct HomRep {
    int basis_size = 0;
    std::vector<std::vector<int>> classes;

    friend bool operator==(const HomRep&, const HomRep&) = default;
    friend auto operator<=>(const HomRep&, const HomRep&) = default;
};

// Intersection pairing: l.l = +1, e_i.e_i = -1, mixed products vanish.
inline int pairing(const std::vector<int>& u, const std::vector<int>& v) {
    int s = u[0] * v[0];
    for (size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
    return s;
}

inline std::vector<std::string> check_rep(const DualShape& shape, const HomRep& rep) {
    int n = shape.vertex_count();
    if (static_cast<int>(rep.classes.size()) != n)
        throw dimension_mismatch("representation has " + std::to_string(rep.classes.size()) +
                                 " classes for " + std::to_string(n) + " vertices");
    for (const auto& c : rep.classes)
        if (static_cast<int>(c.size()) != rep.basis_size + 1)
            throw dimension_mismatch("class vector length does not match basis size");

    std::vector<std::string> bad;
    auto where = [](int v) { return "vertex " + std::to_string(v); };

    const auto& center = rep.classes[0];
    if (center[0] != 1 ||
        std::any_of(center.begin() + 1, center.end(), [](int c) { return c != 0; }))
        bad.push_back("central class is not l");

    std::set<int> center_adjacent;
    for (int a = 0; a < shape.arm_count(); ++a) center_adjacent.insert(shape.first_vertex_of_arm(a));

    for (int v = 1; v < n; ++v) {
        const auto& c = rep.classes[static_cast<size_t>(v)];
        int w = -shape.weight_of(v);
        int minus = 0, plus = 0, other = 0;
        for (size_t i = 1; i < c.size(); ++i) {
            if (c[i] == -1)
                ++minus;
            else if (c[i] == 1)
                ++plus;
            else if (c[i] != 0)
                ++other;
        }
        if (other > 0) bad.push_back(where(v) + ": coefficient outside {-1,0,1}");
        if (center_adjacent.count(v)) {
            if (c[0] != 1) bad.push_back(where(v) + ": center-adjacent class must have l-coefficient 1");
            if (plus != 0) bad.push_back(where(v) + ": center-adjacent class has a +1 basis coefficient");
            if (minus != w + 1)
                bad.push_back(where(v) + ": expected " + std::to_string(w + 1) + " coefficients -1, found " +
                              std::to_string(minus));
        } else {
            if (c[0] != 0) bad.push_back(where(v) + ": arm-interior class must have l-coefficient 0");
            if (plus != 1) bad.push_back(where(v) + ": arm-interior class needs exactly one +1");
            if (minus != w - 1)
                bad.push_back(where(v) + ": expected " + std::to_string(w - 1) + " coefficients -1, found " +
                              std::to_string(minus));
        }
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int want = shape.adjacent(u, v) ? 1 : 0;
            int got = pairing(rep.classes[static_cast<size_t>(u)], rep.classes[static_cast<size_t>(v)]);
            if (got != want)
                bad.push_back("product of classes " + std::to_string(u) + "," + std::to_string(v) + " is " +
                              std::to_string(got) + ", expected " + std::to_string(want));
        }
    for (int v = 1; v < n; ++v) {
        int want = -(-shape.weight_of(v));
        if (pairing(rep.classes[static_cast<size_t>(v)], rep.classes[static_cast<size_t>(v)]) != want)
            bad.push_back(where(v) + ": self-intersection mismatch");
    }

    for (int i = 1; i <= rep.basis_size; ++i) {
        bool used = false;
        for (const auto& c : rep.classes) used |= c[static_cast<size_t>(i)] != 0;
        if (!used) bad.push_back("basis element e_" + std::to_string(i) + " unused");
    }
    return bad;
}

inline bool rep_valid(const DualShape& shape, const HomRep& rep) {
    return check_rep(shape, rep).empty();
}

// Arm permutations fixing the decorations; these are all the automorphisms of
// a star-shaped tree with distinguishable center.
inline std::vector<std::vector<int>> arm_automorphisms(const DualShape& shape) {
    int d = shape.arm_count();
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int a = 0; a < d; ++a) groups[shape.arms[static_cast<size_t>(a)]].push_back(a);

    std::vector<std::vector<int>> perms{std::vector<int>(static_cast<size_t>(d))};
    for (int a = 0; a < d; ++a) perms[0][static_cast<size_t>(a)] = a;
    for (auto& [weights, members] : groups) {
        std::vector<std::vector<int>> extended;
        std::vector<int> images = members;
        std::sort(images.begin(), images.end());
        do {
            for (const auto& base : perms) {
                auto p = base;
                for (size_t i = 0; i < members.size(); ++i) p[static_cast<size_t>(members[i])] = images[i];
                extended.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        perms = std::move(extended);
    }
    std::sort(perms.begin(), perms.end());
    return perms;
}

namespace detail {

// Rows of the coefficient matrix in vertex order after permuting arms by sigma.
inline std::vector<const std::vector<int>*> permuted_rows(const DualShape& shape, const HomRep& rep,
                                                          const std::vector<int>& sigma) {
    std::vector<const std::vector<int>*> rows;
    rows.push_back(&rep.classes[0]);
    for (int a = 0; a < shape.arm_count(); ++a) {
        int src = sigma[static_cast<size_t>(a)];
        int first = shape.first_vertex_of_arm(src);
        for (size_t t = 0; t < shape.arms[static_cast<size_t>(src)].size(); ++t)
            rows.push_back(&rep.classes[static_cast<size_t>(first) + t]);
    }
    return rows;
}

inline std::vector<std::vector<int>> sorted_matrix(const std::vector<const std::vector<int>*>& rows,
                                                   int basis_size) {
    std::vector<std::vector<int>> cols(static_cast<size_t>(basis_size));
    for (int i = 0; i < basis_size; ++i) {
        auto& col = cols[static_cast<size_t>(i)];
        col.reserve(rows.size());
        for (const auto* r : rows) col.push_back((*r)[static_cast<size_t>(i) + 1]);
    }
    std::sort(cols.begin(), cols.end());
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(static_cast<size_t>(basis_size) + 1));
    for (size_t r = 0; r < rows.size(); ++r) {
        m[r][0] = (*rows[r])[0];
        for (int i = 0; i < basis_size; ++i) m[r][static_cast<size_t>(i) + 1] = cols[static_cast<size_t>(i)][r];
    }
    return m;
}

}  // namespace detail

// Lexicographically least coefficient matrix over basis relabelings and the
// given graph automorphisms. Idempotent.
inline HomRep canonical_form(const DualShape& shape, const HomRep& rep,
                             const std::vector<std::vector<int>>& auts) {
    std::vector<std::vector<int>> best;
    for (const auto& sigma : auts) {
        auto rows = detail::permuted_rows(shape, rep, sigma);
        auto m = detail::sorted_matrix(rows, rep.basis_size);
        if (best.empty() || m < best) best = std::move(m);
    }
    return HomRep{rep.basis_size, std::move(best)};
}

inline HomRep canonical_form(const DualShape& shape, const HomRep& rep, bool quotient_by_graph_symmetry) {
    std::vector<std::vector<int>> auts;
    if (quotient_by_graph_symmetry) {
        auts = arm_automorphisms(shape);
    } else {
        auts.emplace_back();
        for (int a = 0; a < shape.arm_count(); ++a) auts[0].push_back(a);
    }
    return canonical_form(shape, rep, auts);
}

namespace detail {

// Depth-first assignment of classes, center-adjacent vertices first, then the
// arms outward. New basis elements always take the least unused indices, which
// kills the pure relabeling symmetry up to final canonicalization.
class RepSearch {
  public:
    RepSearch(const DualShape& shape, bool quotient) : shape_(shape) {
        if (quotient) {
            auts_ = arm_automorphisms(shape);
        } else {
            auts_.emplace_back();
            for (int a = 0; a < shape.arm_count(); ++a) auts_[0].push_back(a);
        }
        bound_ = shape.basis_bound();
        int d = shape.arm_count();
        for (int a = 0; a < d; ++a) order_.push_back(shape.first_vertex_of_arm(a));
        for (int a = 0; a < d; ++a) {
            int first = shape.first_vertex_of_arm(a);
            for (size_t t = 1; t < shape.arms[static_cast<size_t>(a)].size(); ++t)
                order_.push_back(first + static_cast<int>(t));
        }
        classes_.assign(static_cast<size_t>(shape.vertex_count()),
                        std::vector<int>(static_cast<size_t>(bound_) + 1, 0));
        classes_[0][0] = 1;
        assigned_.assign(static_cast<size_t>(shape.vertex_count()), false);
        assigned_[0] = true;
    }

    std::vector<HomRep> run() {
        used_ = 0;
        extend(0);
        std::vector<HomRep> out(found_.begin(), found_.end());
        return out;
    }

  private:
    void emit() {
        HomRep rep;
        rep.basis_size = used_;
        for (const auto& c : classes_)
            rep.classes.emplace_back(c.begin(), c.begin() + used_ + 1);
        found_.insert(canonical_form(shape_, rep, auts_));
    }

    bool products_ok(int vertex, const std::vector<int>& cand) const {
        for (int u = 1; u < shape_.vertex_count(); ++u) {
            if (!assigned_[static_cast<size_t>(u)] || u == vertex) continue;
            int want = shape_.adjacent(u, vertex) ? 1 : 0;
            if (pairing(classes_[static_cast<size_t>(u)], cand) != want) return false;
        }
        return true;
    }

    void place(size_t step, int vertex, const std::vector<int>& cand, int cols_used) {
        auto saved = classes_[static_cast<size_t>(vertex)];
        int saved_used = used_;
        classes_[static_cast<size_t>(vertex)] = cand;
        assigned_[static_cast<size_t>(vertex)] = true;
        used_ = cols_used;
        extend(step + 1);
        classes_[static_cast<size_t>(vertex)] = saved;
        assigned_[static_cast<size_t>(vertex)] = false;
        used_ = saved_used;
    }

    void extend(size_t step) {
        if (step == order_.size()) {
            emit();
            return;
        }
        int vertex = order_[step];
        int w = -shape_.weight_of(vertex);
        bool center_adjacent = false;
        for (int a = 0; a < shape_.arm_count(); ++a)
            center_adjacent |= vertex == shape_.first_vertex_of_arm(a);
        if (center_adjacent)
            extend_center_adjacent(step, vertex, w);
        else
            extend_interior(step, vertex, w);
    }

    // Class l - e_{i_1} - ... - e_{i_{w+1}}: must share exactly one basis
    // element with every previously placed center-adjacent class.
    void extend_center_adjacent(size_t step, int vertex, int w) {
        std::vector<const std::vector<int>*> prior;
        for (size_t s = 0; s < step; ++s)
            prior.push_back(&classes_[static_cast<size_t>(order_[s])]);
        std::vector<int> share_count(prior.size(), 0);
        std::vector<int> reused;
        pick_shares(0, prior, share_count, reused, step, vertex, w);
    }

    void pick_shares(size_t i, const std::vector<const std::vector<int>*>& prior,
                     std::vector<int>& share_count, std::vector<int>& reused, size_t step, int vertex,
                     int w) {
        while (i < prior.size() && share_count[i] == 1) ++i;
        if (static_cast<int>(reused.size()) > w + 1) return;
        if (i == prior.size()) {
            int fresh = w + 1 - static_cast<int>(reused.size());
            if (fresh < 0 || used_ + fresh > bound_) return;
            std::vector<int> cand(static_cast<size_t>(bound_) + 1, 0);
            cand[0] = 1;
            for (int c : reused) cand[static_cast<size_t>(c)] = -1;
            for (int f = 1; f <= fresh; ++f) cand[static_cast<size_t>(used_ + f)] = -1;
            if (!products_ok(vertex, cand)) return;
            place(step, vertex, cand, used_ + fresh);
            return;
        }
        for (int c = 1; c <= used_; ++c) {
            if ((*prior[i])[static_cast<size_t>(c)] != -1) continue;
            bool clash = false;
            for (size_t j = 0; j < prior.size() && !clash; ++j)
                clash = share_count[j] == 1 && (*prior[j])[static_cast<size_t>(c)] == -1;
            if (clash) continue;
            reused.push_back(c);
            for (size_t j = 0; j < prior.size(); ++j)
                if ((*prior[j])[static_cast<size_t>(c)] == -1) ++share_count[j];
            pick_shares(i + 1, prior, share_count, reused, step, vertex, w);
            for (size_t j = 0; j < prior.size(); ++j)
                if ((*prior[j])[static_cast<size_t>(c)] == -1) --share_count[j];
            reused.pop_back();
        }
    }

    // Class e_p - e_{q_1} - ... - e_{q_{w-1}}: meets only the previous vertex
    // of its arm.
    void extend_interior(size_t step, int vertex, int w) {
        for (int p = 1; p <= used_ + 1; ++p) {
            bool p_fresh = p == used_ + 1;
            std::vector<int> q;
            pick_interior(1, p, p_fresh, q, w - 1, step, vertex);
        }
    }

    void pick_interior(int from, int p, bool p_fresh, std::vector<int>& q, int remaining, size_t step,
                       int vertex) {
        int fresh_base = used_ + (p_fresh ? 1 : 0);
        if (fresh_base + remaining > bound_) return;
        {
            std::vector<int> cand(static_cast<size_t>(bound_) + 1, 0);
            cand[static_cast<size_t>(p)] = 1;
            for (int c : q) cand[static_cast<size_t>(c)] = -1;
            for (int f = 1; f <= remaining; ++f) cand[static_cast<size_t>(fresh_base + f)] = -1;
            if (products_ok(vertex, cand)) place(step, vertex, cand, fresh_base + remaining);
        }
        if (remaining == 0) return;
        for (int c = from; c <= used_; ++c) {
            if (c == p) continue;
            q.push_back(c);
            pick_interior(c + 1, p, p_fresh, q, remaining - 1, step, vertex);
            q.pop_back();
        }
    }

    const DualShape& shape_;
    std::vector<std::vector<int>> auts_;
    int bound_ = 0;
    int used_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> classes_;
    std::vector<bool> assigned_;
    std::set<HomRep> found_;
};

}  // namespace detail

// All homology representations of the dual configuration, canonicalized and
// deduplicated; complete up to relabeling of the basis (and arm symmetry when
// the quotient flag is set). Deterministic order.
inline std::vector<HomRep> enumerate_reps(const DualShape& shape, bool quotient_by_graph_symmetry = true) {
    detail::RepSearch search(shape, quotient_by_graph_symmetry);
    return search.run();
}

inline std::vector<HomRep> enumerate_reps(const DualGraph& dual, bool quotient_by_graph_symmetry = true) {
    return enumerate_reps(DualShape::of(dual), quotient_by_graph_symmetry);
}

// Multi-points of the blown-down line arrangement: sets of center-adjacent
// vertices whose classes share a basis element. Only the two patterns the
// classification pins down get catalog names.
struct IntersectionConfiguration {
    int line_count = 0;  // d + 1 lines, line 0 is the central sphere
    std::vector<std::vector<int>> multipoints;
    std::string name;

    friend bool operator==(const IntersectionConfiguration&, const IntersectionConfiguration&) = default;
};

inline IntersectionConfiguration configuration_of(const DualShape& shape, const HomRep& rep) {
    if (!rep_valid(shape, rep)) throw validation_error("configuration_of needs a valid representation");
    int d = shape.arm_count();
    IntersectionConfiguration config;
    config.line_count = d + 1;
    std::set<std::vector<int>> points;
    for (int i = 1; i <= rep.basis_size; ++i) {
        std::vector<int> lines;
        for (int a = 0; a < d; ++a) {
            int v = shape.first_vertex_of_arm(a);
            if (rep.classes[static_cast<size_t>(v)][static_cast<size_t>(i)] == -1) lines.push_back(a + 1);
        }
        if (static_cast<int>(lines.size()) >= 3) points.insert(lines);
    }
    config.multipoints.assign(points.begin(), points.end());
    if (config.multipoints.size() == 1) {
        int size = static_cast<int>(config.multipoints[0].size());
        if (size == d && d >= 3) config.name = "I1^" + std::to_string(d);
        if (size == d - 1 && d >= 4) config.name = "I2^" + std::to_string(d);
    }
    return config;
}

enum class Uniqueness { guaranteed, upper_bound_only };

// The embedding of the cap is pinned down exactly when the blown-down line
// arrangement is one of the rigid ones: k in {3,4,5} or e0 <= -k-3.
inline Uniqueness uniqueness_guarantee(const StarGraph& g) {
    int k = g.arm_count();
    if (k >= 3 && k <= 5) return Uniqueness::guaranteed;
    if (g.central_weight <= -k - 3) return Uniqueness::guaranteed;
    return Uniqueness::upper_bound_only;
}

inline Uniqueness uniqueness_guarantee(const StarGraph& g, const HomRep&) { return uniqueness_guarantee(g); }

}  // namespace fillings

#endif
