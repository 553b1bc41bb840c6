#ifndef FILLINGS_DUALGRAPH_HPP
#define FILLINGS_DUALGRAPH_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fillings/errors.hpp"
#include "fillings/plumbing.hpp"

namespace fillings {

enum class CurveTag { zero_section, infinity_section, fiber, exceptional };

struct Curve {
    int id = 0;
    int self_int = 0;
    CurveTag tag = CurveTag::fiber;
    int index = 0;  // fiber number, or blow-up step for exceptional curves
};

// Spheres in a blown-up sphere bundle: self-intersections plus geometric
// intersection multiplicities between pairs, with the full blow-up history.
struct CurveConfig {
    std::vector<Curve> curves;
    std::map<std::pair<int, int>, int> incidences;  // unordered pair -> multiplicity
    std::vector<std::vector<int>> blowup_log;       // curves through each blown-up point

    static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    int multiplicity(int a, int b) const {
        auto it = incidences.find(key(a, b));
        return it == incidences.end() ? 0 : it->second;
    }

    const Curve& curve(int id) const { return curves.at(static_cast<size_t>(id)); }
    Curve& curve(int id) { return curves.at(static_cast<size_t>(id)); }

    int step_count() const { return static_cast<int>(blowup_log.size()); }

    // Zero section (-1), infinity section (+1), d fibers (0) meeting both sections.
    static CurveConfig sphere_bundle(int fiber_count) {
        CurveConfig c;
        c.curves.push_back({0, -1, CurveTag::zero_section, 0});
        c.curves.push_back({1, +1, CurveTag::infinity_section, 0});
        for (int i = 0; i < fiber_count; ++i) {
            int id = 2 + i;
            c.curves.push_back({id, 0, CurveTag::fiber, i});
            c.incidences[key(0, id)] = 1;
            c.incidences[key(1, id)] = 1;
        }
        return c;
    }
};

// Blow up at a point where all listed curves meet: each drops by 1 in
// self-intersection, the pairwise incidences at that point are consumed, and a
// fresh -1 exceptional curve appears through all of them.
inline CurveConfig blowup_step(const CurveConfig& config, std::vector<int> point) {
    std::sort(point.begin(), point.end());
    point.erase(std::unique(point.begin(), point.end()), point.end());
    if (point.empty()) throw validation_error("blow-up point needs at least one curve");
    for (int id : point)
        if (id < 0 || id >= static_cast<int>(config.curves.size()))
            throw validation_error("unknown curve id " + std::to_string(id));
    for (size_t i = 0; i < point.size(); ++i)
        for (size_t j = i + 1; j < point.size(); ++j)
            if (config.multiplicity(point[i], point[j]) < 1)
                throw no_such_intersection("curves " + std::to_string(point[i]) + " and " +
                                           std::to_string(point[j]) + " do not meet");
    CurveConfig next = config;
    int step = next.step_count();
    int eid = static_cast<int>(next.curves.size());
    for (int id : point) next.curve(id).self_int -= 1;
    for (size_t i = 0; i < point.size(); ++i)
        for (size_t j = i + 1; j < point.size(); ++j) {
            auto k = CurveConfig::key(point[i], point[j]);
            if (--next.incidences[k] == 0) next.incidences.erase(k);
        }
    next.curves.push_back({eid, -1, CurveTag::exceptional, step});
    for (int id : point) next.incidences[CurveConfig::key(id, eid)] = 1;
    next.blowup_log.push_back(point);
    return next;
}

// Dual star-shaped graph plus the curve configuration that produced it.
// Arms are listed from the +1 central vertex outward: the k arms dual to the
// input arms first, then the -e0-1-k short [-1] arms.
struct DualGraph {
    int central_weight = 1;
    std::vector<std::vector<int>> arms;

    CurveConfig config;
    int zero_id = 0;
    int infinity_id = 1;
    std::vector<std::vector<int>> gamma_arm_ids;  // original arms, center outward
    std::vector<std::vector<int>> dual_arm_ids;   // dual arms, center outward
    std::vector<int> cut_ids;                     // one per fiber

    std::vector<int> gamma_ids() const {
        std::vector<int> ids{zero_id};
        for (const auto& a : gamma_arm_ids) ids.insert(ids.end(), a.begin(), a.end());
        return ids;
    }

    std::vector<int> gamma_prime_ids() const {
        std::vector<int> ids{infinity_id};
        for (const auto& a : dual_arm_ids) ids.insert(ids.end(), a.begin(), a.end());
        return ids;
    }
};

inline DualGraph build_dual(const StarGraph& g) {
    if (!is_dually_positive(g)) throw not_dually_positive("graph is not dually positive");
    int k = g.arm_count();
    int d = -g.central_weight - 1;

    CurveConfig config = CurveConfig::sphere_bundle(d);
    const int zero = 0, infinity = 1;
    std::vector<int> fiber_ids(d);
    for (int i = 0; i < d; ++i) fiber_ids[i] = 2 + i;

    for (int i = 0; i < d; ++i) config = blowup_step(config, {zero, fiber_ids[i]});
    // zero section now has self-intersection e0; each fiber carries one -1 curve

    DualGraph dual;
    dual.arms.assign(d, {});
    dual.gamma_arm_ids.assign(k, {});
    dual.dual_arm_ids.assign(d, {});
    dual.cut_ids.assign(d, 0);

    for (int j = 0; j < k; ++j) {
        int first_exceptional = 2 + d + j;  // created at step j above
        // chain of curve ids from the zero section to the infinity section
        std::vector<int> chain{zero, first_exceptional, fiber_ids[j], infinity};
        size_t pos = 1;  // the curve being shaped into the next arm vertex
        for (int target : g.arms[j]) {
            while (config.curve(chain[pos]).self_int > target) {
                int a = chain[pos], b = chain[pos + 1];
                if (b == infinity) throw error("schedule reached the infinity section");
                config = blowup_step(config, {a, b});
                chain.insert(chain.begin() + static_cast<long>(pos) + 1,
                             static_cast<int>(config.curves.size()) - 1);
            }
            dual.gamma_arm_ids[j].push_back(chain[pos]);
            ++pos;
        }
        dual.cut_ids[j] = chain[pos];
        for (size_t q = chain.size() - 2; q > pos; --q) dual.dual_arm_ids[j].push_back(chain[q]);
        for (int id : dual.dual_arm_ids[j]) dual.arms[j].push_back(config.curve(id).self_int);
    }
    // unused fibers: the -1 curve at the zero section is cut, the fiber survives
    for (int j = k; j < d; ++j) {
        dual.cut_ids[j] = 2 + d + j;
        dual.dual_arm_ids[j] = {fiber_ids[j]};
        dual.arms[j] = {config.curve(fiber_ids[j]).self_int};
    }

    dual.config = config;
    dual.central_weight = config.curve(infinity).self_int;
    if (dual.central_weight != 1) throw error("dual central vertex is not +1");
    for (int id : dual.cut_ids)
        if (config.curve(id).self_int != -1) throw error("cut curve is not a -1 sphere");
    return dual;
}

struct DualityCheck {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string msg) {
        ok = false;
        diagnostics.push_back(std::move(msg));
    }
};

// (a) the gamma side reproduces g, (b) |V(Gamma)| + |V(Gamma')| = steps + 2,
// (c) every cut curve is a -1 sphere.
inline DualityCheck verify_duality(const DualGraph& dual, const StarGraph& g) {
    DualityCheck check;
    const auto& config = dual.config;

    if (config.curve(dual.zero_id).self_int != g.central_weight)
        check.fail("central weight mismatch on the zero-section side");
    if (dual.gamma_arm_ids.size() != g.arms.size()) {
        check.fail("gamma arm count mismatch");
        return check;
    }
    for (size_t j = 0; j < g.arms.size(); ++j) {
        if (dual.gamma_arm_ids[j].size() != g.arms[j].size()) {
            check.fail("gamma arm " + std::to_string(j) + " has wrong length");
            continue;
        }
        for (size_t t = 0; t < g.arms[j].size(); ++t)
            if (config.curve(dual.gamma_arm_ids[j][t]).self_int != g.arms[j][t])
                check.fail("gamma arm " + std::to_string(j) + " vertex " + std::to_string(t) +
                           " has weight " +
                           std::to_string(config.curve(dual.gamma_arm_ids[j][t]).self_int) +
                           ", expected " + std::to_string(g.arms[j][t]));
    }

    int gamma_vertices = static_cast<int>(dual.gamma_ids().size());
    int dual_vertices = static_cast<int>(dual.gamma_prime_ids().size());
    if (gamma_vertices + dual_vertices != config.step_count() + 2)
        check.fail("|V(Gamma)| + |V(Gamma')| = " + std::to_string(gamma_vertices + dual_vertices) +
                   " but steps + 2 = " + std::to_string(config.step_count() + 2));

    for (int id : dual.cut_ids)
        if (config.curve(id).self_int != -1)
            check.fail("cut curve " + std::to_string(id) + " has self-intersection " +
                       std::to_string(config.curve(id).self_int));
    return check;
}

}  // namespace fillings

#endif
