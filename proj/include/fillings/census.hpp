#ifndef FILLINGS_CENSUS_HPP
#define FILLINGS_CENSUS_HPP

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fillings/dualgraph.hpp"
#include "fillings/families.hpp"
#include "fillings/homology.hpp"
#include "fillings/plumbing.hpp"

namespace fillings {

// One candidate diffeomorphism type of a minimal strong symplectic filling.
struct FillingCandidate {
    HomRep rep;
    int basis_size = 0;        // M
    int dual_vertex_count = 0;  // m + 1
    long long euler = 0;        // chi = M - m + 1
    long long sigma_abs_bound = 0;
    long long b1_bound = 0;
    IntersectionConfiguration config;
    Uniqueness uniqueness = Uniqueness::upper_bound_only;
    std::string annotation;
};

struct FamilyVerdict {
    std::string family;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct CensusReport {
    StarGraph graph;
    SeifertData seifert;
    DualGraph dual;
    bool symmetry_quotient = true;
    std::vector<FillingCandidate> candidates;
    std::vector<FamilyVerdict> fixtures;
    double elapsed_seconds = 0;

    std::vector<long long> chi_multiset() const {
        std::vector<long long> chis;
        for (const auto& c : candidates) chis.push_back(c.euler);
        std::sort(chis.rbegin(), chis.rend());
        return chis;
    }
};

inline FillingCandidate candidate_metrics(const StarGraph& g, const DualShape& shape, const HomRep& rep) {
    FillingCandidate cand;
    cand.rep = rep;
    cand.basis_size = rep.basis_size;
    cand.dual_vertex_count = shape.vertex_count();
    cand.euler = cand.basis_size - cand.dual_vertex_count + 2;
    cand.b1_bound = homology_of_boundary(g).free_rank;
    cand.sigma_abs_bound = cand.euler - 1 + cand.b1_bound;
    cand.config = configuration_of(shape, rep);
    cand.uniqueness = uniqueness_guarantee(g);
    if (cand.euler == 1 + g.vertex_count())
        cand.annotation = "matches original plumbing chi";
    else if (cand.euler == 1)
        cand.annotation = "rational-homology-ball chi";

    long long bound = shape.basis_bound();
    if (cand.euler > bound || cand.sigma_abs_bound > bound + cand.b1_bound)
        throw error("candidate violates the chi/sigma bounds");
    return cand;
}

inline std::string describe_census(long long count, const std::vector<long long>& chis) {
    std::ostringstream out;
    out << "count=" << count << " chi=[";
    for (size_t i = 0; i < chis.size(); ++i) out << (i ? "," : "") << chis[i];
    out << "]";
    return out.str();
}

inline std::vector<FamilyVerdict> match_known_family(const StarGraph& g, const CensusReport& report) {
    std::vector<FamilyVerdict> verdicts;
    auto got_chis = report.chi_multiset();
    auto got = describe_census(static_cast<long long>(report.candidates.size()), got_chis);
    for (const auto& exp : known_family_expectations(g)) {
        FamilyVerdict v;
        v.family = exp.family;
        v.expected = describe_census(exp.count, exp.chis);
        v.got = got;
        v.pass = exp.count == static_cast<long long>(report.candidates.size()) && exp.chis == got_chis;
        verdicts.push_back(v);
    }
    return verdicts;
}

inline CensusReport build_census(const StarGraph& g, bool symmetry_quotient = true,
                                 bool run_family_fixtures = false) {
    if (!is_dually_positive(g)) throw not_dually_positive("census requires a dually positive graph");
    auto start = std::chrono::steady_clock::now();

    CensusReport report;
    report.graph = g;
    report.seifert = seifert_from_graph(g);
    report.dual = build_dual(g);
    report.symmetry_quotient = symmetry_quotient;

    DualShape shape = DualShape::of(report.dual);
    for (const auto& rep : enumerate_reps(shape, symmetry_quotient))
        report.candidates.push_back(candidate_metrics(g, shape, rep));
    std::stable_sort(report.candidates.begin(), report.candidates.end(),
                     [](const FillingCandidate& a, const FillingCandidate& b) {
                         if (a.euler != b.euler) return a.euler > b.euler;
                         return a.rep < b.rep;
                     });
    if (run_family_fixtures) report.fixtures = match_known_family(g, report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace fillings

#endif
