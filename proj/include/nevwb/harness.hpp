#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nevwb/effective_constants.hpp"
#include "nevwb/mero_io.hpp"
#include "nevwb/nevanlinna.hpp"

namespace nevwb {

enum class Verdict { HoldsOnGrid, ViolatedAt, ExcludedByW, DegenerateBranch, HypothesisFailed };
const char* verdict_name(Verdict v);

struct MarginRow {
    double r = 0, lhs = 0, rhs = 0, margin = 0;  // margin = rhs - lhs
    bool gated = false;
};

struct MarginReport {
    std::string scenario;
    std::string target;
    std::vector<MarginRow> rows;
    Verdict verdict = Verdict::HoldsOnGrid;
    std::vector<double> violated_radii;
    std::vector<std::string> w_matches;
    std::vector<std::string> notes;
    double r_pass = 0;
    // least-squares slopes against log r over the gated rows
    double slope_lhs = 0, slope_rhs = 0, slope_margin = 0;
    double min_margin = 0;  // over gated rows
    json extra = json::object();

    // exit-relevant: a gated violation outside W
    bool failed() const { return verdict == Verdict::ViolatedAt; }
};

// Fills slopes, min_margin and, unless a gating verdict is already set, the verdict.
void finalize_report(MarginReport& rep, double rel_tol = 1e-9);
std::string report_csv(const MarginReport& rep);
json report_to_json(const MarginReport& rep);

struct HarnessParams {
    mpq_class eps{1, 10};
    int ell = 0;   // 0: no multiplicity hypothesis
    int ell2 = 2;  // bound for the exceptional set
    int M = 1;     // truncation level
    mpq_class c3{0};
    bool c3_supplied = false;
    double C = 1.0, C_prime = 0.0;  // error-term constants for log T terms
    std::optional<double> r_pass;
    int degenerate_numeric_norm = 4;
    double eps_d() const { return eps.get_d(); }
};

struct GridSpec {
    double r_min = 10, r_max = 100;
    std::size_t count = 20;
};

struct Scenario {
    std::string name;
    std::string target;  // thm1.5-i | thm1.5-ii | thm4.1 | prop3.1 | lemma3.3 | thm2.2 | thm2.3
    std::vector<MeroFn> curve;
    std::vector<MeroFn> coeffs;  // lemma3.3
    std::vector<MeroSum> terms;  // lemma3.3 functions, thm2.2 terms
    std::optional<SparsePoly> G, F;
    std::vector<SparsePoly> hypersurfaces;
    std::optional<MonomialFamily> family;
    HarnessParams params;
    GridSpec grid;
    std::optional<std::string> expect;
    json source;
};

Scenario scenario_from_json(const json& j);
Scenario load_scenario(const std::string& path);

MarginReport run_scenario(const Scenario& s);

// Individual checks. g is reduced internally (entire, no common zeros).
MarginReport thm15_check(const SparsePoly& G, const std::vector<MeroFn>& g, bool part_one, const HarnessParams& p,
                         const GridSpec& grid);
MarginReport prop31_check(const MeroFn& f, const HarnessParams& p, const GridSpec& grid);
MarginReport borel_check(const std::vector<MeroFn>& a, const std::vector<MeroSum>& f, const HarnessParams& p,
                         const GridSpec& grid);
MarginReport truncated_borel_check(const std::vector<MeroSum>& terms, const HarnessParams& p, const GridSpec& grid);
MarginReport gcd_bound_check(const SparsePoly& F, const SparsePoly& G, const std::vector<MeroFn>& g,
                             const HarnessParams& p, const GridSpec& grid, const std::optional<MonomialFamily>& fam);
MarginReport smt_instance_check(const std::vector<SparsePoly>& hypersurfaces, const std::vector<MeroFn>& g,
                                const HarnessParams& p, const GridSpec& grid);

// Multiplicatively dependent ratios u^m, u_i = g_i/g_0, with 0 < |m_1| + ... + |m_n| <= max_norm.
struct DegenerateHit {
    std::vector<int> m;
    bool exact = false;  // u^m is constant
    double ratio = 0;    // T_{u^m}(r) / T_g(r) at the check radius
};
std::vector<DegenerateHit> detect_degenerate_branch(const std::vector<MeroFn>& g, int max_norm, int numeric_norm,
                                                    double eps, double r_check);

// Zero divisor of an entire sum in |z| <= R, exact for single-group sums.
Divisor zero_divisor(const MeroSum& f, double R);
// every zero of the entire function f has multiplicity >= ell
bool in_class_E(const MeroFn& f, int ell);

struct SuiteEntry {
    std::string file;
    MarginReport report;
    bool has_expectation = false;
    bool expectation_met = true;
    // expectation mismatch, or a gated violation in a scenario that states no expectation
    bool failed() const { return has_expectation ? !expectation_met : report.failed(); }
};
std::vector<SuiteEntry> run_suite(const std::string& dir);

}  // namespace nevwb
