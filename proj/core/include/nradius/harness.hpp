#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "nradius/bounds.hpp"
#include "nradius/ensembles.hpp"
#include "nradius/matrix.hpp"
#include "nradius/numerical_range.hpp"

namespace nradius {

struct CheckRecord {
    std::string bound_id;
    std::string params;
    std::string provenance;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // slack toward satisfaction; negative means violated side
    bool violated = false;
};

// Hybrid tolerance separating roundoff from genuine violations.
double violation_threshold(double lhs, double rhs);

// margin = rhs - lhs for upper checks (lhs <= rhs expected), lhs - rhs for
// lower ones; violated iff margin < -violation_threshold(lhs, rhs).
CheckRecord make_check(std::string bound_id, std::string params, std::string provenance,
                       BoundSide side, double lhs, double rhs);

struct SuiteConfig {
    std::vector<EnsembleSpec> ensembles;
    std::vector<double> rs = {1.0, 1.5, 2.0, 3.0};
    std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
    double radius_tol = 1e-9;    // radius evaluations inside bound values
    double recheck_tol = 1e-11;  // radius tol when re-evaluating flagged records
    unsigned threads = 1;
};

// Evaluates the applicable catalog bounds for every sampled matrix or pair:
// single kinds get the classical family, lowsingle, the cor26 sweep, and the
// refinement/chain comparisons; offdiag_pair kinds get thm25 and thmsum
// sweeps plus the four pair lower bounds. Work items run independently
// (config.threads of them at a time) and records merge in trial order, so the
// output is identical for any thread count. Any item with a flagged record is
// re-evaluated wholesale at recheck_tol before the final verdict.
std::vector<CheckRecord> run_inequality_suite(const SuiteConfig& config);
std::vector<CheckRecord> run_inequality_suite(const std::vector<EnsembleSpec>& specs,
                                              const std::vector<double>& rs,
                                              const std::vector<double>& alphas);

struct BoundSummary {
    double min_margin = std::numeric_limits<double>::infinity();
    double mean_margin = 0.0;
    std::size_t violations = 0;
    std::size_t trials = 0;
};

struct SuiteSummary {
    std::map<std::string, BoundSummary> by_bound;
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t violations = 0;
    std::size_t trials = 0;
};

SuiteSummary summarize(const std::vector<CheckRecord>& records);

// CSV columns: bound_id,params,provenance,lhs,rhs,margin,violated.
void write_records_csv(const std::vector<CheckRecord>& records, const std::string& path);
// JSON object keyed by bound id: {min_margin, mean_margin, violations, trials}.
void write_summary_json(const SuiteSummary& summary, const std::string& path);

// --- lemma-level spot checks -------------------------------------------------

// <Hx,x>^r <= <H^r x,x> for positive semidefinite H, unit x, r >= 1.
CheckRecord check_lemma_mccarthy(const CMatrix& h, const CVector& x, double r,
                                 std::string provenance = "");
// |<x,e><e,y>| <= (||x|| ||y|| + |<x,y>|) / 2 for unit e.
CheckRecord check_lemma_buzano(const CVector& x, const CVector& y, const CVector& e,
                               std::string provenance = "");
// (sum a_i)^r <= n^{r-1} sum a_i^r for nonnegative a_i, r >= 1.
CheckRecord check_lemma_bohr(const std::vector<double>& values, double r,
                             std::string provenance = "");
// |<Ax,y>| <= <|A|x,x>^{1/2} <|A*|y,y>^{1/2}.
CheckRecord check_lemma_mixed_schwarz(const CMatrix& a, const CVector& x, const CVector& y,
                                      std::string provenance = "");

// Seeded random instantiations, one record per trial.
std::vector<CheckRecord> mccarthy_suite(std::size_t trials, std::uint64_t seed);
std::vector<CheckRecord> buzano_suite(std::size_t trials, std::uint64_t seed);
std::vector<CheckRecord> bohr_suite(std::size_t trials, std::uint64_t seed);
std::vector<CheckRecord> mixed_schwarz_suite(std::size_t trials, std::uint64_t seed);
// All four in the order above.
std::vector<CheckRecord> lemma_suites(std::size_t trials_each, std::uint64_t seed);

// --- structural checks -------------------------------------------------------

// Radius identities: w(block_diag(A,B)) = max(w(A), w(B)), w([[A,B],[B,A]]) =
// max(w(A+B), w(A-B)), and w([[0,B],[B,0]]) = w(B). Equality records use
// margin = -|lhs - rhs|.
std::vector<CheckRecord> identity_check(const CMatrix& a, const CMatrix& b,
                                        std::string provenance = "",
                                        double radius_tol = 1e-8);

// Refinement comparisons at r = 1: the min-form upper bound against eq14 and
// eq15, and ||Re(|A||A*|)|| against w(|A||A*|).
std::vector<CheckRecord> refinement_check(const CMatrix& a, std::string provenance = "",
                                          double radius_tol = 1e-9);

struct DiskTheoremReport {
    bool hypothesis_holds = false;  // ||Re(|A||A*|)|| <= 1e-10 ||A||^2
    double re_absprod_norm = 0.0;
    double op_norm_sq = 0.0;
    double disk_radius = 0.0;  // sqrt(||A*A + AA*||) / 2
    double radius = 0.0;       // measured w(A)
    double radius_gap = 0.0;   // |radius - disk_radius|
    DiskCheckResult boundary;
};

// When the hypothesis holds the numerical range must be the disk of radius
// sqrt(||A*A+AA*||)/2 about the origin; otherwise the report just carries the
// measured quantities (the disk may still occur, as for the 3x3 Jordan block).
DiskTheoremReport disk_theorem_check(const CMatrix& a, std::size_t boundary_count = 128,
                                     double boundary_tol = 1e-6, double radius_tol = 1e-9);

struct EqualityCondition {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct EqualityClause {
    std::string name;  // half_mixed_ab, half_mixed_ba, quarter_sum
    double bound_value = 0.0;
    bool triggered = false;
    std::vector<EqualityCondition> conditions;
    bool conditions_hold = false;
};

struct EqualityProbeReport {
    double block_radius = 0.0;
    double eps = 0.0;
    double delta = 0.0;  // 10 * eps
    std::vector<EqualityClause> clauses;
};

// Checks the necessary equality conditions in the proved direction only: if
// w([[0,A],[B,0]]) sits within eps of a listed lower bound, the associated
// norm equalities must hold within delta = 10 * eps. Never asserts the
// converse.
EqualityProbeReport equality_probe(const CMatrix& a, const CMatrix& b, double eps);

struct NoncomparabilityReport {
    double mixed_first_1 = 0.0;  // ||Re(A)+i Im(B)|| on pair 1, sqrt(18)
    double max_first_1 = 0.0;    // max(||A||,||B||) on pair 1, sqrt(13)
    double mixed_first_2 = 0.0;  // sqrt(9)
    double max_first_2 = 0.0;    // sqrt(13)
    double low1_pair1 = 0.0, lowmax_pair1 = 0.0;
    double low1_pair2 = 0.0, lowmax_pair2 = 0.0;
    bool orderings_hold = false;
};

// Evaluates low1 and lowmax on the two fixed diagonal pairs whose bound
// ordering flips; throws std::runtime_error if either strict ordering fails.
NoncomparabilityReport noncomparability_demo();

struct StrictnessProbe {
    double re_norm = 0.0;       // ||Re(|A||A*|)||
    double re_extremal = 0.0;   // |<Re(|A||A*|)x,x>| at the extremal eigenvector
    double im_extremal = 0.0;   // |<Im(|A||A*|)x,x>| there
};

// Reports the two quantities that decide strictness of the eq15-style bound
// on a norm-attaining eigenvector; makes no assertion.
StrictnessProbe strictness_probe(const CMatrix& a);

}  // namespace nradius
