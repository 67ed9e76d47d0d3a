#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nradius/matrix.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

enum class BoundSide { lower, upper };

// One evaluated bound. target_exponent records which power of the numerical
// radius the value constrains: w (1), w^2 (2), or w^{2r}.
struct BoundValue {
    std::string id;
    BoundSide side = BoundSide::upper;
    double target_exponent = 1.0;
    std::optional<double> alpha;
    std::optional<double> r;
    std::optional<int> operands;
    double value = 0.0;
};

std::string side_name(BoundSide side);
std::string target_name(const BoundValue& bv);
// "alpha=..;r=..;n=.." from whichever parameters are present, empty otherwise.
std::string params_string(const BoundValue& bv);

struct CatalogEntry {
    std::string id;
    std::string sides;      // "upper", "lower", or "both"
    std::string target;     // which power of w is constrained
    std::string params;     // accepted parameters
    std::string reference;  // catalog numbering
    std::string formula;    // display form, ASCII
};

// Static description of every bound id the toolkit evaluates.
const std::vector<CatalogEntry>& bound_catalog();

// Caches eigendecompositions, fractional powers, and radius evaluations for
// one matrix so parameter sweeps cost scalar work after the first call. Not
// safe for concurrent use; build one instance per matrix per thread.
class SingleBoundEvaluator {
public:
    explicit SingleBoundEvaluator(CMatrix a, double radius_tol = 1e-9);

    const CMatrix& matrix() const { return a_; }

    double radius();             // w(A)
    double radius_of_square();   // w(A^2)
    double radius_of_absprod();  // w(|A| |A*|)
    double re_absprod_norm();    // || Re(|A| |A*|) ||

    // Cached fractional powers |A|^r and |A*|^r (r >= 0 here; exponents 2r
    // and r of the bounds both come through this path).
    const CMatrix& abs_power(double r);
    const CMatrix& absadj_power(double r);

    // eq11 both sides, eq12 both sides, eq13, eq14, eq15.
    std::vector<BoundValue> classical();

    // 1/4 || |A|^2r + |A*|^2r || + 1/2 (alpha || Re(|A|^r |A*|^r) || +
    // (1 - alpha) w^r(A^2)), an upper bound on w^{2r}(A).
    BoundValue interpolated_upper(double r, double alpha);

    // Min of the interpolated bound over alpha in {0, 1}.
    BoundValue min_upper(double r);

    // 1/2 ||A|| + 1/2 | ||Re(A)|| - ||Im(A)|| | <= w(A).
    BoundValue lower_single_value();

private:
    struct PowerPieces {
        double quarter_norm = 0.0;  // 1/4 || |A|^2r + |A*|^2r ||
        double re_norm = 0.0;       // || Re(|A|^r |A*|^r) ||
    };

    double norm();
    const HermEigDecomp& gram_eig();    // eig of A*A
    const HermEigDecomp& cogram_eig();  // eig of AA*
    const PowerPieces& pieces(double r);

    CMatrix a_;
    double radius_tol_;
    std::optional<HermEigDecomp> gram_, cogram_;
    std::map<double, CMatrix> abs_pow_, absadj_pow_;
    std::map<double, PowerPieces> pieces_;
    std::optional<double> norm_, radius_, radius_sq_, radius_absprod_, re_absprod_;
    std::optional<double> gram_sum_norm_;  // || A*A + AA* ||
    std::optional<double> norm_sq_;        // || A^2 ||
};

// Same caching idea for an ordered pair (A, B), covering the off-diagonal
// block bounds, the pairwise lower bounds, and the two-operand sum bound.
class PairBoundEvaluator {
public:
    PairBoundEvaluator(CMatrix a, CMatrix b, double radius_tol = 1e-9);

    const CMatrix& first() const { return a_.matrix(); }
    const CMatrix& second() const { return b_.matrix(); }

    double block_radius();  // w([[0, A], [B, 0]])
    double sum_radius();    // w(A + B)

    // Upper bound on w^{2r} of the off-diagonal block matrix.
    BoundValue offdiag(double alpha, double r);

    // {low1, low2}: 1/2 ||Re(A) + i Im(B)|| + 1/4 | ||A+B*|| - ||A-B*|| |
    // and the A<->B swapped form, lower bounds on w of the block matrix.
    std::pair<BoundValue, BoundValue> lower_pair();

    // 1/2 max(||A||, ||B||) + the same oscillation term.
    BoundValue lower_max_value();

    // 1/4 ||A+B|| + 1/4 | ||Re(A)+i Im(B)|| - ||Re(B)+i Im(A)|| | + osc.
    BoundValue lower_combined_value();

    // Two-operand instance of the n-fold sum bound, targeting w^{2r}(A + B).
    BoundValue sum_pair(double alpha, double r);

private:
    struct LowerPieces {
        double mixed_ab = 0.0;  // ||Re(A) + i Im(B)||
        double mixed_ba = 0.0;  // ||Re(B) + i Im(A)||
        double osc = 0.0;       // 1/4 | ||A+B*|| - ||A-B*|| |
    };
    const LowerPieces& lower_pieces();

    SingleBoundEvaluator a_, b_;
    double radius_tol_;
    std::optional<double> block_radius_, sum_radius_, cross_radius_;  // max(w(AB), w(BA))
    std::optional<LowerPieces> lower_;
};

// Convenience wrappers over the evaluators.
std::vector<BoundValue> classical_bounds(const CMatrix& a, double radius_tol = 1e-9);
BoundValue offdiag_upper(const CMatrix& a, const CMatrix& b, double alpha, double r,
                         double radius_tol = 1e-9);
BoundValue cor_interpolated_upper(const CMatrix& a, double r, double alpha,
                                  double radius_tol = 1e-9);
BoundValue cor_min_upper(const CMatrix& a, double r, double radius_tol = 1e-9);

// n-operand sum bound: w^{2r}(sum A_i) <= (n^{2r-1}/4) || sum(|A_i|^2r +
// |A_i*|^2r) || + (n^{2r-1}/2)(alpha || sum Re(|A_i|^r |A_i*|^r) || +
// (1 - alpha) sum w^r(A_i^2)).
BoundValue sum_upper(const std::vector<CMatrix>& ops, double alpha, double r,
                     double radius_tol = 1e-9);

std::pair<BoundValue, BoundValue> lower_offdiag(const CMatrix& a, const CMatrix& b);
BoundValue lower_single(const CMatrix& a);
BoundValue lower_max(const CMatrix& a, const CMatrix& b);
BoundValue lower_combined(const CMatrix& a, const CMatrix& b);

}  // namespace nradius
