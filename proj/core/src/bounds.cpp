#include "nradius/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nradius/numerical_range.hpp"

namespace nradius {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
}

void check_r(double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("power r must satisfy r >= 1");
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Rebuilds f(H) = U diag(max(lambda,0)^expo) U* from a decomposition.
CMatrix psd_function(const HermEigDecomp& eig, double expo) {
    const std::size_t n = eig.eigenvalues.size();
    CMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double powered = std::pow(std::max(0.0, eig.eigenvalues[k]), expo);
        if (powered == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) +=
                    powered * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return hermitize(out);
}

BoundValue make_value(std::string id, BoundSide side, double target, double value) {
    BoundValue bv;
    bv.id = std::move(id);
    bv.side = side;
    bv.target_exponent = target;
    bv.value = value;
    return bv;
}

}  // namespace

std::string side_name(BoundSide side) {
    return side == BoundSide::lower ? "lower" : "upper";
}

std::string target_name(const BoundValue& bv) {
    if (bv.target_exponent == 1.0) return "w";
    return "w^" + fmt_double(bv.target_exponent);
}

std::string params_string(const BoundValue& bv) {
    std::string out;
    if (bv.alpha) out += "alpha=" + fmt_double(*bv.alpha);
    if (bv.r) {
        if (!out.empty()) out += ';';
        out += "r=" + fmt_double(*bv.r);
    }
    if (bv.operands) {
        if (!out.empty()) out += ';';
        out += "n=" + std::to_string(*bv.operands);
    }
    return out;
}

const std::vector<CatalogEntry>& bound_catalog() {
    static const std::vector<CatalogEntry> table = {
        {"eq11", "both", "w", "",
         "(1.1)", "||A||/2 <= w(A) <= ||A||"},
        {"eq12", "both", "w^2", "",
         "(1.2)", "||A*A + AA*||/4 <= w^2(A) <= ||A*A + AA*||/2"},
        {"eq13", "upper", "w", "",
         "(1.3)", "w(A) <= (||A|| + ||A^2||^(1/2)) / 2"},
        {"eq14", "upper", "w^2", "",
         "(1.4)", "w^2(A) <= ||A*A + AA*||/4 + w(A^2)/2"},
        {"eq15", "upper", "w^2", "",
         "(1.5)", "w^2(A) <= ||A*A + AA*||/4 + w(|A| |A*|)/2"},
        {"thm25", "upper", "w^2r", "alpha, r",
         "Thm 2.5",
         "w^2r([[0,A],[B,0]]) <= max(|| |B|^2r + |A*|^2r ||, || |A|^2r + |B*|^2r ||)/4"
         " + (1-alpha) max(w^r(AB), w^r(BA))/2"
         " + alpha max(||Re(|B|^r |A*|^r)||, ||Re(|A|^r |B*|^r)||)/2"},
        {"cor26", "upper", "w^2r", "alpha, r (alpha omitted = min over {0,1})",
         "Cor 2.6",
         "w^2r(A) <= || |A|^2r + |A*|^2r ||/4"
         " + (alpha ||Re(|A|^r |A*|^r)|| + (1-alpha) w^r(A^2))/2"},
        {"thmsum", "upper", "w^2r", "alpha, r, n",
         "Thm 2.7",
         "w^2r(sum A_i) <= n^(2r-1)/4 || sum(|A_i|^2r + |A_i*|^2r) ||"
         " + n^(2r-1)/2 (alpha || sum Re(|A_i|^r |A_i*|^r) ||"
         " + (1-alpha) sum w^r(A_i^2))"},
        {"low1", "lower", "w", "",
         "Thm 2.8a", "w([[0,A],[B,0]]) >= ||Re(A) + i Im(B)||/2 + | ||A+B*|| - ||A-B*|| |/4"},
        {"low2", "lower", "w", "",
         "Thm 2.8b", "w([[0,A],[B,0]]) >= ||Re(B) + i Im(A)||/2 + | ||A+B*|| - ||A-B*|| |/4"},
        {"lowsingle", "lower", "w", "",
         "Cor 2.9", "w(A) >= ||A||/2 + | ||Re(A)|| - ||Im(A)|| |/2"},
        {"lowmax", "lower", "w", "",
         "Cor 2.10",
         "w([[0,A],[B,0]]) >= max(||A||, ||B||)/2 + | ||A+B*|| - ||A-B*|| |/4"},
        {"lowcomb", "lower", "w", "",
         "Cor 2.11",
         "w([[0,A],[B,0]]) >= ||A+B||/4 + | ||Re(A)+i Im(B)|| - ||Re(B)+i Im(A)|| |/4"
         " + | ||A+B*|| - ||A-B*|| |/4"},
    };
    return table;
}

SingleBoundEvaluator::SingleBoundEvaluator(CMatrix a, double radius_tol)
    : a_(std::move(a)), radius_tol_(radius_tol) {
    if (!(radius_tol > 0.0) || radius_tol > 1e-2)
        throw std::invalid_argument("radius_tol must lie in (0, 1e-2]");
}

const HermEigDecomp& SingleBoundEvaluator::gram_eig() {
    if (!gram_) gram_ = herm_eig(hermitize(adjoint(a_) * a_));
    return *gram_;
}

const HermEigDecomp& SingleBoundEvaluator::cogram_eig() {
    if (!cogram_) cogram_ = herm_eig(hermitize(a_ * adjoint(a_)));
    return *cogram_;
}

const CMatrix& SingleBoundEvaluator::abs_power(double r) {
    auto it = abs_pow_.find(r);
    if (it == abs_pow_.end())
        it = abs_pow_.emplace(r, psd_function(gram_eig(), r / 2.0)).first;
    return it->second;
}

const CMatrix& SingleBoundEvaluator::absadj_power(double r) {
    auto it = absadj_pow_.find(r);
    if (it == absadj_pow_.end())
        it = absadj_pow_.emplace(r, psd_function(cogram_eig(), r / 2.0)).first;
    return it->second;
}

const SingleBoundEvaluator::PowerPieces& SingleBoundEvaluator::pieces(double r) {
    auto it = pieces_.find(r);
    if (it == pieces_.end()) {
        PowerPieces p;
        p.quarter_norm = 0.25 * herm_norm(abs_power(2.0 * r) + absadj_power(2.0 * r));
        p.re_norm = herm_norm(real_part(abs_power(r) * absadj_power(r)));
        it = pieces_.emplace(r, p).first;
    }
    return it->second;
}

double SingleBoundEvaluator::norm() {
    if (!norm_) norm_ = std::sqrt(std::max(0.0, gram_eig().eigenvalues.back()));
    return *norm_;
}

double SingleBoundEvaluator::radius() {
    if (!radius_) radius_ = numerical_radius(a_, radius_tol_);
    return *radius_;
}

double SingleBoundEvaluator::radius_of_square() {
    if (!radius_sq_) radius_sq_ = numerical_radius(a_ * a_, radius_tol_);
    return *radius_sq_;
}

double SingleBoundEvaluator::radius_of_absprod() {
    if (!radius_absprod_)
        radius_absprod_ = numerical_radius(abs_power(1.0) * absadj_power(1.0), radius_tol_);
    return *radius_absprod_;
}

double SingleBoundEvaluator::re_absprod_norm() {
    if (!re_absprod_) re_absprod_ = pieces(1.0).re_norm;
    return *re_absprod_;
}

std::vector<BoundValue> SingleBoundEvaluator::classical() {
    if (!gram_sum_norm_)
        gram_sum_norm_ = herm_norm(hermitize(adjoint(a_) * a_) + hermitize(a_ * adjoint(a_)));
    if (!norm_sq_) norm_sq_ = op_norm(a_ * a_);
    const double s = *gram_sum_norm_;
    std::vector<BoundValue> out;
    out.push_back(make_value("eq11", BoundSide::lower, 1.0, 0.5 * norm()));
    out.push_back(make_value("eq11", BoundSide::upper, 1.0, norm()));
    out.push_back(make_value("eq12", BoundSide::lower, 2.0, 0.25 * s));
    out.push_back(make_value("eq12", BoundSide::upper, 2.0, 0.5 * s));
    out.push_back(
        make_value("eq13", BoundSide::upper, 1.0, 0.5 * (norm() + std::sqrt(*norm_sq_))));
    out.push_back(
        make_value("eq14", BoundSide::upper, 2.0, 0.25 * s + 0.5 * radius_of_square()));
    out.push_back(
        make_value("eq15", BoundSide::upper, 2.0, 0.25 * s + 0.5 * radius_of_absprod()));
    return out;
}

BoundValue SingleBoundEvaluator::interpolated_upper(double r, double alpha) {
    check_r(r);
    check_alpha(alpha);
    const PowerPieces& p = pieces(r);
    const double wsq_r = std::pow(radius_of_square(), r);
    BoundValue bv = make_value("cor26", BoundSide::upper, 2.0 * r,
                               p.quarter_norm +
                                   0.5 * (alpha * p.re_norm + (1.0 - alpha) * wsq_r));
    bv.alpha = alpha;
    bv.r = r;
    return bv;
}

BoundValue SingleBoundEvaluator::min_upper(double r) {
    check_r(r);
    const PowerPieces& p = pieces(r);
    const double wsq_r = std::pow(radius_of_square(), r);
    BoundValue bv = make_value("cor26", BoundSide::upper, 2.0 * r,
                               p.quarter_norm + 0.5 * std::min(p.re_norm, wsq_r));
    bv.r = r;
    return bv;
}

BoundValue SingleBoundEvaluator::lower_single_value() {
    const double re = herm_norm(real_part(a_));
    const double im = herm_norm(imag_part(a_));
    return make_value("lowsingle", BoundSide::lower, 1.0,
                      0.5 * norm() + 0.5 * std::abs(re - im));
}

PairBoundEvaluator::PairBoundEvaluator(CMatrix a, CMatrix b, double radius_tol)
    : a_(std::move(a), radius_tol), b_(std::move(b), radius_tol), radius_tol_(radius_tol) {
    if (a_.matrix().dim() != b_.matrix().dim())
        throw std::invalid_argument("pair bounds need matrices of equal dimension");
}

double PairBoundEvaluator::block_radius() {
    if (!block_radius_)
        block_radius_ =
            numerical_radius(block_offdiag(a_.matrix(), b_.matrix()), radius_tol_);
    return *block_radius_;
}

double PairBoundEvaluator::sum_radius() {
    if (!sum_radius_) sum_radius_ = numerical_radius(a_.matrix() + b_.matrix(), radius_tol_);
    return *sum_radius_;
}

BoundValue PairBoundEvaluator::offdiag(double alpha, double r) {
    check_alpha(alpha);
    check_r(r);
    if (!cross_radius_)
        cross_radius_ = std::max(numerical_radius(a_.matrix() * b_.matrix(), radius_tol_),
                                 numerical_radius(b_.matrix() * a_.matrix(), radius_tol_));
    // Private piece caches of the two operand evaluators carry the per-r work.
    const double m1 = herm_norm(b_.abs_power(2.0 * r) + a_.absadj_power(2.0 * r));
    const double m2 = herm_norm(a_.abs_power(2.0 * r) + b_.absadj_power(2.0 * r));
    const double re1 = herm_norm(real_part(b_.abs_power(r) * a_.absadj_power(r)));
    const double re2 = herm_norm(real_part(a_.abs_power(r) * b_.absadj_power(r)));
    BoundValue bv = make_value(
        "thm25", BoundSide::upper, 2.0 * r,
        0.25 * std::max(m1, m2) + 0.5 * (1.0 - alpha) * std::pow(*cross_radius_, r) +
            0.5 * alpha * std::max(re1, re2));
    bv.alpha = alpha;
    bv.r = r;
    return bv;
}

const PairBoundEvaluator::LowerPieces& PairBoundEvaluator::lower_pieces() {
    if (!lower_) {
        const CMatrix& a = a_.matrix();
        const CMatrix& b = b_.matrix();
        const Complex i1(0.0, 1.0);
        const CMatrix mixed_ab = real_part(a) + i1 * imag_part(b);
        const CMatrix mixed_ba = real_part(b) + i1 * imag_part(a);
        LowerPieces p;
        p.mixed_ab = op_norm(mixed_ab);
        p.mixed_ba = op_norm(mixed_ba);
        // The adjoint form Re(A) - i Im(B) must produce the same norm; a gap
        // here means the eigensolver misbehaved.
        const double adj_form = op_norm(real_part(a) - i1 * imag_part(b));
        if (std::abs(adj_form - p.mixed_ab) > 1e-12 * std::max(1.0, p.mixed_ab))
            throw std::runtime_error("mixed real/imaginary norm mismatch");
        const double plus = op_norm(a + adjoint(b));
        const double minus = op_norm(a - adjoint(b));
        p.osc = 0.25 * std::abs(plus - minus);
        lower_ = p;
    }
    return *lower_;
}

std::pair<BoundValue, BoundValue> PairBoundEvaluator::lower_pair() {
    const LowerPieces& p = lower_pieces();
    return {make_value("low1", BoundSide::lower, 1.0, 0.5 * p.mixed_ab + p.osc),
            make_value("low2", BoundSide::lower, 1.0, 0.5 * p.mixed_ba + p.osc)};
}

BoundValue PairBoundEvaluator::lower_max_value() {
    const LowerPieces& p = lower_pieces();
    const double na = op_norm(a_.matrix());
    const double nb = op_norm(b_.matrix());
    return make_value("lowmax", BoundSide::lower, 1.0,
                      0.5 * std::max(na, nb) + p.osc);
}

BoundValue PairBoundEvaluator::lower_combined_value() {
    const LowerPieces& p = lower_pieces();
    const double nsum = op_norm(a_.matrix() + b_.matrix());
    return make_value("lowcomb", BoundSide::lower, 1.0,
                      0.25 * nsum + 0.25 * std::abs(p.mixed_ab - p.mixed_ba) + p.osc);
}

BoundValue PairBoundEvaluator::sum_pair(double alpha, double r) {
    check_alpha(alpha);
    check_r(r);
    const double coef = std::pow(2.0, 2.0 * r - 1.0);
    const double gsum = herm_norm(a_.abs_power(2.0 * r) + a_.absadj_power(2.0 * r) +
                                  b_.abs_power(2.0 * r) + b_.absadj_power(2.0 * r));
    const double resum = herm_norm(real_part(a_.abs_power(r) * a_.absadj_power(r)) +
                                   real_part(b_.abs_power(r) * b_.absadj_power(r)));
    const double wsq_sum =
        std::pow(a_.radius_of_square(), r) + std::pow(b_.radius_of_square(), r);
    BoundValue bv = make_value(
        "thmsum", BoundSide::upper, 2.0 * r,
        0.25 * coef * gsum + 0.5 * coef * (alpha * resum + (1.0 - alpha) * wsq_sum));
    bv.alpha = alpha;
    bv.r = r;
    bv.operands = 2;
    return bv;
}

std::vector<BoundValue> classical_bounds(const CMatrix& a, double radius_tol) {
    return SingleBoundEvaluator(a, radius_tol).classical();
}

BoundValue offdiag_upper(const CMatrix& a, const CMatrix& b, double alpha, double r,
                         double radius_tol) {
    return PairBoundEvaluator(a, b, radius_tol).offdiag(alpha, r);
}

BoundValue cor_interpolated_upper(const CMatrix& a, double r, double alpha,
                                  double radius_tol) {
    return SingleBoundEvaluator(a, radius_tol).interpolated_upper(r, alpha);
}

BoundValue cor_min_upper(const CMatrix& a, double r, double radius_tol) {
    return SingleBoundEvaluator(a, radius_tol).min_upper(r);
}

BoundValue sum_upper(const std::vector<CMatrix>& ops, double alpha, double r,
                     double radius_tol) {
    if (ops.empty()) throw std::invalid_argument("sum_upper needs at least one operand");
    check_alpha(alpha);
    check_r(r);
    const std::size_t dim = ops.front().dim();
    CMatrix gram_sum(dim);
    CMatrix re_sum(dim);
    double wsq_sum = 0.0;
    for (const CMatrix& op : ops) {
        if (op.dim() != dim)
            throw std::invalid_argument("sum_upper operands must share a dimension");
        SingleBoundEvaluator ev(op, radius_tol);
        gram_sum = gram_sum + ev.abs_power(2.0 * r) + ev.absadj_power(2.0 * r);
        re_sum = re_sum + real_part(ev.abs_power(r) * ev.absadj_power(r));
        wsq_sum += std::pow(ev.radius_of_square(), r);
    }
    const double n = static_cast<double>(ops.size());
    const double coef = std::pow(n, 2.0 * r - 1.0);
    BoundValue bv = make_value(
        "thmsum", BoundSide::upper, 2.0 * r,
        0.25 * coef * herm_norm(gram_sum) +
            0.5 * coef * (alpha * herm_norm(re_sum) + (1.0 - alpha) * wsq_sum));
    bv.alpha = alpha;
    bv.r = r;
    bv.operands = static_cast<int>(ops.size());
    return bv;
}

std::pair<BoundValue, BoundValue> lower_offdiag(const CMatrix& a, const CMatrix& b) {
    return PairBoundEvaluator(a, b).lower_pair();
}

BoundValue lower_single(const CMatrix& a) {
    return SingleBoundEvaluator(a).lower_single_value();
}

BoundValue lower_max(const CMatrix& a, const CMatrix& b) {
    return PairBoundEvaluator(a, b).lower_max_value();
}

BoundValue lower_combined(const CMatrix& a, const CMatrix& b) {
    return PairBoundEvaluator(a, b).lower_combined_value();
}

}  // namespace nradius
