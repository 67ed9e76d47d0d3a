#include "nradius/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "nradius/spectral.hpp"

namespace nradius {

namespace {

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CMatrix gaussian_matrix(std::size_t dim, RandomStream& rs) {
    CMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rs.complex_gaussian();
    return g;
}

// Equality statement recorded as a one-sided check: margin = -|lhs - rhs|.
CheckRecord make_equality_check(std::string bound_id, std::string params,
                                std::string provenance, double lhs, double rhs) {
    CheckRecord rec;
    rec.bound_id = std::move(bound_id);
    rec.params = std::move(params);
    rec.provenance = std::move(provenance);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.margin = -std::abs(lhs - rhs);
    rec.violated = rec.margin < -violation_threshold(lhs, rhs);
    return rec;
}

std::string provenance_of(const EnsembleSpec& spec, std::size_t index) {
    return kind_name(spec.kind) + ":d" + std::to_string(spec.dim) + ":s" +
           std::to_string(spec.seed) + ":#" + std::to_string(index);
}

void push_bound_check(std::vector<CheckRecord>& out, const BoundValue& bv,
                      double target_radius, const std::string& prov) {
    const double lhs = std::pow(target_radius, bv.target_exponent);
    out.push_back(make_check(bv.id, params_string(bv), prov, bv.side, lhs, bv.value));
}

std::vector<CheckRecord> refinement_records(SingleBoundEvaluator& ev,
                                            const std::string& prov) {
    double eq14 = 0.0, eq15 = 0.0;
    for (const BoundValue& bv : ev.classical()) {
        if (bv.id == "eq14") eq14 = bv.value;
        if (bv.id == "eq15") eq15 = bv.value;
    }
    const double min_form = ev.min_upper(1.0).value;
    std::vector<CheckRecord> out;
    out.push_back(make_check("refine_cor26_eq14", "r=1", prov, BoundSide::upper,
                             min_form, eq14));
    out.push_back(make_check("refine_cor26_eq15", "r=1", prov, BoundSide::upper,
                             min_form, eq15));
    out.push_back(make_check("refine_re_w", "", prov, BoundSide::upper,
                             ev.re_absprod_norm(), ev.radius_of_absprod()));
    return out;
}

std::vector<CheckRecord> chain_records(SingleBoundEvaluator& ev, const std::string& prov) {
    double eq12u = 0.0, eq13 = 0.0, eq14 = 0.0;
    for (const BoundValue& bv : ev.classical()) {
        if (bv.id == "eq12" && bv.side == BoundSide::upper) eq12u = bv.value;
        if (bv.id == "eq13") eq13 = bv.value;
        if (bv.id == "eq14") eq14 = bv.value;
    }
    std::vector<CheckRecord> out;
    out.push_back(
        make_check("chain_eq14_eq12", "", prov, BoundSide::upper, eq14, eq12u));
    out.push_back(
        make_check("chain_eq14_eq13", "", prov, BoundSide::upper, eq14, eq13 * eq13));
    return out;
}

std::vector<CheckRecord> evaluate_single(const CMatrix& m, const std::string& prov,
                                         const SuiteConfig& config, double radius_tol) {
    std::vector<CheckRecord> out;
    SingleBoundEvaluator ev(m, radius_tol);
    const double w = ev.radius();
    for (const BoundValue& bv : ev.classical()) push_bound_check(out, bv, w, prov);
    push_bound_check(out, ev.lower_single_value(), w, prov);
    for (double r : config.rs) push_bound_check(out, ev.min_upper(r), w, prov);
    for (double r : config.rs)
        for (double alpha : config.alphas)
            push_bound_check(out, ev.interpolated_upper(r, alpha), w, prov);
    for (CheckRecord& rec : refinement_records(ev, prov)) out.push_back(std::move(rec));
    for (CheckRecord& rec : chain_records(ev, prov)) out.push_back(std::move(rec));
    return out;
}

std::vector<CheckRecord> evaluate_pair(const CMatrix& a, const CMatrix& b,
                                       const std::string& prov, const SuiteConfig& config,
                                       double radius_tol) {
    std::vector<CheckRecord> out;
    PairBoundEvaluator ev(a, b, radius_tol);
    const double wb = ev.block_radius();
    const auto [low1, low2] = ev.lower_pair();
    push_bound_check(out, low1, wb, prov);
    push_bound_check(out, low2, wb, prov);
    push_bound_check(out, ev.lower_max_value(), wb, prov);
    push_bound_check(out, ev.lower_combined_value(), wb, prov);
    for (double r : config.rs)
        for (double alpha : config.alphas)
            push_bound_check(out, ev.offdiag(alpha, r), wb, prov);
    const double ws = ev.sum_radius();
    for (double r : config.rs)
        for (double alpha : config.alphas)
            push_bound_check(out, ev.sum_pair(alpha, r), ws, prov);
    return out;
}

std::vector<CheckRecord> evaluate_item(const EnsembleSpec& spec, std::size_t index,
                                       const SuiteConfig& config) {
    const std::string prov = provenance_of(spec, index);
    auto run = [&](double tol) {
        if (is_pair_kind(spec.kind)) {
            const auto [a, b] = sample_pair_at(spec, index);
            return evaluate_pair(a, b, prov, config, tol);
        }
        return evaluate_single(sample_matrix_at(spec, index), prov, config, tol);
    };
    std::vector<CheckRecord> records = run(config.radius_tol);
    const bool any_violated =
        std::any_of(records.begin(), records.end(),
                    [](const CheckRecord& r) { return r.violated; });
    // A flag usually means a radius under-estimate; tightening the radius
    // tolerance re-tests the item before the verdict stands.
    if (any_violated && config.recheck_tol < config.radius_tol)
        records = run(config.recheck_tol);
    return records;
}

void validate_config(const SuiteConfig& config) {
    for (double r : config.rs)
        if (!(r >= 1.0 && r <= 8.0))
            throw std::invalid_argument("suite powers must lie in [1, 8]");
    for (double alpha : config.alphas)
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw std::invalid_argument("suite alphas must lie in [0, 1]");
    if (!(config.radius_tol > 0.0) || !(config.recheck_tol > 0.0))
        throw std::invalid_argument("suite tolerances must be positive");
}

}  // namespace

double violation_threshold(double lhs, double rhs) {
    return 1e-9 + 1e-7 * std::max(std::abs(lhs), std::abs(rhs));
}

CheckRecord make_check(std::string bound_id, std::string params, std::string provenance,
                       BoundSide side, double lhs, double rhs) {
    CheckRecord rec;
    rec.bound_id = std::move(bound_id);
    rec.params = std::move(params);
    rec.provenance = std::move(provenance);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.margin = side == BoundSide::upper ? rhs - lhs : lhs - rhs;
    rec.violated = rec.margin < -violation_threshold(lhs, rhs);
    return rec;
}

std::vector<CheckRecord> run_inequality_suite(const SuiteConfig& config) {
    validate_config(config);
    struct Item {
        const EnsembleSpec* spec;
        std::size_t index;
    };
    std::vector<Item> items;
    for (const EnsembleSpec& spec : config.ensembles)
        for (std::size_t i = 0; i < spec.count; ++i) items.push_back({&spec, i});

    std::vector<std::vector<CheckRecord>> results(items.size());
    // Honor the requested count even on few cores: oversubscribed workers still
    // interleave, which is exactly what the determinism guarantee must survive.
    const unsigned thread_count = std::clamp(config.threads, 1u, 64u);
    if (thread_count <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            results[i] = evaluate_item(*items[i].spec, items[i].index, config);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                results[i] = evaluate_item(*items[i].spec, items[i].index, config);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<CheckRecord> merged;
    for (std::vector<CheckRecord>& part : results)
        for (CheckRecord& rec : part) merged.push_back(std::move(rec));
    return merged;
}

std::vector<CheckRecord> run_inequality_suite(const std::vector<EnsembleSpec>& specs,
                                              const std::vector<double>& rs,
                                              const std::vector<double>& alphas) {
    SuiteConfig config;
    config.ensembles = specs;
    config.rs = rs;
    config.alphas = alphas;
    return run_inequality_suite(config);
}

SuiteSummary summarize(const std::vector<CheckRecord>& records) {
    SuiteSummary summary;
    std::map<std::string, double> sums;
    for (const CheckRecord& rec : records) {
        BoundSummary& bs = summary.by_bound[rec.bound_id];
        bs.trials += 1;
        bs.min_margin = std::min(bs.min_margin, rec.margin);
        sums[rec.bound_id] += rec.margin;
        if (rec.violated) bs.violations += 1;
        summary.trials += 1;
        summary.min_margin = std::min(summary.min_margin, rec.margin);
        if (rec.violated) summary.violations += 1;
    }
    for (auto& [id, bs] : summary.by_bound)
        bs.mean_margin = sums[id] / static_cast<double>(bs.trials);
    return summary;
}

void write_records_csv(const std::vector<CheckRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write records csv: " + path);
    out << "bound_id,params,provenance,lhs,rhs,margin,violated\n";
    for (const CheckRecord& rec : records) {
        out << rec.bound_id << ',' << rec.params << ',' << rec.provenance << ','
            << fmt17(rec.lhs) << ',' << fmt17(rec.rhs) << ',' << fmt17(rec.margin) << ','
            << (rec.violated ? "true" : "false") << '\n';
    }
}

void write_summary_json(const SuiteSummary& summary, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write summary json: " + path);
    out << '{';
    bool first = true;
    for (const auto& [id, bs] : summary.by_bound) {
        if (!first) out << ',';
        first = false;
        out << '"' << id << "\":{\"min_margin\":" << fmt17(bs.min_margin)
            << ",\"mean_margin\":" << fmt17(bs.mean_margin)
            << ",\"violations\":" << bs.violations << ",\"trials\":" << bs.trials << '}';
    }
    out << "}\n";
}

CheckRecord check_lemma_mccarthy(const CMatrix& h, const CVector& x, double r,
                                 std::string provenance) {
    if (std::abs(vec_norm(x) - 1.0) > 1e-12)
        throw std::invalid_argument("mccarthy check needs a unit vector");
    const CMatrix hr = herm_power(h, r);  // validates r >= 1 and positivity
    const double base = std::max(0.0, quadratic_form(h, x).real());
    const double lhs = std::pow(base, r);
    const double rhs = quadratic_form(hr, x).real();
    return make_check("mccarthy", "r=" + fmt_g(r), std::move(provenance),
                      BoundSide::upper, lhs, rhs);
}

CheckRecord check_lemma_buzano(const CVector& x, const CVector& y, const CVector& e,
                               std::string provenance) {
    if (std::abs(vec_norm(e) - 1.0) > 1e-12)
        throw std::invalid_argument("buzano check needs a unit reference vector");
    const double lhs = std::abs(inner(x, e) * inner(e, y));
    const double rhs = 0.5 * (vec_norm(x) * vec_norm(y) + std::abs(inner(x, y)));
    return make_check("buzano", "", std::move(provenance), BoundSide::upper, lhs, rhs);
}

CheckRecord check_lemma_bohr(const std::vector<double>& values, double r,
                             std::string provenance) {
    if (values.empty()) throw std::invalid_argument("bohr check needs at least one value");
    if (!(r >= 1.0)) throw std::invalid_argument("bohr check needs r >= 1");
    double sum = 0.0;
    double powered = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("bohr check needs nonnegative values");
        sum += v;
        powered += std::pow(v, r);
    }
    const double n = static_cast<double>(values.size());
    return make_check("bohr", "r=" + fmt_g(r), std::move(provenance), BoundSide::upper,
                      std::pow(sum, r), std::pow(n, r - 1.0) * powered);
}

CheckRecord check_lemma_mixed_schwarz(const CMatrix& a, const CVector& x, const CVector& y,
                                      std::string provenance) {
    const double lhs = std::abs(inner(matvec(a, x), y));
    const double qx = std::max(0.0, quadratic_form(abs_op(a), x).real());
    const double qy = std::max(0.0, quadratic_form(abs_op(adjoint(a)), y).real());
    const double rhs = std::sqrt(qx) * std::sqrt(qy);
    return make_check("mixed_schwarz", "", std::move(provenance), BoundSide::upper, lhs,
                      rhs);
}

std::vector<CheckRecord> mccarthy_suite(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        RandomStream rs = RandomStream::derive(seed, "mccarthy", i);
        const std::size_t dim = 2 + i % 5;
        const CMatrix g = gaussian_matrix(dim, rs);
        const CMatrix h = hermitize(adjoint(g) * g);
        const CVector x = rs.unit_vector(dim);
        const double r = 1.0 + 3.0 * rs.uniform();
        out.push_back(check_lemma_mccarthy(h, x, r, "mccarthy:#" + std::to_string(i)));
    }
    return out;
}

std::vector<CheckRecord> buzano_suite(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        RandomStream rs = RandomStream::derive(seed, "buzano", i);
        const std::size_t dim = 2 + i % 5;
        const CVector x = rs.gaussian_vector(dim);
        const CVector y = rs.gaussian_vector(dim);
        const CVector e = rs.unit_vector(dim);
        out.push_back(check_lemma_buzano(x, y, e, "buzano:#" + std::to_string(i)));
    }
    return out;
}

std::vector<CheckRecord> bohr_suite(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        RandomStream rs = RandomStream::derive(seed, "bohr", i);
        const std::size_t n = 1 + i % 6;
        std::vector<double> values(n);
        for (double& v : values) v = std::abs(rs.gaussian());
        const double r = 1.0 + 3.0 * rs.uniform();
        out.push_back(check_lemma_bohr(values, r, "bohr:#" + std::to_string(i)));
    }
    return out;
}

std::vector<CheckRecord> mixed_schwarz_suite(std::size_t trials, std::uint64_t seed) {
    std::vector<CheckRecord> out;
    out.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        RandomStream rs = RandomStream::derive(seed, "mixed_schwarz", i);
        const std::size_t dim = 2 + i % 5;
        const CMatrix a = gaussian_matrix(dim, rs);
        const CVector x = rs.gaussian_vector(dim);
        const CVector y = rs.gaussian_vector(dim);
        out.push_back(
            check_lemma_mixed_schwarz(a, x, y, "mixed_schwarz:#" + std::to_string(i)));
    }
    return out;
}

std::vector<CheckRecord> lemma_suites(std::size_t trials_each, std::uint64_t seed) {
    std::vector<CheckRecord> out = mccarthy_suite(trials_each, seed);
    auto append = [&out](std::vector<CheckRecord> part) {
        for (CheckRecord& rec : part) out.push_back(std::move(rec));
    };
    append(buzano_suite(trials_each, seed));
    append(bohr_suite(trials_each, seed));
    append(mixed_schwarz_suite(trials_each, seed));
    return out;
}

std::vector<CheckRecord> identity_check(const CMatrix& a, const CMatrix& b,
                                        std::string provenance, double radius_tol) {
    const double wa = numerical_radius(a, radius_tol);
    const double wb = numerical_radius(b, radius_tol);
    std::vector<CheckRecord> out;
    out.push_back(make_equality_check("ident_blockdiag", "", provenance,
                                      numerical_radius(block_diag(a, b), radius_tol),
                                      std::max(wa, wb)));
    const double wsum = numerical_radius(a + b, radius_tol);
    const double wdiff = numerical_radius(a - b, radius_tol);
    out.push_back(make_equality_check("ident_symblock", "", provenance,
                                      numerical_radius(block_symmetric(a, b), radius_tol),
                                      std::max(wsum, wdiff)));
    out.push_back(make_equality_check("ident_offdiag_same", "", provenance,
                                      numerical_radius(block_offdiag(b, b), radius_tol),
                                      wb));
    return out;
}

std::vector<CheckRecord> refinement_check(const CMatrix& a, std::string provenance,
                                          double radius_tol) {
    SingleBoundEvaluator ev(a, radius_tol);
    return refinement_records(ev, provenance);
}

DiskTheoremReport disk_theorem_check(const CMatrix& a, std::size_t boundary_count,
                                     double boundary_tol, double radius_tol) {
    DiskTheoremReport report;
    SingleBoundEvaluator ev(a, radius_tol);
    report.re_absprod_norm = ev.re_absprod_norm();
    const double opn = op_norm(a);
    report.op_norm_sq = opn * opn;
    report.hypothesis_holds = report.re_absprod_norm <= 1e-10 * report.op_norm_sq;
    const double s =
        herm_norm(hermitize(adjoint(a) * a) + hermitize(a * adjoint(a)));
    report.disk_radius = 0.5 * std::sqrt(s);
    report.radius = ev.radius();
    report.radius_gap = std::abs(report.radius - report.disk_radius);
    report.boundary =
        disk_check(range_boundary(a, boundary_count), report.disk_radius, boundary_tol);
    return report;
}

EqualityProbeReport equality_probe(const CMatrix& a, const CMatrix& b, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("equality_probe eps must be positive");
    EqualityProbeReport report;
    report.eps = eps;
    report.delta = 10.0 * eps;
    report.block_radius = numerical_radius(block_offdiag(a, b), 1e-11);

    const Complex i1(0.0, 1.0);
    const double mixed_ab = op_norm(real_part(a) + i1 * imag_part(b));
    const double mixed_ba = op_norm(real_part(b) + i1 * imag_part(a));
    const double plus = op_norm(a + adjoint(b));
    const double minus = op_norm(a - adjoint(b));
    const double na = op_norm(a);
    const double nb = op_norm(b);
    const double nsum = op_norm(a + b);

    auto condition = [&](std::string name, double lhs, double rhs) {
        EqualityCondition c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.holds = std::abs(lhs - rhs) <= report.delta;
        return c;
    };
    auto finish = [](EqualityClause& clause) {
        clause.conditions_hold = true;
        for (const EqualityCondition& c : clause.conditions)
            clause.conditions_hold = clause.conditions_hold && c.holds;
    };

    EqualityClause c1;
    c1.name = "half_mixed_ab";
    c1.bound_value = 0.5 * mixed_ab;
    c1.triggered = std::abs(report.block_radius - c1.bound_value) <= eps;
    c1.conditions.push_back(condition("norm_plus_eq_minus", plus, minus));
    c1.conditions.push_back(condition("norm_plus_eq_mixed", plus, mixed_ab));
    finish(c1);

    EqualityClause c2;
    c2.name = "half_mixed_ba";
    c2.bound_value = 0.5 * mixed_ba;
    c2.triggered = std::abs(report.block_radius - c2.bound_value) <= eps;
    c2.conditions.push_back(condition("norm_plus_eq_minus", plus, minus));
    c2.conditions.push_back(condition("norm_plus_eq_mixed", plus, mixed_ba));
    finish(c2);

    EqualityClause c3;
    c3.name = "quarter_sum";
    c3.bound_value = 0.25 * nsum;
    c3.triggered = std::abs(report.block_radius - c3.bound_value) <= eps;
    c3.conditions.push_back(condition("norm_a_eq_b", na, nb));
    c3.conditions.push_back(condition("norm_plus_eq_minus", plus, minus));
    c3.conditions.push_back(condition("mixed_ab_eq_ba", mixed_ab, mixed_ba));
    finish(c3);

    report.clauses = {std::move(c1), std::move(c2), std::move(c3)};
    return report;
}

NoncomparabilityReport noncomparability_demo() {
    const CMatrix a = named_matrix("rem1a");
    const CMatrix b1 = named_matrix("rem1b1");
    const CMatrix b2 = named_matrix("rem1b2");
    const Complex i1(0.0, 1.0);

    NoncomparabilityReport report;
    report.mixed_first_1 = op_norm(real_part(a) + i1 * imag_part(b1));
    report.max_first_1 = std::max(op_norm(a), op_norm(b1));
    report.mixed_first_2 = op_norm(real_part(a) + i1 * imag_part(b2));
    report.max_first_2 = std::max(op_norm(a), op_norm(b2));
    report.low1_pair1 = lower_offdiag(a, b1).first.value;
    report.lowmax_pair1 = lower_max(a, b1).value;
    report.low1_pair2 = lower_offdiag(a, b2).first.value;
    report.lowmax_pair2 = lower_max(a, b2).value;
    report.orderings_hold = report.low1_pair1 > report.lowmax_pair1 &&
                            report.low1_pair2 < report.lowmax_pair2;
    if (!report.orderings_hold)
        throw std::runtime_error("noncomparability orderings failed to reproduce");
    return report;
}

StrictnessProbe strictness_probe(const CMatrix& a) {
    SingleBoundEvaluator ev(a);
    const CMatrix prod = ev.abs_power(1.0) * ev.absadj_power(1.0);
    const CMatrix re = real_part(prod);
    const CMatrix im = imag_part(prod);
    const HermEigDecomp eig = herm_eig(re);
    const std::size_t n = re.dim();
    const std::size_t pick =
        std::abs(eig.eigenvalues.back()) >= std::abs(eig.eigenvalues.front()) ? n - 1 : 0;
    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = eig.eigenvectors(i, pick);
    StrictnessProbe probe;
    probe.re_norm = std::max(std::abs(eig.eigenvalues.back()),
                             std::abs(eig.eigenvalues.front()));
    probe.re_extremal = std::abs(quadratic_form(re, x).real());
    probe.im_extremal = std::abs(quadratic_form(im, x).real());
    return probe;
}

}  // namespace nradius
