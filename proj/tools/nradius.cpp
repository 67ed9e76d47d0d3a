// Command-line front end: evaluate radius bounds on a matrix, run the seeded
// verification suite, trace numerical-range boundaries, list the catalog.
//
// Exit codes: 0 success (and no violations), 1 usage or I/O error, 2 an
// inequality the toolkit guarantees was found violated (implementation bug).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nradius/bounds.hpp"
#include "nradius/ensembles.hpp"
#include "nradius/harness.hpp"
#include "nradius/matrix_io.hpp"
#include "nradius/numerical_range.hpp"
#include "nradius/spectral.hpp"

namespace {

using namespace nradius;

constexpr std::uint64_t kDefaultSeed = 42;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CMatrix resolve_matrix(const std::string& path, const std::string& name) {
    if (!path.empty() && !name.empty())
        throw std::runtime_error("give either a matrix file or --matrix, not both");
    if (!path.empty()) return load_matrix_file(path);
    if (!name.empty()) return named_matrix(name);
    throw std::runtime_error("no input matrix: pass a file path or --matrix <name>");
}

int cmd_bounds(const std::string& path, const std::string& name, std::vector<double> rs,
               std::vector<double> alphas, double tol, bool as_json) {
    const CMatrix m = resolve_matrix(path, name);
    if (rs.empty()) rs = {1.0};
    if (alphas.empty()) alphas = {0.5};
    if (tol <= 0.0) tol = 1e-9;

    SingleBoundEvaluator ev(m, tol);
    const double w = ev.radius();

    std::vector<CheckRecord> records;
    auto add = [&](const BoundValue& bv) {
        const double lhs = std::pow(w, bv.target_exponent);
        records.push_back(
            make_check(bv.id, params_string(bv), "input", bv.side, lhs, bv.value));
    };
    for (const BoundValue& bv : ev.classical()) add(bv);
    add(ev.lower_single_value());
    for (double r : rs) add(ev.min_upper(r));
    for (double r : rs)
        for (double alpha : alphas) add(ev.interpolated_upper(r, alpha));

    bool violated = false;
    for (const CheckRecord& rec : records) violated = violated || rec.violated;

    if (as_json) {
        std::string out = "{\"dim\":" + std::to_string(m.dim()) +
                          ",\"w\":" + fmt17(w) + ",\"w2\":" + fmt17(w * w) + ",\"bounds\":[";
        for (std::size_t i = 0; i < records.size(); ++i) {
            const CheckRecord& rec = records[i];
            if (i) out += ',';
            out += "{\"id\":\"" + rec.bound_id + "\",\"params\":\"" + rec.params +
                   "\",\"lhs\":" + fmt17(rec.lhs) + ",\"rhs\":" + fmt17(rec.rhs) +
                   ",\"margin\":" + fmt17(rec.margin) +
                   ",\"violated\":" + (rec.violated ? "true" : "false") + '}';
        }
        out += "]}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("dim = %zu\n", m.dim());
        std::printf("w(A)   = %.10g\n", w);
        std::printf("w^2(A) = %.10g\n", w * w);
        std::printf("%-10s %-22s %-16s %-16s %-12s %s\n", "id", "params", "target value",
                    "bound", "margin", "ok");
        for (const CheckRecord& rec : records) {
            std::printf("%-10s %-22s %-16.10g %-16.10g %-12.3e %s\n", rec.bound_id.c_str(),
                        rec.params.empty() ? "-" : rec.params.c_str(), rec.lhs, rec.rhs,
                        rec.margin, rec.violated ? "VIOLATED" : "ok");
        }
    }
    return violated ? 2 : 0;
}

int demo_noncomparability() {
    const NoncomparabilityReport rep = noncomparability_demo();
    std::printf("pair 1: ||Re(A)+i Im(B)|| = %.8f (sqrt 18), max(||A||,||B||) = %.8f (sqrt 13)\n",
                rep.mixed_first_1, rep.max_first_1);
    std::printf("pair 2: ||Re(A)+i Im(B)|| = %.8f (sqrt 9),  max(||A||,||B||) = %.8f (sqrt 13)\n",
                rep.mixed_first_2, rep.max_first_2);
    std::printf("pair 1 bounds: low1 = %.8f > lowmax = %.8f\n", rep.low1_pair1,
                rep.lowmax_pair1);
    std::printf("pair 2 bounds: low1 = %.8f < lowmax = %.8f\n", rep.low1_pair2,
                rep.lowmax_pair2);
    std::printf("orderings hold: the two lower bounds are not comparable\n");
    return 0;
}

int demo_counterexample() {
    const CMatrix j3 = named_matrix("j3");
    const DiskTheoremReport rep = disk_theorem_check(j3, 256);
    const StrictnessProbe probe = strictness_probe(j3);
    std::printf("w(J3)                 = %.8f\n", rep.radius);
    std::printf("0.5 sqrt||A*A+AA*||   = %.8f\n", rep.disk_radius);
    std::printf("||Re(|A||A*|)||       = %.8f (nonzero)\n", rep.re_absprod_norm);
    std::printf("boundary deviation    = %.3e (disk: %s)\n", rep.boundary.max_deviation,
                rep.boundary.is_circle ? "true" : "false");
    std::printf("extremal <Re(.)x,x>   = %.8f, <Im(.)x,x> = %.8f\n", probe.re_extremal,
                probe.im_extremal);
    std::printf("range is the disk of radius w although Re(|A||A*|) != 0\n");
    const bool sane = std::abs(rep.radius - std::numbers::sqrt2 / 2.0) < 1e-6 &&
                      std::abs(rep.re_absprod_norm - 1.0) < 1e-9 &&
                      rep.boundary.is_circle;
    return sane ? 0 : 2;
}

int cmd_verify(std::uint64_t seed, std::vector<std::string> ensemble_args,
               std::vector<double> rs, std::vector<double> alphas, double tol,
               unsigned threads, const std::string& out_dir, const std::string& demo) {
    if (!demo.empty()) {
        if (demo == "noncomparability") return demo_noncomparability();
        if (demo == "counterexample") return demo_counterexample();
        throw std::runtime_error("unknown demo: " + demo +
                                 " (try noncomparability or counterexample)");
    }

    SuiteConfig config;
    config.threads = threads;
    if (!rs.empty()) config.rs = rs;
    if (!alphas.empty()) config.alphas = alphas;
    if (tol > 0.0) config.radius_tol = tol;

    if (ensemble_args.empty()) {
        for (const char* kind :
             {"ginibre", "hermitian", "normal", "unitary", "nilpotent", "offdiag_pair"})
            for (std::size_t dim : {2, 3, 4, 6, 8})
                config.ensembles.push_back(
                    {kind_from_name(kind), dim, 50, seed});
    } else {
        for (const std::string& arg : ensemble_args) {
            const auto c1 = arg.find(':');
            const auto c2 = arg.find(':', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw std::runtime_error("--ensemble expects kind:dim:count, got " + arg);
            EnsembleSpec spec;
            spec.kind = kind_from_name(arg.substr(0, c1));
            spec.dim = static_cast<std::size_t>(std::stoul(arg.substr(c1 + 1, c2 - c1 - 1)));
            spec.count = static_cast<std::size_t>(std::stoul(arg.substr(c2 + 1)));
            spec.seed = seed;
            config.ensembles.push_back(spec);
        }
    }

    std::vector<CheckRecord> records = run_inequality_suite(config);
    for (CheckRecord& rec : lemma_suites(1000, seed)) records.push_back(std::move(rec));

    const SuiteSummary summary = summarize(records);
    std::filesystem::create_directories(out_dir.empty() ? "." : out_dir);
    const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
    write_records_csv(records, (dir / "records.csv").string());
    write_summary_json(summary, (dir / "summary.json").string());

    std::printf("violations=%zu trials=%zu min_margin=%s\n", summary.violations,
                summary.trials, fmt17(summary.min_margin).c_str());
    return summary.violations == 0 ? 0 : 2;
}

int cmd_range(const std::string& path, const std::string& name, std::size_t count,
              const std::string& out_file, double tol) {
    const CMatrix m = resolve_matrix(path, name);
    if (tol <= 0.0) tol = 1e-6;
    const RangeBoundary boundary = range_boundary(m, count);
    write_boundary_csv(boundary, out_file);

    const double s = herm_norm(hermitize(adjoint(m) * m) + hermitize(m * adjoint(m)));
    const double disk_radius = 0.5 * std::sqrt(s);
    const DiskCheckResult check = disk_check(boundary, disk_radius, tol);
    std::printf("samples = %zu written to %s\n", boundary.samples.size(), out_file.c_str());
    std::printf("disk_radius = %.10g\n", disk_radius);
    std::printf("max_deviation = %.3e\n", check.max_deviation);
    std::printf("disk = %s\n", check.is_circle ? "true" : "false");
    return 0;
}

int cmd_catalog(bool as_json) {
    const std::vector<CatalogEntry>& table = bound_catalog();
    if (as_json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const CatalogEntry& e : table)
            out.push_back({{"id", e.id},
                           {"sides", e.sides},
                           {"target", e.target},
                           {"params", e.params},
                           {"reference", e.reference}});
        std::printf("%s\n", out.dump().c_str());
        return 0;
    }
    std::printf("%-10s %-7s %-6s %-40s %s\n", "id", "sides", "target", "params",
                "reference");
    for (const CatalogEntry& e : table)
        std::printf("%-10s %-7s %-6s %-40s %s\n", e.id.c_str(), e.sides.c_str(),
                    e.target.c_str(), e.params.empty() ? "-" : e.params.c_str(),
                    e.reference.c_str());
    std::size_t upper = 0, lower = 0;
    for (const CatalogEntry& e : table) {
        if (e.sides == "upper" || e.sides == "both") ++upper;
        if (e.sides == "lower" || e.sides == "both") ++lower;
    }
    std::printf("%zu ids: %zu upper, %zu lower (eq11 and eq12 contribute both sides)\n",
                table.size(), upper, lower);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical radius bounds toolkit"};
    app.require_subcommand(1);

    std::string path, name, out_path, demo;
    std::vector<double> rs, alphas;
    std::vector<std::string> ensembles;
    double tol = 0.0;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::size_t count = 360;
    bool as_json = false;

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the bound catalog on one matrix");
    bounds->add_option("file", path, "matrix JSON file");
    bounds->add_option("--matrix", name, "built-in matrix: j2, j3, rem1a, rem1b1, rem1b2");
    bounds->add_option("--r", rs, "power parameter r >= 1 (repeatable)");
    bounds->add_option("--alpha", alphas, "interpolation alpha in [0,1] (repeatable)");
    bounds->add_option("--tol", tol, "numerical radius tolerance")->default_val(1e-9);
    bounds->add_flag("--json", as_json, "emit JSON instead of a table");

    CLI::App* verify = app.add_subcommand("verify", "run the seeded verification suite");
    verify->add_option("--seed", seed, "master seed (default 42)");
    verify->add_option("--ensemble", ensembles, "kind:dim:count (repeatable)");
    verify->add_option("--r", rs, "power grid (repeatable)");
    verify->add_option("--alpha", alphas, "alpha grid (repeatable)");
    verify->add_option("--tol", tol, "radius tolerance inside bounds");
    verify->add_option("--threads", threads, "worker threads (default 1)");
    verify->add_option("--out", out_path, "report directory")->default_val(".");
    verify->add_option("--demo", demo, "named walkthrough: noncomparability, counterexample");

    CLI::App* range = app.add_subcommand("range", "trace the numerical range boundary");
    range->add_option("file", path, "matrix JSON file");
    range->add_option("--matrix", name, "built-in matrix name");
    range->add_option("--count", count, "boundary sample count (>= 8)")->default_val(360);
    range->add_option("--out", out_path, "output CSV path")->default_val("boundary.csv");
    range->add_option("--tol", tol, "disk verdict tolerance")->default_val(1e-6);

    CLI::App* catalog = app.add_subcommand("catalog", "list every bound id");
    catalog->add_flag("--json", as_json, "emit JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(path, name, rs, alphas, tol, as_json);
        if (verify->parsed())
            return cmd_verify(seed, ensembles, rs, alphas, tol, threads, out_path, demo);
        if (range->parsed())
            return cmd_range(path, name, count, out_path.empty() ? "boundary.csv" : out_path,
                             tol);
        if (catalog->parsed()) return cmd_catalog(as_json);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
