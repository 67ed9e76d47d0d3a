#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "nradius/harness.hpp"
#include "nradius/rng.hpp"

using namespace nradius;

namespace {

const Complex I(0.0, 1.0);

CMatrix random_ginibre(std::size_t dim, std::uint64_t index) {
    RandomStream rs = RandomStream::derive(31337, "harness", index);
    CMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rs.complex_gaussian();
    return g;
}

std::size_t violated_count(const std::vector<CheckRecord>& records) {
    std::size_t n = 0;
    for (const CheckRecord& r : records) n += r.violated ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("check records encode margins against the hybrid threshold") {
    CHECK(violation_threshold(1.0, 2.0) == doctest::Approx(1e-9 + 2e-7).epsilon(1e-12));

    CheckRecord ok = make_check("id", "", "prov", BoundSide::upper, 1.0, 2.0);
    CHECK(ok.margin == doctest::Approx(1.0));
    CHECK_FALSE(ok.violated);

    CheckRecord low = make_check("id", "", "prov", BoundSide::lower, 1.0, 2.0);
    CHECK(low.margin == doctest::Approx(-1.0));
    CHECK(low.violated);

    // Tiny negative margins are noise, not violations.
    CheckRecord noise = make_check("id", "", "prov", BoundSide::upper, 1.0 + 5e-10, 1.0);
    CHECK(noise.margin < 0.0);
    CHECK_FALSE(noise.violated);

    CheckRecord bad = make_check("id", "", "prov", BoundSide::upper, 1.0 + 1e-5, 1.0);
    CHECK(bad.violated);
}

TEST_CASE("suite record layout for single-matrix kinds") {
    SuiteConfig config;
    config.ensembles = {{EnsembleKind::ginibre, 2, 3, 42}};
    const auto records = run_inequality_suite(config);

    // Per matrix: 7 classical + 1 lowsingle + 4 cor26 min + 20 cor26 sweep +
    // 2 refinement comparisons + 1 re-vs-radius + 2 chain checks = 37.
    CHECK(records.size() == 3 * 37);
    CHECK(violated_count(records) == 0);
    CHECK(records.front().provenance == "ginibre:d2:s42:#0");

    std::size_t cor26 = 0;
    for (const CheckRecord& r : records)
        if (r.bound_id == "cor26") ++cor26;
    CHECK(cor26 == 3 * 24);
}

TEST_CASE("suite record layout for pair kinds") {
    SuiteConfig config;
    config.ensembles = {{EnsembleKind::offdiag_pair, 2, 2, 42}};
    const auto records = run_inequality_suite(config);

    // Per pair: 4 lower bounds + 20 thm25 + 20 thmsum = 44.
    CHECK(records.size() == 2 * 44);
    CHECK(violated_count(records) == 0);
    CHECK(records.front().provenance == "offdiag_pair:d2:s42:#0");
}

TEST_CASE("suite honors custom grids and rejects bad ones") {
    SuiteConfig config;
    config.ensembles = {{EnsembleKind::hermitian, 2, 1, 1}};
    config.rs = {1.0};
    config.alphas = {0.5};
    const auto records = run_inequality_suite(config);
    // 7 classical + 1 lowsingle + 1 cor26 min + 1 cor26 sweep + 3 refinement
    // records + 2 chains.
    CHECK(records.size() == 15);
    CHECK(violated_count(records) == 0);

    config.rs = {0.5};
    CHECK_THROWS_AS(run_inequality_suite(config), std::invalid_argument);
    config.rs = {1.0};
    config.alphas = {1.5};
    CHECK_THROWS_AS(run_inequality_suite(config), std::invalid_argument);
    config.alphas = {0.5};
    config.radius_tol = 0.0;
    CHECK_THROWS_AS(run_inequality_suite(config), std::invalid_argument);
}

TEST_CASE("thread counts do not change the records") {
    SuiteConfig config;
    config.ensembles = {{EnsembleKind::ginibre, 3, 6, 5},
                        {EnsembleKind::offdiag_pair, 2, 4, 5}};
    const auto solo = run_inequality_suite(config);
    config.threads = 4;
    const auto pooled = run_inequality_suite(config);
    REQUIRE(solo.size() == pooled.size());
    for (std::size_t i = 0; i < solo.size(); ++i) {
        CHECK(solo[i].bound_id == pooled[i].bound_id);
        CHECK(solo[i].provenance == pooled[i].provenance);
        CHECK(solo[i].lhs == pooled[i].lhs);
        CHECK(solo[i].rhs == pooled[i].rhs);
        CHECK(solo[i].margin == pooled[i].margin);
    }
}

TEST_CASE("nilpotent dim-2 ensemble attains the equality families") {
    SuiteConfig config;
    config.ensembles = {{EnsembleKind::nilpotent, 2, 10, 42}};
    const auto records = run_inequality_suite(config);
    CHECK(violated_count(records) == 0);
    for (const CheckRecord& r : records) {
        if (r.bound_id == "eq12" || r.bound_id == "eq13" || r.bound_id == "eq14" ||
            r.bound_id == "eq15") {
            if (r.bound_id == "eq12" && r.margin > 1e-6) continue;  // upper side
            CHECK(std::abs(r.margin) <= 1e-8 * std::max(1.0, std::abs(r.rhs)));
        }
    }
}

TEST_CASE("McCarthy spot checks") {
    const CMatrix h = CMatrix::diagonal({1.0, 4.0});
    const CVector x = {Complex(std::numbers::sqrt2 / 2.0), Complex(std::numbers::sqrt2 / 2.0)};
    const CheckRecord rec = check_lemma_mccarthy(h, x, 2.0);
    CHECK(rec.lhs == doctest::Approx(6.25).epsilon(1e-12));
    CHECK(rec.rhs == doctest::Approx(8.5).epsilon(1e-12));
    CHECK_FALSE(rec.violated);

    const CheckRecord eq = check_lemma_mccarthy(h, x, 1.0);
    CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-12));

    const CheckRecord id = check_lemma_mccarthy(CMatrix::identity(3),
                                                CVector{1.0, 0.0, 0.0}, 7.0);
    CHECK(id.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.rhs == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(check_lemma_mccarthy(CMatrix::diagonal({-1.0, 1.0}), x, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_mccarthy(h, CVector{1.0, 1.0}, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_mccarthy(h, x, 0.5), std::invalid_argument);
}

TEST_CASE("Buzano spot checks") {
    const Complex inv_sqrt2(std::numbers::sqrt2 / 2.0);
    const CVector e = {inv_sqrt2, inv_sqrt2};
    const CheckRecord half = check_lemma_buzano({1.0, 0.0}, {0.0, 1.0}, e);
    CHECK(half.lhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.rhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(half.violated);

    const CVector e1 = {1.0, 0.0};
    const CheckRecord self = check_lemma_buzano(e1, e1, e1);
    CHECK(self.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(self.rhs == doctest::Approx(1.0).epsilon(1e-12));

    const CheckRecord ortho = check_lemma_buzano({0.0, 1.0}, e1, e1);
    CHECK(ortho.lhs == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(check_lemma_buzano(e1, e1, CVector{1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("Bohr spot checks") {
    const CheckRecord pair = check_lemma_bohr({1.0, 1.0}, 2.0);
    CHECK(pair.lhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(pair.rhs == doctest::Approx(4.0).epsilon(1e-12));

    const CheckRecord triple = check_lemma_bohr({1.0, 2.0, 3.0}, 2.0);
    CHECK(triple.lhs == doctest::Approx(36.0).epsilon(1e-12));
    CHECK(triple.rhs == doctest::Approx(42.0).epsilon(1e-12));
    CHECK_FALSE(triple.violated);

    const CheckRecord single = check_lemma_bohr({2.5}, 3.0);
    CHECK(single.lhs == doctest::Approx(single.rhs).epsilon(1e-12));

    CHECK_THROWS_AS(check_lemma_bohr({1.0, -0.5}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_bohr({1.0}, 0.5), std::invalid_argument);
}

TEST_CASE("mixed Schwarz spot checks") {
    const CMatrix j2 = shift_matrix(2);
    const CheckRecord tight = check_lemma_mixed_schwarz(j2, {0.0, 1.0}, {1.0, 0.0});
    CHECK(tight.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tight.rhs == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_FALSE(tight.violated);

    const CheckRecord zero = check_lemma_mixed_schwarz(j2, {0.0, 0.0}, {1.0, 0.0});
    CHECK(zero.lhs == doctest::Approx(0.0).epsilon(1e-12));

    // Identity reduces to Cauchy-Schwarz.
    RandomStream rs = RandomStream::derive(8, "schwarz", 0);
    const CheckRecord cs = check_lemma_mixed_schwarz(CMatrix::identity(3),
                                                     rs.gaussian_vector(3),
                                                     rs.gaussian_vector(3));
    CHECK_FALSE(cs.violated);
}

TEST_CASE("lemma suites run clean") {
    const auto records = lemma_suites(500, 42);
    CHECK(records.size() == 4 * 500);
    CHECK(violated_count(records) == 0);
    // Determinism of the whole batch.
    const auto again = lemma_suites(500, 42);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].lhs == again[i].lhs);
        CHECK(records[i].rhs == again[i].rhs);
    }
}

TEST_CASE("radius identities on random pairs") {
    for (std::uint64_t k = 0; k < 10; ++k) {
        const CMatrix a = random_ginibre(3, 2 * k);
        const CMatrix b = random_ginibre(3, 2 * k + 1);
        const auto records = identity_check(a, b, "fixture");
        REQUIRE(records.size() == 3);
        for (const CheckRecord& r : records) {
            CHECK(std::abs(r.lhs - r.rhs) <= 2e-8 * std::max(1.0, std::abs(r.rhs)));
            CHECK_FALSE(r.violated);
        }
    }
}

TEST_CASE("refinement ordering") {
    // The min-form bound never exceeds either classical w^2 bound.
    const auto j3_records = refinement_check(shift_matrix(3), "j3");
    REQUIRE(j3_records.size() == 3);
    CHECK(j3_records[0].lhs == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(j3_records[0].rhs == doctest::Approx(0.75).epsilon(1e-10));  // ties eq14
    CHECK(j3_records[1].rhs == doctest::Approx(1.0).epsilon(1e-10));   // eq15
    for (const CheckRecord& r : j3_records) {
        CHECK(r.margin >= -1e-9);
        CHECK_FALSE(r.violated);
    }

    // Hermitian matrices collapse all three quantities to ||A||^2.
    const CMatrix h = real_part(random_ginibre(3, 50));
    const double norm_sq = op_norm(h) * op_norm(h);
    for (const CheckRecord& r : refinement_check(h, "hermitian")) {
        if (r.bound_id == "refine_re_w") continue;
        CHECK(r.lhs == doctest::Approx(norm_sq).epsilon(1e-9));
        CHECK(r.rhs == doctest::Approx(norm_sq).epsilon(1e-9));
    }

    for (std::uint64_t k = 0; k < 10; ++k)
        for (const CheckRecord& r : refinement_check(random_ginibre(2 + k % 4, 60 + k)))
            CHECK(r.margin >= -1e-9);
}

TEST_CASE("disk theorem check distinguishes the hypothesis cases") {
    const DiskTheoremReport j2 = disk_theorem_check(shift_matrix(2));
    CHECK(j2.hypothesis_holds);
    CHECK(j2.disk_radius == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j2.radius_gap < 1e-7);
    CHECK(j2.boundary.is_circle);

    const DiskTheoremReport j3 = disk_theorem_check(shift_matrix(3));
    CHECK_FALSE(j3.hypothesis_holds);
    CHECK(j3.re_absprod_norm == doctest::Approx(1.0).epsilon(1e-10));
    // The converse fails here: the range is still the full disk.
    CHECK(j3.boundary.is_circle);
    CHECK(j3.radius_gap < 1e-7);

    const DiskTheoremReport seg = disk_theorem_check(CMatrix::diagonal({0.0, 1.0}));
    CHECK_FALSE(seg.hypothesis_holds);
    CHECK_FALSE(seg.boundary.is_circle);
}

TEST_CASE("equality probe semantics") {
    // ([1],[1]): w = 1 sits far above every listed bound, so nothing triggers.
    const CMatrix one{{1.0}};
    const EqualityProbeReport off = equality_probe(one, one, 1e-9);
    CHECK(off.block_radius == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(off.clauses.size() == 3);
    for (const EqualityClause& clause : off.clauses) CHECK_FALSE(clause.triggered);

    // Zero pair: every clause triggers and every condition holds trivially.
    const CMatrix zero(2);
    const EqualityProbeReport on = equality_probe(zero, zero, 1e-9);
    for (const EqualityClause& clause : on.clauses) {
        CHECK(clause.triggered);
        CHECK(clause.conditions_hold);
    }

    // Proved direction on random pairs: a triggered clause must come with
    // satisfied conditions.
    for (std::uint64_t k = 0; k < 20; ++k) {
        const CMatrix a = random_ginibre(2 + k % 3, 300 + 2 * k);
        const CMatrix b = random_ginibre(2 + k % 3, 301 + 2 * k);
        for (const EqualityClause& clause : equality_probe(a, b, 1e-8).clauses)
            if (clause.triggered) CHECK(clause.conditions_hold);
    }

    CHECK_THROWS_AS(equality_probe(one, one, 0.0), std::invalid_argument);
}

TEST_CASE("noncomparability fixture values") {
    const NoncomparabilityReport rep = noncomparability_demo();
    CHECK(rep.mixed_first_1 == doctest::Approx(std::sqrt(18.0)).epsilon(1e-10));
    CHECK(rep.max_first_1 == doctest::Approx(std::sqrt(13.0)).epsilon(1e-10));
    CHECK(rep.mixed_first_2 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(rep.max_first_2 == doctest::Approx(std::sqrt(13.0)).epsilon(1e-10));
    CHECK(rep.low1_pair1 > rep.lowmax_pair1);
    CHECK(rep.low1_pair2 < rep.lowmax_pair2);
    CHECK(rep.orderings_hold);
}

TEST_CASE("strictness probe reports the extremal quadratic forms") {
    const StrictnessProbe probe = strictness_probe(shift_matrix(3));
    CHECK(probe.re_norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(probe.re_extremal == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(probe.im_extremal == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("summaries aggregate by bound id") {
    std::vector<CheckRecord> records;
    records.push_back(make_check("a", "", "p0", BoundSide::upper, 1.0, 2.0));
    records.push_back(make_check("a", "", "p1", BoundSide::upper, 1.0, 4.0));
    records.push_back(make_check("b", "", "p2", BoundSide::lower, 1.0, 3.0));
    const SuiteSummary summary = summarize(records);

    CHECK(summary.trials == 3);
    CHECK(summary.violations == 1);
    CHECK(summary.min_margin == doctest::Approx(-2.0));
    REQUIRE(summary.by_bound.count("a") == 1);
    CHECK(summary.by_bound.at("a").trials == 2);
    CHECK(summary.by_bound.at("a").min_margin == doctest::Approx(1.0));
    CHECK(summary.by_bound.at("a").mean_margin == doctest::Approx(2.0));
    CHECK(summary.by_bound.at("b").violations == 1);
}

TEST_CASE("report files") {
    namespace fs = std::filesystem;
    const fs::path csv = fs::temp_directory_path() / "nradius_records_test.csv";
    const fs::path json_path = fs::temp_directory_path() / "nradius_summary_test.json";

    std::vector<CheckRecord> records;
    records.push_back(make_check("eq11", "", "ginibre:d2:s1:#0", BoundSide::upper,
                                 0.123456789012345678, 1.0));
    records.push_back(make_check("cor26", "alpha=0.5;r=2", "named:j3", BoundSide::upper,
                                 0.5, 0.875));
    write_records_csv(records, csv.string());

    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "bound_id,params,provenance,lhs,rhs,margin,violated");
    REQUIRE(std::getline(in, line));
    CHECK(line == "eq11,,ginibre:d2:s1:#0,0.12345678901234568,1,0.87654321098765431,false");
    REQUIRE(std::getline(in, line));
    CHECK(line.find("cor26,alpha=0.5;r=2,named:j3,0.5,0.875,0.375,false") == 0);
    CHECK_FALSE(std::getline(in, line));
    in.close();

    const SuiteSummary summary = summarize(records);
    write_summary_json(summary, json_path.string());
    std::ifstream jin(json_path);
    std::ostringstream buf;
    buf << jin.rdbuf();
    const nlohmann::json doc = nlohmann::json::parse(buf.str());
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 2);
    CHECK(doc.contains("eq11"));
    CHECK(doc.contains("cor26"));
    CHECK(doc["eq11"]["trials"] == 1);
    CHECK(doc["eq11"]["violations"] == 0);
    CHECK(doc["cor26"]["min_margin"].get<double>() == doctest::Approx(0.375));

    fs::remove(csv);
    fs::remove(json_path);
}
