#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nradius/bounds.hpp"
#include "nradius/numerical_range.hpp"
#include "nradius/rng.hpp"

using namespace nradius;

namespace {

const Complex I(0.0, 1.0);

CMatrix random_ginibre(std::size_t dim, std::uint64_t index) {
    RandomStream rs = RandomStream::derive(777, "bounds", index);
    CMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rs.complex_gaussian();
    return g;
}

std::map<std::string, double> by_id_side(const std::vector<BoundValue>& vals) {
    std::map<std::string, double> out;
    for (const BoundValue& bv : vals) out[bv.id + ":" + side_name(bv.side)] = bv.value;
    return out;
}

}  // namespace

TEST_CASE("classical family on the 2x2 shift block hits every equality") {
    // w = 1/2, ||A|| = 1, A^2 = 0, |A| and |A*| disjoint diagonals.
    auto vals = by_id_side(classical_bounds(shift_matrix(2)));
    REQUIRE(vals.size() == 7);
    CHECK(vals["eq11:lower"] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals["eq11:upper"] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vals["eq12:lower"] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(vals["eq12:upper"] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals["eq13:upper"] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals["eq14:upper"] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(vals["eq15:upper"] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("classical family on the 3x3 shift block") {
    // w = sqrt(2)/2, ||A*A + AA*|| = 2, ||A^2|| = 1, w(A^2) = 1/2,
    // |A||A*| = diag(0,1,0).
    auto vals = by_id_side(classical_bounds(shift_matrix(3)));
    CHECK(vals["eq11:lower"] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vals["eq11:upper"] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vals["eq12:lower"] == doctest::Approx(0.5).epsilon(1e-12));  // equals w^2
    CHECK(vals["eq12:upper"] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vals["eq13:upper"] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(vals["eq14:upper"] == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(vals["eq15:upper"] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("interpolated upper bound on the 3x3 shift block") {
    SingleBoundEvaluator ev(shift_matrix(3));
    CHECK(ev.radius() == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-8));
    CHECK(ev.radius_of_square() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(ev.radius_of_absprod() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev.re_absprod_norm() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(ev.min_upper(1.0).value == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(ev.interpolated_upper(1.0, 0.5).value == doctest::Approx(0.875).epsilon(1e-10));
    CHECK(ev.interpolated_upper(1.0, 0.0).value == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(ev.interpolated_upper(1.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev.lower_single_value().value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("interpolated bound is affine in alpha") {
    SingleBoundEvaluator ev(random_ginibre(4, 0));
    for (double r : {1.0, 1.5, 2.0, 3.0}) {
        const double v0 = ev.interpolated_upper(r, 0.0).value;
        const double v1 = ev.interpolated_upper(r, 1.0).value;
        const double vh = ev.interpolated_upper(r, 0.5).value;
        CHECK(vh == doctest::Approx(0.5 * (v0 + v1)).epsilon(1e-12));
        CHECK(ev.min_upper(r).value == doctest::Approx(std::min(v0, v1)).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
    SingleBoundEvaluator ev(shift_matrix(2));
    CHECK_THROWS_AS(ev.interpolated_upper(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ev.interpolated_upper(1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ev.interpolated_upper(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(ev.min_upper(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SingleBoundEvaluator(shift_matrix(2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SingleBoundEvaluator(shift_matrix(2), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PairBoundEvaluator(shift_matrix(2), shift_matrix(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(sum_upper({}, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sum_upper({shift_matrix(2), shift_matrix(3)}, 0.5, 1.0),
                    std::invalid_argument);
}

TEST_CASE("scalar off-diagonal block: the upper bound is tight at every alpha") {
    // [[0,3],[2+3i,0]] has w = (3 + sqrt 13)/2; the bound collapses to
    // 22/4 + 3 sqrt(13)/2 = w^2 independent of alpha.
    const CMatrix a{{3.0}};
    const CMatrix b{{Complex(2.0, 3.0)}};
    PairBoundEvaluator pair(a, b);

    const double w = pair.block_radius();
    const double expected_w = 0.5 * (3.0 + std::sqrt(13.0));
    CHECK(w == doctest::Approx(expected_w).epsilon(1e-9));

    for (double alpha : {0.0, 0.3, 1.0}) {
        const BoundValue bv = pair.offdiag(alpha, 1.0);
        CHECK(bv.value == doctest::Approx(expected_w * expected_w).epsilon(1e-9));
        CHECK(bv.target_exponent == 2.0);
    }
}

TEST_CASE("pair lower bounds on the scalar fixture") {
    // A=[3], B=[2+3i]: osc = (sqrt 34 - sqrt 10)/4 shared by all four bounds.
    const CMatrix a{{3.0}};
    const CMatrix b{{Complex(2.0, 3.0)}};
    const double osc = 0.25 * (std::sqrt(34.0) - std::sqrt(10.0));

    const auto [low1, low2] = lower_offdiag(a, b);
    CHECK(low1.value ==
          doctest::Approx(0.5 * 3.0 * std::numbers::sqrt2 + osc).epsilon(1e-12));
    CHECK(low2.value == doctest::Approx(0.5 * 2.0 + osc).epsilon(1e-12));

    CHECK(lower_max(a, b).value ==
          doctest::Approx(0.5 * std::sqrt(13.0) + osc).epsilon(1e-12));

    const double comb = 0.25 * std::sqrt(34.0) +
                        0.25 * (3.0 * std::numbers::sqrt2 - 2.0) + osc;
    CHECK(lower_combined(a, b).value == doctest::Approx(comb).epsilon(1e-12));

    // All four sit below the block radius.
    PairBoundEvaluator pair(a, b);
    const double w = pair.block_radius();
    CHECK(low1.value <= w + 1e-9);
    CHECK(low2.value <= w + 1e-9);
    CHECK(lower_max(a, b).value <= w + 1e-9);
    CHECK(lower_combined(a, b).value <= w + 1e-9);
}

TEST_CASE("sharpness fixture: all pair lower bounds meet the radius at one") {
    const CMatrix one{{1.0}};
    PairBoundEvaluator pair(one, one);
    CHECK(pair.block_radius() == doctest::Approx(1.0).epsilon(1e-9));
    const auto [low1, low2] = pair.lower_pair();
    CHECK(low1.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(low2.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair.lower_max_value().value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair.lower_combined_value().value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sum bound fixtures") {
    const CMatrix id = CMatrix::identity(2);
    for (double alpha : {0.0, 0.5, 1.0}) {
        const BoundValue bv = sum_upper({id, id}, alpha, 1.0);
        CHECK(bv.value == doctest::Approx(4.0).epsilon(1e-12));  // = w^2(2 I)
        CHECK(*bv.operands == 2);
    }

    // shift + its adjoint sums to the symmetric permutation, w = 1; with
    // alpha = 1 the bound is exactly 1.
    const CMatrix j2 = shift_matrix(2);
    CHECK(sum_upper({j2, adjoint(j2)}, 1.0, 1.0).value ==
          doctest::Approx(1.0).epsilon(1e-12));

    // Single operand reduces to the interpolated single-matrix bound.
    const CMatrix g = random_ginibre(3, 5);
    for (double r : {1.0, 2.0}) {
        const double via_sum = sum_upper({g}, 0.25, r).value;
        const double via_single = cor_interpolated_upper(g, r, 0.25).value;
        CHECK(via_sum == doctest::Approx(via_single).epsilon(1e-12));
    }

    // Two-operand convenience path matches the free function.
    const CMatrix h = random_ginibre(3, 6);
    PairBoundEvaluator pair(g, h);
    for (double r : {1.0, 1.5}) {
        CHECK(pair.sum_pair(0.5, r).value ==
              doctest::Approx(sum_upper({g, h}, 0.5, r).value).epsilon(1e-11));
    }
}

TEST_CASE("pair bound with equal operands matches the single-matrix bound") {
    // w([[0,A],[A,0]]) = w(A) and the block upper bound degenerates to the
    // single interpolated form.
    const CMatrix g = random_ginibre(3, 9);
    PairBoundEvaluator pair(g, g);
    SingleBoundEvaluator single(g);
    CHECK(pair.block_radius() == doctest::Approx(single.radius()).epsilon(1e-8));
    for (double r : {1.0, 2.0})
        for (double alpha : {0.0, 0.5, 1.0})
            CHECK(pair.offdiag(alpha, r).value ==
                  doctest::Approx(single.interpolated_upper(r, alpha).value)
                      .epsilon(1e-10));
}

TEST_CASE("upper bounds dominate the radius on random samples") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        const std::size_t dim = 2 + k % 5;
        SingleBoundEvaluator ev(random_ginibre(dim, 100 + k));
        const double w = ev.radius();
        for (const BoundValue& bv : ev.classical()) {
            const double target = bv.target_exponent == 1.0 ? w : w * w;
            if (bv.side == BoundSide::upper)
                CHECK(target <= bv.value + 1e-9 + 1e-7 * bv.value);
            else
                CHECK(target >= bv.value - 1e-9 - 1e-7 * bv.value);
        }
        for (double r : {1.0, 1.5, 2.0}) {
            const double target = std::pow(w, 2.0 * r);
            CHECK(target <= ev.min_upper(r).value * (1.0 + 1e-7) + 1e-9);
        }
        CHECK(ev.lower_single_value().value <= w + 1e-9 + 1e-7 * w);
    }
}

TEST_CASE("normal matrices meet the operator norm upper bound") {
    const CMatrix d = CMatrix::diagonal({Complex(2.0, 2.0), 1.0});
    auto vals = by_id_side(classical_bounds(d));
    const double w = numerical_radius(d, 1e-10);
    CHECK(w == doctest::Approx(vals["eq11:upper"]).epsilon(1e-9));
    CHECK(w * w == doctest::Approx(vals["eq12:upper"]).epsilon(1e-9));
}

TEST_CASE("catalog table shape") {
    const std::vector<CatalogEntry>& table = bound_catalog();
    REQUIRE(table.size() == 13);

    std::map<std::string, const CatalogEntry*> by_id;
    for (const CatalogEntry& e : table) {
        CHECK(by_id.emplace(e.id, &e).second);  // ids unique
        CHECK_FALSE(e.formula.empty());
        CHECK_FALSE(e.reference.empty());
    }
    std::size_t upper = 0, lower = 0;
    for (const CatalogEntry& e : table) {
        if (e.sides == "upper" || e.sides == "both") ++upper;
        if (e.sides == "lower" || e.sides == "both") ++lower;
    }
    CHECK(upper == 8);
    CHECK(lower == 7);
    CHECK(by_id.at("eq11")->sides == "both");
    CHECK(by_id.at("thm25")->target == "w^2r");
    CHECK(by_id.at("lowcomb")->sides == "lower");
}

TEST_CASE("value metadata and parameter strings") {
    SingleBoundEvaluator ev(shift_matrix(2));
    BoundValue bv = ev.interpolated_upper(1.0, 0.5);
    CHECK(bv.id == "cor26");
    CHECK(params_string(bv) == "alpha=0.5;r=1");
    CHECK(target_name(bv) == "w^2");

    BoundValue mv = ev.min_upper(2.0);
    CHECK(params_string(mv) == "r=2");
    CHECK(target_name(mv) == "w^4");

    BoundValue sv = sum_upper({shift_matrix(2), shift_matrix(2)}, 0.25, 1.5);
    CHECK(params_string(sv) == "alpha=0.25;r=1.5;n=2");

    BoundValue cv = classical_bounds(shift_matrix(2)).front();
    CHECK(params_string(cv).empty());
    CHECK(target_name(cv) == "w");
    CHECK(side_name(BoundSide::lower) == "lower");
    CHECK(side_name(BoundSide::upper) == "upper");
}
