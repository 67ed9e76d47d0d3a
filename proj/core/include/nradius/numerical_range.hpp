#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nradius/matrix.hpp"

namespace nradius {

// Support-direction slice (e^{i theta} A + e^{-i theta} A*) / 2, exactly
// Hermitian. Its largest eigenvalue is the support function of the numerical
// range in direction theta.
CMatrix rotated_real(const CMatrix& a, double theta);

// Numerical radius w(A) = max over theta of lambda_max(rotated_real(A,
// theta)). Samples a 512-point grid, merges adjacent grid local maxima into
// plateau runs, and refines each run by golden-section search until its
// bracket is narrower than tol. The result is the best value over every
// evaluation, so it never falls below any sampled support value.
// tol must lie in (0, 1e-2].
double numerical_radius(const CMatrix& a, double tol = 1e-8);

// Independent cross-check: support function on a dense uniform grid plus
// |<Ax,x>| over seeded random unit vectors. Always a lower bound on w(A).
double nr_oracle(const CMatrix& a, std::size_t grid, std::size_t vec_samples,
                 std::uint64_t seed);

struct BoundarySample {
    double theta = 0.0;
    Complex point;  // <Ax, x> for the achieving unit vector x
    CVector vec;    // top eigenvector of rotated_real(A, theta)
};

struct RangeBoundary {
    std::vector<BoundarySample> samples;
};

// Supporting points of the numerical range at `count` equally spaced support
// angles; count >= 8. Re(e^{i theta} point) is maximal over the range in each
// direction. When the top eigenvalue is degenerate the first phase-normalized
// eigenvector is recorded.
RangeBoundary range_boundary(const CMatrix& a, std::size_t count);

struct DiskCheckResult {
    bool is_circle = false;
    double max_deviation = 0.0;  // max over samples of | |point| - radius |
};

// Tests whether every boundary point sits on the circle |z| = radius.
DiskCheckResult disk_check(const RangeBoundary& boundary, double radius, double tol);

// Rows "theta,re,im" with 17 significant digits, one line per sample.
void write_boundary_csv(const RangeBoundary& boundary, const std::string& path);

}  // namespace nradius
