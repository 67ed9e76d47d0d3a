#include "nradius/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "nradius/rng.hpp"
#include "nradius/spectral.hpp"

namespace nradius {

namespace {

constexpr std::size_t kCoarseGrid = 512;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double support_value(const CMatrix& a, double theta) {
    return lambda_max(rotated_real(a, theta));
}

// Golden-section maximization of the support function on [lo, hi]; returns
// the best value evaluated, which also folds in the caller's running best.
double golden_refine(const CMatrix& a, double lo, double hi, double tol, double best) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = support_value(a, x1);
    double f2 = support_value(a, x2);
    best = std::max(best, std::max(f1, f2));
    int guard = 0;
    while (hi - lo > tol && ++guard < 400) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = support_value(a, x2);
            best = std::max(best, f2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = support_value(a, x1);
            best = std::max(best, f1);
        }
    }
    return best;
}

}  // namespace

CMatrix rotated_real(const CMatrix& a, double theta) {
    const Complex phase = std::polar(1.0, theta);
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex((phase * a(i, i)).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

double numerical_radius(const CMatrix& a, double tol) {
    if (!(tol > 0.0) || tol > 1e-2)
        throw std::invalid_argument("numerical_radius tol must lie in (0, 1e-2]");

    std::vector<double> vals(kCoarseGrid);
    for (std::size_t k = 0; k < kCoarseGrid; ++k)
        vals[k] = support_value(a, kTwoPi * static_cast<double>(k) / kCoarseGrid);

    double best = *std::max_element(vals.begin(), vals.end());

    // Grid-local maxima, plateaus included (cyclic comparison).
    std::vector<bool> is_peak(kCoarseGrid);
    bool all_peaks = true;
    for (std::size_t k = 0; k < kCoarseGrid; ++k) {
        const double prev = vals[(k + kCoarseGrid - 1) % kCoarseGrid];
        const double next = vals[(k + 1) % kCoarseGrid];
        is_peak[k] = vals[k] >= prev && vals[k] >= next;
        all_peaks = all_peaks && is_peak[k];
    }

    const double step = kTwoPi / kCoarseGrid;
    if (all_peaks) {
        // The support function is flat to grid resolution (disk-like range);
        // one refinement over the full circle still tightens the value.
        return golden_refine(a, 0.0, kTwoPi, tol, best);
    }

    // Walk once around the circle starting just past a non-peak so every
    // cyclic run of flagged points is seen contiguously.
    std::size_t start = 0;
    while (is_peak[start]) ++start;
    std::size_t k = 0;
    while (k < kCoarseGrid) {
        const std::size_t idx = (start + 1 + k) % kCoarseGrid;
        if (!is_peak[idx]) {
            ++k;
            continue;
        }
        std::size_t len = 1;
        while (len < kCoarseGrid && is_peak[(idx + len) % kCoarseGrid]) ++len;
        // Bracket the run between its non-peak neighbors; angles may exceed
        // 2*pi, which is harmless since the support function is periodic.
        const double lo = step * (static_cast<double>(start + 1 + k) - 1.0);
        const double hi = step * (static_cast<double>(start + 1 + k) + static_cast<double>(len));
        best = golden_refine(a, lo, hi, tol, best);
        k += len;
    }
    return best;
}

double nr_oracle(const CMatrix& a, std::size_t grid, std::size_t vec_samples,
                 std::uint64_t seed) {
    if (grid == 0) throw std::invalid_argument("nr_oracle grid must be positive");
    double best = 0.0;
    for (std::size_t g = 0; g < grid; ++g)
        best = std::max(best, support_value(a, kTwoPi * static_cast<double>(g) / grid));
    RandomStream rs = RandomStream::derive(seed, "nr_oracle", 0);
    for (std::size_t i = 0; i < vec_samples; ++i) {
        const CVector x = rs.unit_vector(a.dim());
        best = std::max(best, std::abs(quadratic_form(a, x)));
    }
    return best;
}

RangeBoundary range_boundary(const CMatrix& a, std::size_t count) {
    if (count < 8) throw std::invalid_argument("range_boundary needs count >= 8");
    RangeBoundary out;
    out.samples.reserve(count);
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < count; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / count;
        const HermEigDecomp eig = herm_eig(rotated_real(a, theta));
        std::size_t top = n - 1;
        while (top > 0 && eig.eigenvalues[top - 1] == eig.eigenvalues[n - 1]) --top;
        CVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = eig.eigenvectors(i, top);
        BoundarySample sample;
        sample.theta = theta;
        sample.vec = std::move(x);
        sample.point = quadratic_form(a, sample.vec);
        out.samples.push_back(std::move(sample));
    }
    return out;
}

DiskCheckResult disk_check(const RangeBoundary& boundary, double radius, double tol) {
    if (!(radius >= 0.0)) throw std::invalid_argument("disk_check radius must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("disk_check tol must be positive");
    DiskCheckResult out;
    for (const auto& sample : boundary.samples)
        out.max_deviation =
            std::max(out.max_deviation, std::abs(std::abs(sample.point) - radius));
    out.is_circle = out.max_deviation <= tol;
    return out;
}

void write_boundary_csv(const RangeBoundary& boundary, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write boundary csv: " + path);
    out << "theta,re,im\n";
    char line[128];
    for (const auto& sample : boundary.samples) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", sample.theta,
                      sample.point.real(), sample.point.imag());
        out << line;
    }
}

}  // namespace nradius
