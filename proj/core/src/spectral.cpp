#include "nradius/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nradius {

namespace {

double offdiag_mass(const CMatrix& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            if (i != j) sum += std::norm(w(i, j));
    return std::sqrt(sum);
}

void check_hermitian_input(const CMatrix& h) {
    if (h.dim() == 0) throw std::invalid_argument("herm_eig requires a nonempty matrix");
    const double scale = frobenius_norm(h);
    if (!is_hermitian(h, 1e-12 * scale))
        throw std::invalid_argument("herm_eig requires a Hermitian matrix");
}

// One cyclic sweep of two-sided rotations; accumulates the unitary into v
// when v is non-null. w stays exactly Hermitian throughout.
void jacobi_sweep(CMatrix& w, CMatrix* v) {
    const std::size_t n = w.dim();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Complex z = w(p, q);
            const double r = std::abs(z);
            if (r == 0.0) continue;
            const Complex u = z / r;
            const double a = w(p, p).real();
            const double d = w(q, q).real();
            const double tau = (d - a) / (2.0 * r);
            const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const Complex wkp = w(k, p);
                const Complex wkq = w(k, q);
                w(k, p) = c * u * wkp - s * wkq;
                w(k, q) = s * u * wkp + c * wkq;
                w(p, k) = std::conj(w(k, p));
                w(q, k) = std::conj(w(k, q));
            }
            w(p, p) = Complex(a - t * r, 0.0);
            w(q, q) = Complex(d + t * r, 0.0);
            w(p, q) = Complex(0.0, 0.0);
            w(q, p) = Complex(0.0, 0.0);

            if (v) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = (*v)(k, p);
                    const Complex vkq = (*v)(k, q);
                    (*v)(k, p) = vkp * (u * c) - vkq * s;
                    (*v)(k, q) = vkp * (u * s) + vkq * c;
                }
            }
        }
    }
}

void jacobi_diagonalize(CMatrix& w, CMatrix* v) {
    const double threshold = 1e-14 * frobenius_norm(w);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_mass(w) <= threshold) return;
        jacobi_sweep(w, v);
    }
    if (offdiag_mass(w) > threshold)
        throw std::runtime_error("jacobi eigensolver failed to converge");
}

// Largest-magnitude component (first such index) made real positive.
void fix_column_phase(CMatrix& v, std::size_t col) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const double mag = std::abs(v(i, col));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag <= 0.0) return;
    const Complex phase = std::conj(v(best, col)) / best_mag;
    for (std::size_t i = 0; i < v.dim(); ++i) v(i, col) *= phase;
    v(best, col) = Complex(std::abs(v(best, col)), 0.0);
}

}  // namespace

HermEigDecomp herm_eig(const CMatrix& h) {
    check_hermitian_input(h);
    CMatrix w = hermitize(h);
    CMatrix v = CMatrix::identity(h.dim());
    jacobi_diagonalize(w, &v);

    const std::size_t n = h.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return w(i, i).real() < w(j, j).real();
    });

    HermEigDecomp out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
        fix_column_phase(out.eigenvectors, k);
    }
    return out;
}

std::vector<double> herm_eigenvalues(const CMatrix& h) {
    check_hermitian_input(h);
    CMatrix w = hermitize(h);
    jacobi_diagonalize(w, nullptr);
    std::vector<double> vals(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) vals[i] = w(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

double lambda_max(const CMatrix& h) { return herm_eigenvalues(h).back(); }

double herm_norm(const CMatrix& h) {
    const std::vector<double> vals = herm_eigenvalues(h);
    return std::max({vals.back(), -vals.front(), 0.0});
}

double op_norm(const CMatrix& a) {
    const double top = lambda_max(hermitize(adjoint(a) * a));
    return std::sqrt(std::max(0.0, top));
}

CMatrix abs_op(const CMatrix& a) {
    const CMatrix gram = hermitize(adjoint(a) * a);
    HermEigDecomp eig = herm_eig(gram);
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += root * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return hermitize(out);
}

CMatrix herm_power(const CMatrix& h, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("herm_power requires r >= 1");
    HermEigDecomp eig = herm_eig(h);
    const std::size_t n = h.dim();
    double top = 0.0;
    for (double lam : eig.eigenvalues) top = std::max(top, std::abs(lam));
    const double clamp_floor = -1e-12 * top;
    CMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < 0.0) {
            if (lam < clamp_floor)
                throw std::invalid_argument(
                    "herm_power requires a positive semidefinite matrix");
            lam = 0.0;
        }
        const double powered = std::pow(lam, r);
        if (powered == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) +=
                    powered * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return hermitize(out);
}

}  // namespace nradius
