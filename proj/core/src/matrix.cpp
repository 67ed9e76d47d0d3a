#include "nradius/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nradius {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
    if (dim > kMaxDim)
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                    " exceeds limit " + std::to_string(kMaxDim));
}

void check_same_dim(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimensions differ: " +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {
    check_dim(dim);
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    check_dim(dim);
    if (data_.size() != dim * dim)
        throw std::invalid_argument("entry count does not match dimension");
    if (!all_finite()) throw std::invalid_argument("matrix entries must be finite");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    dim_ = rows.size();
    check_dim(dim_);
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("matrix rows must be square");
        for (Complex z : row) data_.push_back(z);
    }
    if (!all_finite()) throw std::invalid_argument("matrix entries must be finite");
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& entries) {
    CMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool CMatrix::all_finite() const {
    for (Complex z : data_)
        if (!finite(z)) return false;
    return true;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CMatrix operator*(Complex scale, const CMatrix& a) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = scale * a(i, j);
    return out;
}

CMatrix operator*(double scale, const CMatrix& a) { return Complex(scale, 0.0) * a; }

CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

CMatrix real_part(const CMatrix& a) {
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

CMatrix imag_part(const CMatrix& a) {
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(a(i, i).imag(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            // ((A - A*) / (2i))(i,j) = (a_ij - conj(a_ji)) / (2i)
            const Complex d = 0.5 * (a(i, j) - std::conj(a(j, i)));
            const Complex v(d.imag(), -d.real());
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

CMatrix hermitize(const CMatrix& m) {
    const std::size_t n = m.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

CMatrix block_offdiag(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    CMatrix out(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, n + j) = a(i, j);
            out(n + i, j) = b(i, j);
        }
    return out;
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    CMatrix out(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(n + i, n + j) = b(i, j);
        }
    return out;
}

CMatrix block_symmetric(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    CMatrix out(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(n + i, n + j) = a(i, j);
            out(i, n + j) = b(i, j);
            out(n + i, j) = b(i, j);
        }
    return out;
}

double frobenius_norm(const CMatrix& a) {
    double sum = 0.0;
    for (Complex z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs_entry(const CMatrix& a) {
    double best = 0.0;
    for (Complex z : a.entries()) best = std::max(best, std::abs(z));
    return best;
}

bool is_hermitian(const CMatrix& a, double tol) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (std::abs(a.entries()[i] - b.entries()[i]) > tol) return false;
    return true;
}

CMatrix shift_matrix(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) m(i, i + 1) = 1.0;
    return m;
}

Complex inner(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector sizes differ");
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * std::conj(y[i]);
    return sum;
}

double vec_norm(const CVector& x) {
    double sum = 0.0;
    for (Complex z : x) sum += std::norm(z);
    return std::sqrt(sum);
}

CVector normalized(const CVector& x) {
    const double n = vec_norm(x);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    CVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / n;
    return out;
}

CVector matvec(const CMatrix& a, const CVector& x) {
    if (x.size() != a.dim()) throw std::invalid_argument("vector size does not match matrix");
    CVector out(a.dim(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Complex sum(0.0, 0.0);
        for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * x[j];
        out[i] = sum;
    }
    return out;
}

Complex quadratic_form(const CMatrix& a, const CVector& x) {
    return inner(matvec(a, x), x);
}

}  // namespace nradius
