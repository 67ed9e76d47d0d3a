#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace nradius {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr std::size_t kMaxDim = 64;

// Dense square complex matrix, row-major storage.
class CMatrix {
public:
    CMatrix() = default;

    // Zero matrix of the given dimension. Throws std::invalid_argument for
    // dim == 0 or dim > kMaxDim.
    explicit CMatrix(std::size_t dim);

    // Takes ownership of row-major entries; entries.size() must equal dim*dim
    // and every entry must be finite.
    CMatrix(std::size_t dim, std::vector<Complex> entries);

    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return data_; }

    bool all_finite() const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, const CMatrix& a);
CMatrix operator*(double scale, const CMatrix& a);

// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

// Hermitian part (A + A*)/2, computed entrywise so the result is exactly
// Hermitian in floating point.
CMatrix real_part(const CMatrix& a);

// Skew part divided by i, (A - A*)/(2i), exactly Hermitian as above.
CMatrix imag_part(const CMatrix& a);

// Forces exact Hermitian symmetry: averages m(i,j) with conj(m(j,i)) and
// drops imaginary parts on the diagonal.
CMatrix hermitize(const CMatrix& m);

// [[0, A], [B, 0]]; A and B must share a dimension.
CMatrix block_offdiag(const CMatrix& a, const CMatrix& b);

// [[A, 0], [0, B]].
CMatrix block_diag(const CMatrix& a, const CMatrix& b);

// [[A, B], [B, A]].
CMatrix block_symmetric(const CMatrix& a, const CMatrix& b);

double frobenius_norm(const CMatrix& a);
double max_abs_entry(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tol);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

// Nilpotent Jordan block: ones on the superdiagonal, zero elsewhere.
CMatrix shift_matrix(std::size_t dim);

// Vector helpers. inner() is linear in the first argument.
Complex inner(const CVector& x, const CVector& y);
double vec_norm(const CVector& x);
CVector normalized(const CVector& x);
CVector matvec(const CMatrix& a, const CVector& x);

// <Ax, x>; x need not be normalized.
Complex quadratic_form(const CMatrix& a, const CVector& x);

}  // namespace nradius
