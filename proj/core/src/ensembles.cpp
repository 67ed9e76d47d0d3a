#include "nradius/ensembles.hpp"

#include <stdexcept>

namespace nradius {

namespace {

constexpr std::size_t kMaxEnsembleDim = 16;

void check_spec(const EnsembleSpec& spec) {
    if (spec.dim == 0 || spec.dim > kMaxEnsembleDim)
        throw std::invalid_argument("ensemble dim must lie in 1..16");
    if (spec.count == 0) throw std::invalid_argument("ensemble count must be positive");
}

CMatrix ginibre(std::size_t dim, RandomStream& rs) {
    CMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rs.complex_gaussian();
    return g;
}

CMatrix strict_upper_gaussian(std::size_t dim, RandomStream& rs) {
    CMatrix n(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) n(i, j) = rs.complex_gaussian();
    return n;
}

std::string stream_label(const EnsembleSpec& spec) {
    return kind_name(spec.kind) + ":" + std::to_string(spec.dim);
}

}  // namespace

std::string kind_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::ginibre: return "ginibre";
        case EnsembleKind::hermitian: return "hermitian";
        case EnsembleKind::normal: return "normal";
        case EnsembleKind::unitary: return "unitary";
        case EnsembleKind::nilpotent: return "nilpotent";
        case EnsembleKind::offdiag_pair: return "offdiag_pair";
    }
    throw std::invalid_argument("unknown ensemble kind");
}

EnsembleKind kind_from_name(const std::string& name) {
    if (name == "ginibre") return EnsembleKind::ginibre;
    if (name == "hermitian") return EnsembleKind::hermitian;
    if (name == "normal") return EnsembleKind::normal;
    if (name == "unitary") return EnsembleKind::unitary;
    if (name == "nilpotent") return EnsembleKind::nilpotent;
    if (name == "offdiag_pair") return EnsembleKind::offdiag_pair;
    throw std::invalid_argument("unknown ensemble kind: " + name);
}

bool is_pair_kind(EnsembleKind kind) { return kind == EnsembleKind::offdiag_pair; }

CMatrix random_unitary(std::size_t dim, RandomStream& rs) {
    CMatrix g = ginibre(dim, rs);
    CMatrix q(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        CVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = g(i, j);
        // Two Gram-Schmidt passes keep orthogonality near machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj(0.0, 0.0);
                for (std::size_t i = 0; i < dim; ++i) proj += v[i] * std::conj(q(i, k));
                for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q(i, k);
            }
        }
        const double norm = vec_norm(v);
        if (norm < 1e-300) {
            // Degenerate draw (essentially impossible); fall back to a basis
            // column to keep the factor well defined.
            for (std::size_t i = 0; i < dim; ++i) q(i, j) = i == j ? 1.0 : 0.0;
            continue;
        }
        for (std::size_t i = 0; i < dim; ++i) q(i, j) = v[i] / norm;
    }
    return q;
}

CMatrix sample_matrix_at(const EnsembleSpec& spec, std::size_t index) {
    check_spec(spec);
    if (is_pair_kind(spec.kind))
        throw std::invalid_argument("pair ensembles require sample_pair_at");
    RandomStream rs = RandomStream::derive(spec.seed, stream_label(spec), index);
    switch (spec.kind) {
        case EnsembleKind::ginibre:
            return ginibre(spec.dim, rs);
        case EnsembleKind::hermitian:
            return real_part(ginibre(spec.dim, rs));
        case EnsembleKind::normal: {
            std::vector<Complex> eigs(spec.dim);
            for (auto& z : eigs) z = rs.complex_gaussian();
            const CMatrix u = random_unitary(spec.dim, rs);
            return u * CMatrix::diagonal(eigs) * adjoint(u);
        }
        case EnsembleKind::unitary:
            return random_unitary(spec.dim, rs);
        case EnsembleKind::nilpotent: {
            const CMatrix n = strict_upper_gaussian(spec.dim, rs);
            // Dim 2 stays in triangular form: its square is exactly zero in
            // floating point, preserving the A^2 = 0 equality family. Higher
            // dims get a random similarity so powers below dim stay nonzero.
            if (spec.dim <= 2) return n;
            const CMatrix u = random_unitary(spec.dim, rs);
            return u * n * adjoint(u);
        }
        default:
            throw std::invalid_argument("unknown ensemble kind");
    }
}

std::pair<CMatrix, CMatrix> sample_pair_at(const EnsembleSpec& spec, std::size_t index) {
    check_spec(spec);
    if (!is_pair_kind(spec.kind))
        throw std::invalid_argument("sample_pair_at requires a pair ensemble");
    RandomStream rs = RandomStream::derive(spec.seed, stream_label(spec), index);
    CMatrix a = ginibre(spec.dim, rs);
    CMatrix b = ginibre(spec.dim, rs);
    return {std::move(a), std::move(b)};
}

std::vector<CMatrix> sample_matrices(const EnsembleSpec& spec) {
    check_spec(spec);
    std::vector<CMatrix> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) out.push_back(sample_matrix_at(spec, i));
    return out;
}

std::vector<std::pair<CMatrix, CMatrix>> sample_pairs(const EnsembleSpec& spec) {
    check_spec(spec);
    std::vector<std::pair<CMatrix, CMatrix>> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) out.push_back(sample_pair_at(spec, i));
    return out;
}

std::vector<CMatrix> sample_flat_product_matrices(std::size_t count, std::uint64_t seed) {
    std::vector<CMatrix> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) {
            out.push_back(shift_matrix(2));
            continue;
        }
        RandomStream rs = RandomStream::derive(seed, "flat_product", i);
        // The raw block and shift layouts keep |A| and |A*| supported on
        // disjoint diagonal blocks, so the factor product is an exact float
        // zero; a similarity transform would smear that to sqrt(eps).
        if (i % 2 == 1) {
            // [[0, X], [0, 0]] with a random full block X.
            const std::size_t half = 1 + (i / 2) % 4;
            const CMatrix x = ginibre(half, rs);
            CMatrix base(2 * half);
            for (std::size_t r = 0; r < half; ++r)
                for (std::size_t c = 0; c < half; ++c) base(r, half + c) = x(r, c);
            out.push_back(base);
        } else {
            // Weighted shift with weights only at even superdiagonal slots,
            // so |A| and |A*| have disjoint diagonal supports.
            const std::size_t dim = 3 + (i / 2) % 8;
            CMatrix base(dim);
            for (std::size_t j = 0; j + 1 < dim; j += 2) base(j, j + 1) = rs.complex_gaussian();
            out.push_back(base);
        }
    }
    return out;
}

CMatrix named_matrix(const std::string& name) {
    if (name == "j2") return shift_matrix(2);
    if (name == "j3") return shift_matrix(3);
    if (name == "rem1a") return CMatrix{{3.0, 0.0}, {0.0, 0.0}};
    if (name == "rem1b1") return CMatrix{{Complex(2.0, 3.0), 0.0}, {0.0, 0.0}};
    if (name == "rem1b2") return CMatrix{{0.0, 0.0}, {0.0, Complex(2.0, 3.0)}};
    throw std::invalid_argument("unknown named matrix: " + name);
}

const std::vector<std::string>& named_matrix_names() {
    static const std::vector<std::string> names = {"j2", "j3", "rem1a", "rem1b1", "rem1b2"};
    return names;
}

}  // namespace nradius
