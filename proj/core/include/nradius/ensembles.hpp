#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nradius/matrix.hpp"
#include "nradius/rng.hpp"

namespace nradius {

enum class EnsembleKind { ginibre, hermitian, normal, unitary, nilpotent, offdiag_pair };

std::string kind_name(EnsembleKind kind);
EnsembleKind kind_from_name(const std::string& name);
bool is_pair_kind(EnsembleKind kind);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::ginibre;
    std::size_t dim = 2;  // 1..16
    std::size_t count = 1;
    std::uint64_t seed = 0;
};

// Sampling is a pure function of (kind, dim, seed, index); identical specs
// reproduce identical matrices bit for bit, independent of evaluation order.
CMatrix sample_matrix_at(const EnsembleSpec& spec, std::size_t index);
std::pair<CMatrix, CMatrix> sample_pair_at(const EnsembleSpec& spec, std::size_t index);

std::vector<CMatrix> sample_matrices(const EnsembleSpec& spec);
std::vector<std::pair<CMatrix, CMatrix>> sample_pairs(const EnsembleSpec& spec);

// Haar-distributed unitary: Gram-Schmidt of a ginibre sample (the positive
// diagonal of R makes the factor Haar).
CMatrix random_unitary(std::size_t dim, RandomStream& rs);

// Matrices with Re(|A| |A*|) = 0 by construction: [[0,X],[0,0]] blocks and
// alternating weighted shifts, kept in their raw layout so the product stays
// an exact float zero. Index 0 is the 2x2 nilpotent Jordan block.
std::vector<CMatrix> sample_flat_product_matrices(std::size_t count, std::uint64_t seed);

// Built-in fixtures: j2, j3, rem1a, rem1b1, rem1b2.
CMatrix named_matrix(const std::string& name);
const std::vector<std::string>& named_matrix_names();

}  // namespace nradius
