#ifndef BINFORM_LINALG_HPP
#define BINFORM_LINALG_HPP

#include <optional>
#include <vector>

#include "binform/mpoly.hpp"
#include "binform/rational.hpp"

namespace binform {

using PolyMatrix = std::vector<std::vector<MPoly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Exact determinant via Bareiss fraction-free elimination. Entries may be
// polynomials; all intermediate divisions are exact. Throws domain_error on
// a non-square matrix. The empty 0x0 matrix has determinant 1.
MPoly det_fraction_free(const PolyMatrix& m);
Rat det_fraction_free(const RatMatrix& m);

// Exact dimension of the right kernel. Empty matrices are allowed: a matrix
// with zero rows has nullspace dimension = column count.
int nullspace_dim(const RatMatrix& m, std::size_t cols);
int rank(const RatMatrix& m, std::size_t cols);

// Exact solve of A x = b (A is rows x cols, b has one entry per row).
// Returns one solution, or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b,
                                             std::size_t cols);

} // namespace binform

#endif
