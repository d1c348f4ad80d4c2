#pragma once

// Nilpotent orbits in gl_n: Jordan types from rank sequences, the closure
// order, the rank criterion for closure membership, and seeded sampling.

#include "agslice/dense.hpp"
#include "agslice/partition.hpp"

#include <cstdint>

namespace agslice {

/// X^n == 0 for an n x n matrix.
bool is_nilpotent(const QMatrix& x);

/// Jordan block sizes, from u^T_p = rank X^{p-1} - rank X^p. Throws
/// std::invalid_argument when X is not square or not nilpotent.
Partition jordan_type(const QMatrix& x);

/// O_a lies in the closure of O_b. Throws std::invalid_argument on size mismatch.
bool closure_leq(const Partition& a, const Partition& b);

/// X nilpotent and rank X^p <= sum_i max(u_i - p, 0) for all p >= 1.
bool rank_membership(const QMatrix& x, const Partition& u);

/// Nilpotent Jordan matrix with blocks u_1, u_2, ... along the diagonal
/// (ones on the superdiagonal inside each block).
QMatrix jordan_matrix(const Partition& u);

/// g J_u g^{-1} where g is a product of 3n random elementary integer matrices
/// (det 1). The same (u, seed) pair always gives the same matrix.
QMatrix sample_nilpotent(const Partition& u, std::uint64_t seed);

}  // namespace agslice
