#pragma once

#include <optional>
#include <vector>

#include "limitcones/rational.hpp"

namespace limitcones {

using QMatrix = std::vector<QVec>;

QMatrix q_identity(size_t n);

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<size_t> rref(QMatrix& m);

size_t rank_of(QMatrix m);
size_t rank_of_ivecs(const std::vector<IVec>& rows);

// Canonical basis of {x : rows * x = 0}, as primitive integer vectors
// (one per free column of the RREF, unit in that column).
std::vector<IVec> nullspace(const std::vector<IVec>& rows, size_t ncols);

// Solves A x = b; nullopt when inconsistent. A need not be square.
std::optional<QVec> solve_linear(QMatrix a, QVec b);

std::optional<QMatrix> inverse(QMatrix a);

QVec matvec(const QMatrix& a, const QVec& x);

}  // namespace limitcones
