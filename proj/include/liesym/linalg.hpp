#pragma once

#include <gmpxx.h>

#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

using QMatrix = std::vector<std::vector<Rational>>;

int matrix_rank(QMatrix a);

/// Basis of {v : a v = 0} for an ncols-wide matrix, one vector per free
/// column of the reduced echelon form, in column order.  Every vector is
/// integral, primitive (content 1) and has positive first nonzero entry,
/// so the output is canonical and safe to compare exactly across runs.
std::vector<std::vector<mpz_class>> nullspace_primitive(QMatrix a, int ncols);

QMatrix mat_identity(int n);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
/// Gauss-Jordan inverse; throws NonInvertibleError on singular input.
QMatrix mat_inverse(QMatrix a);

}  // namespace liesym
