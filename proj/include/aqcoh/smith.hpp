#pragma once

#include "aqcoh/matrix.hpp"

#include <optional>
#include <span>

namespace aqc {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
/// all d_i > 0, followed by zeros.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    /// Present only when requested; U_inverse * U == I.
    std::optional<IntMatrix> U_inverse;
    std::size_t rank = 0;

    IntVector diagonal() const;
};

/// Pivoting rule: smallest nonzero absolute value in the remaining block,
/// ties broken by row index then column index.
SmithDecomposition smith_normal_form(const IntMatrix& A, bool track_left_inverse = false);

/// Some integer x with A x = b, or nullopt when none exists.
std::optional<IntVector> solve(const IntMatrix& A, std::span<const Integer> b);

/// Columns form a basis of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);

/// Determinant by fraction-free elimination (square matrices only).
Integer determinant(const IntMatrix& A);

} // namespace aqc
