#pragma once

#include <vector>

namespace pinvnet {

using Vector = std::vector<double>;

// Sum of elementwise products. Throws LengthMismatchError.
double dot(const Vector& a, const Vector& b);

// a - s*b elementwise. Throws LengthMismatchError.
Vector scale_sub(const Vector& a, const Vector& b, double s);

// Moore-Penrose pseudoinverse of a 1-by-m row vector: A+ = A^T / (A A^T).
// Returned as the m entries of the column A+. Throws ZeroRowError when all
// elements are zero (A A^T = 0 has no pseudoinverse of this form).
Vector row_pseudoinverse(const Vector& row);

}  // namespace pinvnet
