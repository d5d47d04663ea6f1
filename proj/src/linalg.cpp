#include "pinvnet/linalg.hpp"

#include "pinvnet/errors.hpp"

namespace pinvnet {

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw LengthMismatchError("dot: vectors differ in length");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

Vector scale_sub(const Vector& a, const Vector& b, double s) {
    if (a.size() != b.size())
        throw LengthMismatchError("scale_sub: vectors differ in length");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - s * b[i];
    return out;
}

Vector row_pseudoinverse(const Vector& row) {
    const double norm2 = dot(row, row);
    if (norm2 == 0.0)
        throw ZeroRowError("row_pseudoinverse: all-zero row");
    Vector out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        out[i] = row[i] / norm2;
    return out;
}

}  // namespace pinvnet
