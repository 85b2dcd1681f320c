#pragma once

#include <cstddef>
#include <vector>

#include "imagebin/matrix.hpp"

namespace imagebin {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field f);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
/// Row vector times matrix.
Vector times(const Vector& v, const Matrix& m);
/// Matrix times column vector.
Vector times(const Matrix& m, const Vector& v);

/// Incrementally built basis of a subspace of F^dim, kept in reduced row
/// echelon form. Basis vectors keep their insertion order; each owns one
/// pivot column where it is 1 and every other basis vector is 0, so
/// coordinates are read off the pivots.
class LinearBasis {
public:
    LinearBasis(std::size_t dim, Field field) : dim_(dim), field_(field) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    Field field() const { return field_; }

    /// Remainder of v after subtracting its projection onto the basis.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
    /// Adds v if it is independent of the basis; returns whether it was added.
    bool insert(const Vector& v);
    /// Coefficients c with v = sum c_i * basis_i. Throws InvariantError if v is outside the span.
    Vector coordinates(const Vector& v) const;

    const std::vector<Vector>& vectors() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t dim_;
    Field field_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace imagebin
