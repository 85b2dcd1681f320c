#include "imagebin/basis.hpp"

#include "imagebin/errors.hpp"

namespace imagebin {

Vector zero_vector(std::size_t n, Field f) {
    return Vector(n, Scalar::zero(f));
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("dot product dimension mismatch");
    if (a.empty()) throw InputError("dot product of empty vectors");
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector times(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw InputError("vector-matrix dimension mismatch");
    Vector out = zero_vector(m.cols(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!row[j].is_zero()) out[j] += v[i] * row[j];
    }
    return out;
}

Vector times(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw InputError("matrix-vector dimension mismatch");
    Vector out = zero_vector(m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!row[j].is_zero() && !v[j].is_zero()) out[i] += row[j] * v[j];
    }
    return out;
}

Vector LinearBasis::reduce(Vector v) const {
    if (v.size() != dim_) throw InputError("basis dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        const Vector& row = rows_[k];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
}

bool LinearBasis::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    Scalar inv = Scalar::one(field_) / r[p];
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
        Scalar c = row[p];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero()) row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

Vector LinearBasis::coordinates(const Vector& v) const {
    if (!contains(v)) throw InvariantError("vector outside the span of the basis");
    Vector c;
    c.reserve(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c.push_back(v[pivots_[k]]);
    return c;
}

}  // namespace imagebin
