#include "imagebin/matrix.hpp"

#include <sstream>

#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

namespace imagebin {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::of_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c, Field::Rational);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Scalar::rational(v);
        ++i;
    }
    return m;
}

Matrix Matrix::row_vector(std::span<const Scalar> entries, Field field) {
    Matrix m(1, entries.size(), field);
    for (std::size_t j = 0; j < entries.size(); ++j) m(0, j) = entries[j];
    return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> entries, Field field) {
    Matrix m(entries.size(), 1, field);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::converted(Field target) const {
    Matrix out(rows_, cols_, target);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        const Rational& v = data_[k].value();
        if (target == Field::GF2 && v != 0 && v != 1)
            throw InputError("entry " + rational_to_string(v) + " is not a bit");
        out.data_[k] = Scalar(target, v);
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& s : m.data_) s = -s;
    return m;
}

Matrix& Matrix::scale(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_compact_string();
        os << '\n';
    }
    return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    return kernels::multiply(a, b);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    return kernels::kron(a, b);
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = Scalar::one(m.field()) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        kernels::eliminate(m, r, c, 0);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    return row_reduce(m).size();
}

}  // namespace imagebin
