#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "imagebin/scalar.hpp"

namespace imagebin {

/// Dense row-major matrix over one field. Vectors are 1×n or n×1 matrices.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);
    /// Rational matrix from integer literals, handy for fixtures and tests.
    static Matrix of_ints(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix row_vector(std::span<const Scalar> entries, Field field);
    static Matrix column_vector(std::span<const Scalar> entries, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> entries() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    /// Same entries reinterpreted in another field. Rational to GF(2) requires 0/1 entries.
    Matrix converted(Field target) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix operator-() const;
    Matrix& scale(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::Rational;
    std::vector<Scalar> data_;
};

/// Matrix product; dispatches to the parallel kernel above a size threshold.
Matrix operator*(const Matrix& a, const Matrix& b);
/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Rank over the matrix's own field by exact elimination.
std::size_t rank(Matrix m);

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace imagebin
