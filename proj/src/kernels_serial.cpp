#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

namespace imagebin::kernels {

namespace detail {

void check_multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InputError("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    if (a.field() != b.field()) throw InputError("matrix product field mismatch");
}

void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        auto brow = b.row(k);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!brow[j].is_zero()) out[j] += aik * brow[j];
    }
}

void kron_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
        const Scalar& x = a(ia, ja);
        if (x.is_zero()) continue;
        for (std::size_t ib = 0; ib < b.rows(); ++ib)
            for (std::size_t jb = 0; jb < b.cols(); ++jb)
                if (!b(ib, jb).is_zero())
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = x * b(ib, jb);
    }
}

void eliminate_row(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t i) {
    if (i == pivot_row) return;
    Scalar factor = m(i, col);
    if (factor.is_zero()) return;
    auto target = m.row(i);
    auto pivot = m.row(pivot_row);
    for (std::size_t j = col; j < m.cols(); ++j)
        if (!pivot[j].is_zero()) target[j] -= factor * pivot[j];
}

}  // namespace detail

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
    detail::check_multiply(a, b);
    Matrix c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) detail::multiply_row(a, b, c, i);
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw InputError("kronecker product field mismatch");
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) detail::kron_row(a, b, c, i);
    return c;
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row) {
    for (std::size_t i = first_row; i < m.rows(); ++i) detail::eliminate_row(m, pivot_row, col, i);
}

}  // namespace serial

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (parallel_enabled() && a.rows() * a.cols() * b.cols() >= parallel_threshold)
        return parallel::multiply(a, b);
    return serial::multiply(a, b);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (parallel_enabled() && a.rows() * a.cols() * b.rows() * b.cols() >= parallel_threshold)
        return parallel::kron(a, b);
    return serial::kron(a, b);
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row) {
    if (parallel_enabled() && (m.rows() - first_row) * (m.cols() - col) >= parallel_threshold)
        parallel::eliminate(m, pivot_row, col, first_row);
    else
        serial::eliminate(m, pivot_row, col, first_row);
}

}  // namespace imagebin::kernels
