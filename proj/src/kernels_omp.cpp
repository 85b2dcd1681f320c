#include "imagebin/errors.hpp"
#include "imagebin/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace imagebin::kernels {

namespace detail {
void check_multiply(const Matrix& a, const Matrix& b);
void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i);
void kron_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t ia);
void eliminate_row(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t i);
}  // namespace detail

bool parallel_enabled() {
#if defined(_OPENMP)
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Each iteration writes a disjoint row of the output, so no synchronisation
// is needed. GMP objects are only read concurrently.

namespace parallel {

Matrix multiply(const Matrix& a, const Matrix& b) {
    detail::check_multiply(a, b);
    Matrix c(a.rows(), b.cols(), a.field());
    const long long n = static_cast<long long>(a.rows());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n; ++i) detail::multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw InputError("kronecker product field mismatch");
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    const long long n = static_cast<long long>(a.rows());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n; ++i) detail::kron_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row) {
    const long long last = static_cast<long long>(m.rows());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long long i = static_cast<long long>(first_row); i < last; ++i)
        detail::eliminate_row(m, pivot_row, col, static_cast<std::size_t>(i));
}

}  // namespace parallel

}  // namespace imagebin::kernels
