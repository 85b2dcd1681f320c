#pragma once

// Data-parallel kernels. Every kernel exists twice: a plain serial reference
// and an OpenMP version. Both must produce identical results; the tests and
// the benchmark compare them. Callers normally go through the dispatching
// functions, which pick the parallel version above a work threshold.

#include <cstddef>
#include <exception>
#include <mutex>

#include "imagebin/matrix.hpp"

namespace imagebin::kernels {

bool parallel_enabled();
int max_threads();

/// Work (multiply-adds) below which dispatchers stay serial.
inline constexpr std::size_t parallel_threshold = 4096;

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Subtracts multiples of the (already normalised) pivot row from every row
/// in [first_row, m.rows()) except the pivot row, zeroing column `col`.
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row);
}  // namespace serial

namespace parallel {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row);
}  // namespace parallel

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t first_row);

/// Runs body(i) for i in [0, n). The parallel flavour rethrows the first
/// exception raised by any iteration after the loop completes.
template <class Body>
void for_each_index_serial(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class Body>
void for_each_index(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace imagebin::kernels
