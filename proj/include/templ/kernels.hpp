#pragma once

#include <cstddef>
#include <functional>

#include "templ/matrix.hpp"

// Data-parallel kernels. Each kernel has a serial reference implementation and
// an OpenMP implementation with identical output; the dispatching entry points
// pick the parallel path above a work threshold when OpenMP is compiled in.

namespace templ::kernels {

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);
}  // namespace serial

namespace omp {
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Runs body(i) for i in [0, count); iterations must not share mutable state.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);
}  // namespace omp

bool openmp_enabled();
int max_threads();

/// Entries of work (rows * inner * cols for products) above which the
/// dispatchers use the OpenMP path.
inline constexpr std::size_t kParallelWork = 1u << 15;

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace templ::kernels
