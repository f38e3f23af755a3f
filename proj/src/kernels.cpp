#include "templ/kernels.hpp"

#include <stdexcept>

#ifdef TEMPL_HAVE_OPENMP
#include <omp.h>
#endif

namespace templ::kernels {

namespace {

void check_product_shapes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  if (!(a.field() == b.field())) throw std::invalid_argument("matrix product over different fields");
}

// One output row of a*b. Shared by both implementations so they agree exactly.
void product_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
  const Field f = a.field();
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Rational& bkj = b(k, j);
      if (bkj == 0) continue;
      if (f.is_prime_field())
        out.raw(i, j) = f.add(out(i, j), f.mul(aik, bkj));
      else
        out.raw(i, j) += aik * bkj;
    }
  }
}

void kronecker_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t ai) {
  const Field f = a.field();
  for (std::size_t aj = 0; aj < a.cols(); ++aj) {
    const Rational& x = a(ai, aj);
    if (x == 0) continue;
    for (std::size_t bi = 0; bi < b.rows(); ++bi)
      for (std::size_t bj = 0; bj < b.cols(); ++bj) {
        const Rational& y = b(bi, bj);
        if (y == 0) continue;
        out.raw(ai * b.rows() + bi, aj * b.cols() + bj) = f.mul(x, y);
      }
  }
}

}  // namespace

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shapes(a, b);
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, out, i);
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kronecker product over different fields");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) kronecker_row(a, b, out, i);
  return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace serial

namespace omp {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shapes(a, b);
  Matrix out(a.rows(), b.cols(), a.field());
  const auto n = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) product_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kronecker product over different fields");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  const auto n = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) kronecker_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto n = static_cast<long long>(count);
  // Exceptions may not cross the parallel region; rethrow the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(templ_for_each_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace omp

bool openmp_enabled() {
#ifdef TEMPL_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef TEMPL_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (openmp_enabled() && max_threads() > 1 && a.rows() * a.cols() * b.cols() >= kParallelWork)
    return omp::multiply(a, b);
  return serial::multiply(a, b);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (openmp_enabled() && max_threads() > 1 && a.rows() * a.cols() * b.rows() * b.cols() >= kParallelWork)
    return omp::kronecker(a, b);
  return serial::kronecker(a, b);
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (openmp_enabled() && max_threads() > 1 && count > 1) return omp::for_each_index(count, body);
  serial::for_each_index(count, body);
}

}  // namespace templ::kernels
