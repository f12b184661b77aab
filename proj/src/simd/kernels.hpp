#pragma once

#include <cstddef>

namespace artgraph::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double squared_norm_scalar(const double* a, std::size_t n);
void scale_scalar(double* a, std::size_t n, double factor);

#if defined(ARTGRAPH_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
double squared_norm_avx2(const double* a, std::size_t n);
void scale_avx2(double* a, std::size_t n, double factor);
#endif

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n);
double squared_norm_neon(const double* a, std::size_t n);
void scale_neon(double* a, std::size_t n, double factor);
#endif

}  // namespace artgraph::simd::detail
