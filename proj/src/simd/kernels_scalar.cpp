#include "kernels.hpp"

namespace artgraph::simd::detail {

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

double squared_norm_scalar(const double* a, std::size_t n)
{
    return dot_scalar(a, a, n);
}

void scale_scalar(double* a, std::size_t n, double factor)
{
    for (std::size_t i = 0; i < n; ++i)
        a[i] *= factor;
}

}  // namespace artgraph::simd::detail
