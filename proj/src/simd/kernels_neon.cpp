#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels.hpp"

namespace artgraph::simd::detail {

double dot_neon(const double* a, const double* b, std::size_t n)
{
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

double squared_norm_neon(const double* a, std::size_t n)
{
    return dot_neon(a, a, n);
}

void scale_neon(double* a, std::size_t n, double factor)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(a + i, vmulq_n_f64(vld1q_f64(a + i), factor));
    for (; i < n; ++i)
        a[i] *= factor;
}

}  // namespace artgraph::simd::detail

#endif
