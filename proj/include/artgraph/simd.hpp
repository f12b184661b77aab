#pragma once

#include <cstddef>
#include <string_view>

namespace artgraph::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Vector kernels over contiguous doubles. Every variant must agree with the
/// scalar reference to within rounding of the summation order.
struct Kernels {
    Isa isa = Isa::Scalar;
    double (*dot)(const double* a, const double* b, std::size_t n) = nullptr;
    double (*squared_norm)(const double* a, std::size_t n) = nullptr;
    void (*scale)(double* a, std::size_t n, double factor) = nullptr;
};

const Kernels& scalar_kernels();

/// Kernels for `isa` when compiled in and supported by this CPU, else nullptr.
const Kernels* kernels_for(Isa isa);

/// Best available kernels, chosen once per process. Setting the environment
/// variable ARTGRAPH_SIMD=scalar forces the reference path.
const Kernels& active();

}  // namespace artgraph::simd
