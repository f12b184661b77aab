#include <cstdlib>
#include <string>

#include "artgraph/simd.hpp"
#include "kernels.hpp"

namespace artgraph::simd {

std::string_view to_string(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "scalar";
}

const Kernels& scalar_kernels()
{
    static const Kernels k{Isa::Scalar, detail::dot_scalar, detail::squared_norm_scalar, detail::scale_scalar};
    return k;
}

const Kernels* kernels_for(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return &scalar_kernels();
    case Isa::Avx2:
#if defined(ARTGRAPH_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            static const Kernels k{Isa::Avx2, detail::dot_avx2, detail::squared_norm_avx2, detail::scale_avx2};
            return &k;
        }
#endif
        return nullptr;
    case Isa::Neon:
#if defined(__aarch64__)
        {
            static const Kernels k{Isa::Neon, detail::dot_neon, detail::squared_norm_neon, detail::scale_neon};
            return &k;
        }
#else
        return nullptr;
#endif
    }
    return nullptr;
}

const Kernels& active()
{
    static const Kernels& chosen = [] () -> const Kernels& {
        const char* env = std::getenv("ARTGRAPH_SIMD");
        if (env && std::string(env) == "scalar")
            return scalar_kernels();
        for (Isa isa : {Isa::Avx2, Isa::Neon})
            if (const Kernels* k = kernels_for(isa))
                return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace artgraph::simd
