#include <cstdlib>
#include <cstring>

#include "iwahori/kernels.hpp"

namespace iwahori::kernels {

#if defined(IWAHORI_HAVE_AVX2)
const Gf2Kernels* avx2_table();
#endif

const Gf2Kernels* avx2()
{
#if defined(IWAHORI_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const Gf2Kernels& active()
{
    static const Gf2Kernels* chosen = [] {
        const char* env = std::getenv("IWAHORI_SIMD");
        if (env && std::strcmp(env, "scalar") == 0)
            return &scalar();
        const Gf2Kernels* v = avx2();
        return v ? v : &scalar();
    }();
    return *chosen;
}

}  // namespace iwahori::kernels
