// Compiled with -mavx2; only reached after a runtime CPU check.
#include "iwahori/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace iwahori::kernels {
namespace {

inline __m256i apply_tables(__m256i x, __m256i lo, __m256i hi, __m256i mask)
{
    __m256i l = _mm256_and_si256(x, mask);
    __m256i h = _mm256_and_si256(_mm256_srli_epi16(x, 4), mask);
    return _mm256_xor_si256(_mm256_shuffle_epi8(lo, l), _mm256_shuffle_epi8(hi, h));
}

inline __m128i apply_tables128(__m128i x, __m128i lo, __m128i hi, __m128i mask)
{
    __m128i l = _mm_and_si128(x, mask);
    __m128i h = _mm_and_si128(_mm_srli_epi16(x, 4), mask);
    return _mm_xor_si128(_mm_shuffle_epi8(lo, l), _mm_shuffle_epi8(hi, h));
}

template <bool Accumulate>
void map_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl)
{
    const __m128i lo128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tbl));
    const __m128i hi128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tbl + 16));
    const __m256i lo = _mm256_broadcastsi128_si256(lo128);
    const __m256i hi = _mm256_broadcastsi128_si256(hi128);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i y = apply_tables(x, lo, hi, mask);
        if constexpr (Accumulate)
            y = _mm256_xor_si256(y, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), y);
    }
    if (i < n) {
        // Tail of up to 31 bytes through a 16-byte lane and a zero-padded copy.
        const __m128i mask128 = _mm_set1_epi8(0x0f);
        for (; i < n; i += 16) {
            alignas(16) std::uint8_t buf[16] = {0};
            alignas(16) std::uint8_t acc[16] = {0};
            std::size_t m = n - i < 16 ? n - i : 16;
            for (std::size_t j = 0; j < m; ++j) {
                buf[j] = src[i + j];
                acc[j] = dst[i + j];
            }
            __m128i y = apply_tables128(_mm_load_si128(reinterpret_cast<const __m128i*>(buf)), lo128, hi128, mask128);
            if constexpr (Accumulate)
                y = _mm_xor_si128(y, _mm_load_si128(reinterpret_cast<const __m128i*>(acc)));
            _mm_store_si128(reinterpret_cast<__m128i*>(buf), y);
            for (std::size_t j = 0; j < m; ++j)
                dst[i + j] = buf[j];
        }
    }
}

void map_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl)
{
    map_impl<false>(dst, src, n, tbl);
}

void map_xor_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl)
{
    map_impl<true>(dst, src, n, tbl);
}

void xor_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

}  // namespace

const Gf2Kernels* avx2_table()
{
    static const Gf2Kernels k{"avx2", map_avx2, map_xor_avx2, xor_avx2};
    return &k;
}

}  // namespace iwahori::kernels

#else

namespace iwahori::kernels {
const Gf2Kernels* avx2_table() { return nullptr; }
}  // namespace iwahori::kernels

#endif
