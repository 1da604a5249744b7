#pragma once

#include <cstddef>
#include <cstdint>

namespace iwahori::kernels {

// Bulk byte kernels for characteristic 2. An F_2-linear map f on bytes is
// given by two 16-entry tables: f(x) = tbl[x & 15] ^ tbl[16 + (x >> 4)].
// Multiplication by a constant of F_{2^k} (k <= 8) and every power of
// Frobenius are such maps.
struct Gf2Kernels {
    const char* name;
    void (*map)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl);
    void (*map_xor)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl);
    void (*xor_into)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
};

const Gf2Kernels& scalar();
// nullptr when the CPU (or the build) lacks AVX2.
const Gf2Kernels* avx2();
// Selected once at first use. IWAHORI_SIMD=scalar forces the reference path.
const Gf2Kernels& active();

}  // namespace iwahori::kernels
