#include "iwahori/kernels.hpp"

namespace iwahori::kernels {
namespace {

void map_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl)
{
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t x = src[i];
        dst[i] = tbl[x & 15] ^ tbl[16 + (x >> 4)];
    }
}

void map_xor_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, const std::uint8_t* tbl)
{
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t x = src[i];
        dst[i] ^= tbl[x & 15] ^ tbl[16 + (x >> 4)];
    }
}

void xor_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

}  // namespace

const Gf2Kernels& scalar()
{
    static const Gf2Kernels k{"scalar", map_scalar, map_xor_scalar, xor_scalar};
    return k;
}

}  // namespace iwahori::kernels
