#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace iwahori {

// Field elements are stored as their coefficient vector in F_p[t]/(m(t)),
// packed base p: code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}. For p = 2 the
// code is the bit vector of the polynomial, so addition is XOR.
using Elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr int kMaxOrder = 256;

    // Shared immutable instance for F_{p^k}. Throws std::invalid_argument
    // when p is not prime, q > 256, or no modulus is tabulated.
    static FieldPtr get(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    bool char2() const { return p_ == 2; }
    // Coefficients of the monic modulus, lowest degree first.
    const std::vector<int>& modulus() const { return modulus_; }
    std::string name() const;

    Elem add(Elem a, Elem b) const { return p_ == 2 ? Elem(a ^ b) : add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return p_ == 2 ? Elem(a ^ b) : add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;  // throws on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;
    // a^{p^e}; e may be negative (inverse Frobenius).
    Elem frob(Elem a, int e = 1) const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long n) const;
    // A primitive element (the class of t, or the least primitive root for k = 1).
    Elem generator() const { return gen_; }
    // Code of t^i, the F_p-basis used for coordinate expansions.
    Elem basis_elem(int i) const;
    int digit(Elem a, int i) const;
    Elem from_digits(const int* d) const;

    // x^{p^d} == x, i.e. x lies in the subfield F_{p^d}.
    bool in_subfield(Elem a, int d) const { return frob(a, d) == a; }

    const Elem* mul_row(Elem c) const { return &mul_[c * q_]; }
    const Elem* frob_table(int e) const;
    // Nibble tables (32 bytes) of the F_2-linear byte map x -> c*x; char 2 only.
    const std::uint8_t* nibble_mul(Elem c) const { return &nib_mul_[c * 32]; }
    const std::uint8_t* nibble_frob(int e) const;

    // dst[i] += c * src[i]
    void axpy(Elem* dst, const Elem* src, std::size_t n, Elem c) const;
    // dst[i] = c * dst[i]
    void scale(Elem* dst, std::size_t n, Elem c) const;
    // dst[i] = src[i]^{p^e}
    void frob_span(Elem* dst, const Elem* src, std::size_t n, int e) const;

    Field(int p, int k, std::vector<int> modulus);

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<std::vector<Elem>> frob_;  // frob_[e] for e = 0..k-1
    std::vector<std::uint8_t> nib_mul_;
    std::vector<std::vector<std::uint8_t>> nib_frob_;
    Elem gen_ = 1;
};

bool is_prime(int n);
// Tabulated Conway modulus for (p,k), lowest degree first; empty if absent.
std::vector<int> conway_modulus(int p, int k);

// Image of a under the Conway-compatible embedding F_{p^a} -> F_{p^b}, a | b.
Elem embed(const Field& from, const Field& to, Elem a);

}  // namespace iwahori
