#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "iwahori/dieudonne.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

// Full symplectic flag stored by an adapted basis c_1..c_g of W_g:
// W_i = span(c_1..c_i) for i <= g and W_{2g-i} = W_i^perp.
struct SymplecticFlag {
    int g = 0;
    Mat basis;  // g rows of length 2g

    Subspace step(const Field& K, const SymplecticForm& form, int i) const;
    // Rows c_1..c_{2g} with W_i = span(c_1..c_i) for every i.
    Mat full_basis(const Field& K, const SymplecticForm& form) const;
    // Reduced echelon bases of W_1..W_g.
    std::vector<Mat> echelon(const Field& K) const;
    // Concatenated echelon forms; equal keys iff equal flags.
    std::string key(const Field& K) const;
    bool isotropic(const Field& K, const SymplecticForm& form) const;
};

// F(W_i), V(W_i) inside W_i for 1 <= i <= g.
bool is_stable(const DieudonneModule& D, const SymplecticFlag& f);

using FlagSink = std::function<void(const SymplecticFlag&)>;

struct EnumOptions {
    int shard = 0;   // process choices of W_1 with index = shard mod shards
    int shards = 1;
};

// Every F_q-point of Flag^{perp,F,V} for D, each exactly once. D must be a
// valid module. Returns the number of flags delivered.
std::size_t enumerate_stable(const DieudonneModule& D, const FlagSink& sink, EnumOptions opt = {});
std::vector<SymplecticFlag> enumerate_stable(const SignedPerm& w, FieldPtr field);

struct KrError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads (lambda, omega) off the flag; throws KrError when the completed
// omega is not a signed permutation or lambda is not a 0/1 coweight of
// similitude 1.
AffineElement kr_type(const DieudonneModule& D, const SymplecticFlag& f);
// Builds an adapted basis for x and checks the four KR-basis conditions.
bool verify_kr_basis(const DieudonneModule& D, const SymplecticFlag& f, const AffineElement& x);
// Checks the four conditions for an explicitly given basis (rows eps_1..eps_2g).
bool check_kr_basis(const DieudonneModule& D, const SymplecticFlag& f, const AffineElement& x, const Mat& eps);

struct KrResult {
    AffineElement x;
    bool verified = false;
};
// kr_type followed by verify_kr_basis, sharing the coordinate change.
KrResult kr_type_checked(const DieudonneModule& D, const SymplecticFlag& f);

// Positive p-rank: U = span(e_1..e_k, e_{g+1}..e_{g+k}) and its complement
// U^{i,u}. Every stable flag splits along U + U^{i,u}.
struct ShuffleLabel {
    std::vector<int> J;          // steps j <= g where W_j ∩ U grows
    std::vector<Mat> u_flag;     // echelon bases of W_j ∩ U for j in J
    std::string key() const;
};

struct ShuffleSplit {
    ShuffleLabel label;
    SymplecticFlag residual;  // flag in F^{2(g-k)} via the inverse of beta~
};

// Final element w~ of rank g-k with sequence psi(k+i) - k.
SignedPerm reduced_stratum(const SignedPerm& w);
// Throws std::runtime_error when the flag does not split.
ShuffleSplit shuffle_decompose(const SignedPerm& w, const Field& K, const SymplecticFlag& f);

}  // namespace iwahori
