#pragma once

#include <string>
#include <vector>

#include "iwahori/eo.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

struct DieudonneModule {
    int g = 0;
    FieldPtr field;
    SemilinearMap F;  // twist +1
    SemilinearMap V;  // twist -1
    SymplecticForm form;

    const Field& K() const { return *field; }
};

// Pullbacks F_w, V_w: basis vectors to basis vectors up to sign.
std::pair<SemilinearMap, SemilinearMap> standard_fv(const Field& K, const SignedPerm& w);
DieudonneModule standard_module(const SignedPerm& w, FieldPtr field);

// <F e_i, e_j> = <e_i, V e_j>^p on all basis pairs.
bool adjoint_check(const Field& K, const SemilinearMap& F, const SemilinearMap& V, const SymplecticForm& form);

struct Validation {
    bool ok = true;
    std::string failure;  // first failing axiom
};
Validation validate(const DieudonneModule& D);

// New basis given by the columns of a symplectic M: A -> M^{-1} A sigma^e(M).
// Throws std::invalid_argument when M^t G M != G.
DieudonneModule conjugate(const DieudonneModule& D, const Mat& M);
// Product of random symplectic transvections x -> x + c<x,v>v.
Mat random_symplectic(const Field& K, const SymplecticForm& form, unsigned long long& state, int steps = 12);

struct CanonicalFiltration {
    std::vector<Subspace> chain;  // W_0 = 0 ... W_{2r} = D
    std::vector<int> rho;         // dim W_j
    std::vector<int> v;           // F(W_j) = W_{v(j)}
};
// Throws std::runtime_error when the closure is not a chain.
CanonicalFiltration canonical_filtration(const DieudonneModule& D);
FinalSequence eo_type(const DieudonneModule& D);

int dim_im_v2(const DieudonneModule& D);
int dim_im_f2(const DieudonneModule& D);
// dim(ker F ∩ ker V); equals g - dim im V^2 on valid modules.
int a_number(const DieudonneModule& D);
// Rank of F^{2g}.
int p_rank_mod(const DieudonneModule& D);

struct HarashitaForm {
    int g = 0;
    FieldPtr field;
    Elem eps = 1;
    Mat T;  // strictly lower triangular, T w symmetric
};
// Fixed eps with eps^sigma = -eps: 1 for p = 2, else a square root of the
// least non-residue in F_p. Throws when the field does not contain F_{p^2}.
Elem default_eps(const Field& K);
bool harashita_valid(const HarashitaForm& h, std::string* why = nullptr);
// Basis X_1..X_g, Y_1..Y_g; F = (T 0; eps w 0), V = (0 0; eps w, w T^{sigma^-1} w).
DieudonneModule harashita_module(const HarashitaForm& h);

}  // namespace iwahori
