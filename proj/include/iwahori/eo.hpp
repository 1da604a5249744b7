#pragma once

#include <string>
#include <vector>

#include "iwahori/weyl.hpp"

namespace iwahori {

// psi(0..2g). Serialized in the short form (psi(1),...,psi(g)).
struct FinalSequence {
    std::vector<int> psi;

    int g() const { return int(psi.size()) / 2; }
    bool valid() const;
    std::vector<int> short_form() const { return {psi.begin() + 1, psi.begin() + 1 + g()}; }
    std::string str() const;  // "(0,1,1)"
    // Extends a short form by psi(0)=0 and psi(2g-i) = psi(i) + g - i.
    static FinalSequence from_short(const std::vector<int>& s);
    friend bool operator==(const FinalSequence& a, const FinalSequence& b) { return a.psi == b.psi; }
    friend bool operator!=(const FinalSequence& a, const FinalSequence& b) { return a.psi != b.psi; }
};

bool is_final(const SignedPerm& w);
// All 2^g final elements, ordered by short-form sequence.
std::vector<SignedPerm> final_elements(int g);

FinalSequence seq_from_elem(const SignedPerm& w);  // throws if w is not final
SignedPerm elem_from_seq(const FinalSequence& s);  // throws if s is invalid

int eo_dim(const SignedPerm& w);
int eo_p_rank(const SignedPerm& w);  // #{i <= g : w(i) = g+i}, checked against w(1)-1
int eo_a_number(const SignedPerm& w);
bool eo_in_ss(const SignedPerm& w);
bool closure_leq(const FinalSequence& a, const FinalSequence& b);

struct EoRow {
    FinalSequence psi;
    SignedPerm w;
    std::string name;
    int dim, p_rank, a_number;
    bool in_ss;
};
std::vector<EoRow> eo_table(int g);

}  // namespace iwahori
