#pragma once

#include <string>
#include <vector>

namespace iwahori {

// Signed permutation of {1..2g}: images[i] = pi(i+1), with
// pi(i) + pi(2g+1-i) = 2g+1.
struct SignedPerm {
    std::vector<int> images;

    int g() const { return int(images.size()) / 2; }
    int operator()(int i) const { return images[i - 1]; }
    static SignedPerm identity(int g);
    // Cycle notation on {1..2g}, e.g. {{1,3},{2,5},{4,6}}.
    static SignedPerm from_cycles(int g, const std::vector<std::vector<int>>& cycles);
    bool valid() const;
    SignedPerm inverse() const;
    std::string cycles() const;  // "(13)(25)(46)", "id" for the identity
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.images == b.images; }
    friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return a.images != b.images; }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.images < b.images; }
};

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);  // (ab)(i) = a(b(i))

// t^lambda omega. Composition (t^l w)(t^m s) = t^{l + w.m} ws with
// (w.m)(i) = m(w^{-1}(i)).
struct AffineElement {
    std::vector<int> lambda;
    SignedPerm omega;

    int g() const { return omega.g(); }
    // a_i + a_{2g+1-i}; 0 on W_a, 1 on W_a tau.
    int similitude() const;
    bool valid_coweight() const;
    static AffineElement identity(int g);
    // Written form omega * t^mu, normalized to t^{omega.mu} omega.
    static AffineElement perm_then_translation(const SignedPerm& omega, const std::vector<int>& mu);
    friend bool operator==(const AffineElement& a, const AffineElement& b)
    {
        return a.lambda == b.lambda && a.omega == b.omega;
    }
    friend bool operator!=(const AffineElement& a, const AffineElement& b) { return !(a == b); }
    friend bool operator<(const AffineElement& a, const AffineElement& b)
    {
        return a.lambda != b.lambda ? a.lambda < b.lambda : a.omega < b.omega;
    }
};

AffineElement compose(const AffineElement& x, const AffineElement& y);
AffineElement invert(const AffineElement& x);

struct Generators {
    std::vector<AffineElement> s;  // s[0..g]
    AffineElement tau;
};
Generators generators(int g);
// tau^e for e in Z.
AffineElement tau_power(int g, int e);

// Coxeter length on W_a; for x = w tau^c the length of w.
// Throws std::invalid_argument for an invalid coweight or signed permutation.
int length(const AffineElement& x);
// Length of a finite Weyl group element (zero coweight).
int length(const SignedPerm& w);
bool bruhat_leq(const AffineElement& x, const AffineElement& y);

// Reduced word of the W_a part; among all reduced words the one whose
// reversal is lexicographically least (greedy smallest right descent).
std::vector<int> reduced_word(const AffineElement& x);
// "s_310.tau", "tau", "s_23", "id"; indices joined with ',' when g >= 10.
std::string name(const AffineElement& x);
// Typeset form "s_{310}τ".
std::string display_name(const AffineElement& x);
std::string name(const SignedPerm& w);
// Inverse of name() for a given g; also accepts "s_{310}τ" and "s310tau".
AffineElement parse_name(int g, const std::string& s);
AffineElement from_word(int g, const std::vector<int>& word, int tau_exp);

struct AdmissibleElement {
    AffineElement element;
    int length = 0;
    int p_rank = 0;
    std::string name;
};

// Fixed-point-free omega with lambda(i) = 0 iff omega^{-1}(i) > i, sorted
// by (length, name).
std::vector<AdmissibleElement> adm_rank0(int g);
AffineElement xi_inverse(const SignedPerm& omega);
AdmissibleElement make_admissible(const AffineElement& x);
// #Fix(omega)/2; throws on odd fixed-point counts.
int p_rank_adm(const AffineElement& x);
// {i : omega^2(i) < omega(i) < i}
std::vector<int> n_set(const AffineElement& x);

}  // namespace iwahori
