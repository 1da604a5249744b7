#pragma once

// Slow reference computations shared by the unit tests and the acceptance
// runner. Nothing here calls the enumerator or the KR reader.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "iwahori/flags.hpp"

namespace oracle {

using namespace iwahori;

// All nonzero vectors of F_q^n, first nonzero entry 1.
inline std::vector<std::vector<Elem>> projective_points(const Field& K, int n)
{
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> v(n, 0);
    int q = K.q();
    for (;;) {
        int c = 0;
        while (c < n && !v[c])
            ++c;
        if (c < n && v[c] == 1)
            out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == q)
            v[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

inline Subspace span_of(const Field& K, const std::vector<std::vector<Elem>>& vs, int n)
{
    Mat m(0, n);
    for (const auto& v : vs)
        m.append_row(v.data());
    return Subspace::span(K, m);
}

// F(W) and V(W) inside W, checked vector by vector.
inline bool stable(const DieudonneModule& D, const Subspace& W)
{
    const Field& K = D.K();
    Elem y[kMaxDim];
    for (int r = 0; r < W.dim(); ++r) {
        D.F.apply(K, W.basis().row(r), y);
        if (!W.contains(K, y))
            return false;
        D.V.apply(K, W.basis().row(r), y);
        if (!W.contains(K, y))
            return false;
    }
    return true;
}

// Keys of every full symplectic flag whose 2g steps are all F- and
// V-stable, found by trying every line at every step.
inline std::set<std::string> brute_force_flags(const DieudonneModule& D)
{
    const Field& K = D.K();
    int g = D.g, n = 2 * g;
    auto pts = projective_points(K, n);
    std::set<std::string> out;
    std::vector<std::vector<Elem>> chosen;
    auto rec = [&](auto&& self) -> void {
        int d = int(chosen.size());
        Subspace W = span_of(K, chosen, n);
        if (d == g) {
            // the upper half W_{2g-i} = W_i^perp must be stable too
            for (int i = 1; i <= g; ++i) {
                std::vector<std::vector<Elem>> part(chosen.begin(), chosen.begin() + i);
                if (!stable(D, D.form.perp(K, span_of(K, part, n))))
                    return;
            }
            Mat b(0, n);
            for (const auto& v : chosen)
                b.append_row(v.data());
            out.insert(SymplecticFlag{g, b}.key(K));
            return;
        }
        std::set<std::string> next;
        for (const auto& v : pts) {
            if (W.contains(K, v.data()))
                continue;
            bool iso = true;
            for (const auto& u : chosen)
                iso = iso && D.form.pair(K, u.data(), v.data()) == 0;
            if (!iso)
                continue;
            chosen.push_back(v);
            Subspace W2 = span_of(K, chosen, n);
            if (stable(D, W2) && next.insert(W2.key()).second)
                self(self);
            chosen.pop_back();
        }
    };
    rec(rec);
    return out;
}

// The worked KR example: K(s_310.tau) over a field containing b_2 outside
// F_{p^2} and a root b_1 of T^p + T + b_2^{p(p+1)}. Returns
// (flag basis c_1..c_3, eps rows) pairs for every parameter choice.
struct WorkedExample {
    SymplecticFlag flag;
    Mat eps;
};
inline std::vector<WorkedExample> worked_examples(const Field& K, int max_count = 1000000)
{
    std::vector<WorkedExample> out;
    int p = K.p();
    auto m = [&](Elem a, Elem b) { return K.mul(a, b); };
    for (int b2 = 0; b2 < K.q(); ++b2) {
        if (K.in_subfield(Elem(b2), 2))
            continue;
        Elem c = K.pow(Elem(b2), (long long)p * (p + 1));
        for (int b1 = 0; b1 < K.q(); ++b1) {
            if (K.add(K.add(K.frob(Elem(b1), 1), Elem(b1)), c) != 0)
                continue;
            for (int al = 0; al < K.q(); ++al) {
                if (int(out.size()) >= max_count)
                    return out;
                Elem B2 = Elem(b2), B1 = Elem(b1), A = Elem(al), one = 1, z = 0;
                Elem b2p = K.frob(B2, 1);
                Elem r3 = K.add(m(K.pow(B2, p + 1), one), B1);
                // columns of the printed C and eps, written as rows here
                Elem C[6][6] = {
                    {z, z, z, B1, K.neg(b2p), one},
                    {z, z, z, B2, one, z},
                    {K.neg(one), B2, r3, A, z, z},
                    {z, z, z, one, z, z},
                    {z, one, b2p, z, z, z},
                    {z, z, one, z, z, z},
                };
                Elem e2[6] = {z, z, z, K.frob(B1, -2), K.neg(K.frob(B2, -1)), one};
                Mat basis(0, 6), eps(0, 6);
                for (int i = 0; i < 3; ++i)
                    basis.append_row(C[i]);
                for (int i = 0; i < 6; ++i)
                    eps.append_row(i == 1 ? e2 : C[i]);
                out.push_back({SymplecticFlag{3, basis}, eps});
            }
        }
    }
    return out;
}

inline std::vector<std::vector<Elem>> all_vectors(const Field& K, int n)
{
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> v(n, 0);
    for (;;) {
        out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == K.q())
            v[i++] = 0;
        if (i == n)
            return out;
    }
}

// Every subspace of F^n, found as spans of up to n vectors.
inline std::vector<Subspace> all_subspaces(const Field& K, int n)
{
    auto vs = all_vectors(K, n);
    std::map<std::string, Subspace> seen;
    std::vector<Subspace> frontier{Subspace(n)};
    seen[Subspace(n).key()] = Subspace(n);
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const auto& W : frontier)
            for (const auto& v : vs) {
                Mat m = W.basis();
                m.append_row(v.data());
                auto U = Subspace::span(K, m);
                if (seen.emplace(U.key(), U).second)
                    next.push_back(U);
            }
        frontier = std::move(next);
    }
    std::vector<Subspace> out;
    for (auto& [k, W] : seen)
        out.push_back(W);
    return out;
}

// <Fx, y> = <x, Vy>^p for all x, y in the given list.
inline bool adjoint_on(const DieudonneModule& D, const std::vector<std::vector<Elem>>& vs)
{
    const Field& K = D.K();
    Elem fx[kMaxDim], vy[kMaxDim];
    for (const auto& x : vs)
        for (const auto& y : vs) {
            D.F.apply(K, x.data(), fx);
            D.V.apply(K, y.data(), vy);
            if (D.form.pair(K, fx, y.data()) != K.frob(D.form.pair(K, x.data(), vy), 1))
                return false;
        }
    return true;
}

// V(W^perp) = F^{-1}(W)^perp and (im V)^perp = im V.
inline bool perp_identities(const DieudonneModule& D, const std::vector<Subspace>& subs)
{
    const Field& K = D.K();
    for (const auto& W : subs)
        if (D.V.apply(K, D.form.perp(K, W)) != D.form.perp(K, D.F.preimage(K, W)))
            return false;
    return D.form.perp(K, D.V.image(K)) == D.V.image(K);
}

// Deterministic pseudo-random vectors (LCG).
inline std::vector<std::vector<Elem>> random_vectors(const Field& K, int n, int count, unsigned long long seed)
{
    std::vector<std::vector<Elem>> out;
    for (int c = 0; c < count; ++c) {
        std::vector<Elem> v(n);
        for (auto& x : v) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            x = Elem((seed >> 33) % K.q());
        }
        out.push_back(v);
    }
    return out;
}

// ON_g from the product formula, summing geometric series by hand.
inline std::uint64_t ordinary_formula(int g, int p)
{
    std::uint64_t n = 1;
    for (int i = 0; i < g; ++i)
        n *= 2;
    std::uint64_t pl = 1;
    for (int l = 1; l <= g; ++l) {
        pl *= p;
        std::uint64_t s = 0;
        for (std::uint64_t t = 1; t < pl; t *= p)
            s += t;  // 1 + p + ... + p^{l-1}
        n *= s;
    }
    return n;
}

}  // namespace oracle
