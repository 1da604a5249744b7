#include "iwahori/dieudonne.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace iwahori {

std::pair<SemilinearMap, SemilinearMap> standard_fv(const Field& K, const SignedPerm& w)
{
    auto psi = seq_from_elem(w);
    int g = w.g(), n = 2 * g;
    std::vector<int> m(g + 1), nn(g + 1);
    std::vector<int> ms, ns;
    for (int j = 1; j <= n; ++j)
        (psi.psi[j - 1] < psi.psi[j] ? ms : ns).push_back(j);
    if (int(ms.size()) != g)
        throw std::logic_error("standard_fv: bad final sequence");
    for (int i = 1; i <= g; ++i) {
        m[i] = ms[i - 1];
        nn[i] = ns[g - i];  // n_g < ... < n_1
    }
    SemilinearMap F{Mat(n, n), 1}, V{Mat(n, n), -1};
    Elem minus = K.neg(1);
    for (int i = 1; i <= g; ++i) {
        for (int j = 1; j <= g; ++j) {
            if (i == m[j])
                F.A(j - 1, i - 1) = 1;
            if (i == nn[j])
                F.A(g + j - 1, i - 1) = 1;
        }
        if (nn[i] <= g)
            V.A(g + nn[i] - 1, i - 1) = minus;
        if (m[i] <= g)
            V.A(g + m[i] - 1, g + i - 1) = 1;
    }
    return {F, V};
}

DieudonneModule standard_module(const SignedPerm& w, FieldPtr field)
{
    auto [F, V] = standard_fv(*field, w);
    return {w.g(), field, F, V, SymplecticForm::standard(*field, w.g())};
}

bool adjoint_check(const Field& K, const SemilinearMap& F, const SemilinearMap& V, const SymplecticForm& form)
{
    int n = form.gram.rows;
    Elem ei[kMaxDim], ej[kMaxDim], fx[kMaxDim], vy[kMaxDim];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::fill(ei, ei + kMaxDim, 0);
            std::fill(ej, ej + kMaxDim, 0);
            ei[i] = 1;
            ej[j] = 1;
            F.apply(K, ei, fx);
            V.apply(K, ej, vy);
            if (form.pair(K, fx, ej) != K.frob(form.pair(K, ei, vy), 1))
                return false;
        }
    return true;
}

Validation validate(const DieudonneModule& D)
{
    const Field& K = D.K();
    int n = 2 * D.g;
    auto fail = [](std::string s) { return Validation{false, std::move(s)}; };
    if (D.F.A.rows != n || D.F.A.cols != n || D.V.A.rows != n || D.V.A.cols != n || D.form.gram.rows != n)
        return fail("shape");
    if (D.F.twist != 1 || D.V.twist != -1)
        return fail("twist");
    if (!D.form.alternating(K) || !D.form.nondegenerate(K))
        return fail("form not alternating and nondegenerate");
    if (D.V.image(K) != D.F.kernel(K))
        return fail("im V != ker F");
    if (D.F.image(K) != D.V.kernel(K))
        return fail("im F != ker V");
    if (!adjoint_check(K, D.F, D.V, D.form))
        return fail("<Fx,y> != <x,Vy>^p");
    return {};
}

DieudonneModule conjugate(const DieudonneModule& D, const Mat& M)
{
    const Field& K = D.K();
    if (mul(K, mul(K, transpose(M), D.form.gram), M) != D.form.gram)
        throw std::invalid_argument("conjugate: matrix is not symplectic");
    auto Minv = inverse(K, M);
    if (!Minv)
        throw std::invalid_argument("conjugate: matrix is singular");
    DieudonneModule r = D;
    r.F.A = mul(K, mul(K, *Minv, D.F.A), frob(K, M, D.F.twist));
    r.V.A = mul(K, mul(K, *Minv, D.V.A), frob(K, M, D.V.twist));
    return r;
}

Mat random_symplectic(const Field& K, const SymplecticForm& form, unsigned long long& state, int steps)
{
    int n = form.gram.rows;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    Mat M = Mat::identity(n);
    for (int s = 0; s < steps; ++s) {
        Elem v[kMaxDim] = {0};
        for (int j = 0; j < n; ++j)
            v[j] = Elem(next() % K.q());
        Elem c = Elem(1 + next() % (K.q() - 1));
        // Transvection x -> x + c<x,v>v, one column per basis vector.
        Mat T = Mat::identity(n);
        Elem e[kMaxDim];
        for (int j = 0; j < n; ++j) {
            std::fill(e, e + kMaxDim, 0);
            e[j] = 1;
            Elem f = K.mul(c, form.pair(K, e, v));
            for (int i = 0; i < n; ++i)
                T(i, j) = K.add(T(i, j), K.mul(f, v[i]));
        }
        M = mul(K, T, M);
    }
    return M;
}

CanonicalFiltration canonical_filtration(const DieudonneModule& D)
{
    const Field& K = D.K();
    int n = 2 * D.g;
    std::map<std::string, Subspace> seen;
    std::vector<Subspace> todo{Subspace(n), Subspace::full(n)};
    while (!todo.empty()) {
        Subspace w = todo.back();
        todo.pop_back();
        if (!seen.emplace(w.key(), w).second)
            continue;
        todo.push_back(D.F.apply(K, w));
        todo.push_back(D.form.perp(K, w));
    }
    std::vector<Subspace> chain;
    for (auto& kv : seen)
        chain.push_back(kv.second);
    std::sort(chain.begin(), chain.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i].dim() == chain[i + 1].dim() || !chain[i + 1].contains(K, chain[i]))
            throw std::runtime_error("canonical_filtration: closure is not a chain (invalid module)");
    CanonicalFiltration cf;
    cf.chain = chain;
    for (const auto& w : chain)
        cf.rho.push_back(w.dim());
    for (const auto& w : chain) {
        Subspace fw = D.F.apply(K, w);
        auto it = std::find(chain.begin(), chain.end(), fw);
        cf.v.push_back(int(it - chain.begin()));
    }
    return cf;
}

FinalSequence eo_type(const DieudonneModule& D)
{
    auto cf = canonical_filtration(D);
    int n = 2 * D.g;
    FinalSequence f;
    f.psi.assign(n + 1, 0);
    for (std::size_t i = 0; i + 1 < cf.chain.size(); ++i) {
        bool up = cf.v[i + 1] > cf.v[i];
        for (int d = cf.rho[i] + 1; d <= cf.rho[i + 1]; ++d)
            f.psi[d] = f.psi[d - 1] + (up ? 1 : 0);
    }
    for (std::size_t i = 0; i < cf.chain.size(); ++i)
        if (f.psi[cf.rho[i]] != cf.rho[cf.v[i]])
            throw std::runtime_error("eo_type: psi(rho(i)) != dim F(W_i)");
    if (!f.valid())
        throw std::runtime_error("eo_type: recursion produced an invalid final sequence " + f.str());
    return f;
}

int dim_im_v2(const DieudonneModule& D)
{
    return compose(D.K(), D.V, D.V).rank(D.K());
}

int dim_im_f2(const DieudonneModule& D)
{
    return compose(D.K(), D.F, D.F).rank(D.K());
}

int a_number(const DieudonneModule& D)
{
    return intersect(D.K(), D.F.kernel(D.K()), D.V.kernel(D.K())).dim();
}

int p_rank_mod(const DieudonneModule& D)
{
    SemilinearMap P = D.F;
    for (int i = 1; i < 2 * D.g; ++i)
        P = compose(D.K(), D.F, P);
    return P.rank(D.K());
}

Elem default_eps(const Field& K)
{
    if (K.p() == 2)
        return 1;
    if (K.k() % 2)
        throw std::invalid_argument("default_eps: field does not contain F_{p^2}");
    int p = K.p();
    int d = 2;
    for (;; ++d) {
        bool sq = false;
        for (int x = 1; x < p; ++x)
            if (x * x % p == d)
                sq = true;
        if (!sq)
            break;
    }
    Elem target = K.from_int(d);
    for (int e = 1; e < K.q(); ++e)
        if (K.mul(Elem(e), Elem(e)) == target)
            return Elem(e);
    throw std::logic_error("default_eps: no square root found");
}

bool harashita_valid(const HarashitaForm& h, std::string* why)
{
    auto fail = [&](const char* s) {
        if (why)
            *why = s;
        return false;
    };
    const Field& K = *h.field;
    int g = h.g;
    if (h.T.rows != g || h.T.cols != g)
        return fail("T has wrong shape");
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j)
            if (h.T(i, j))
                return fail("T not strictly lower triangular");
    // (T w)_{ij} = T_{i, g-1-j}
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (h.T(i, g - 1 - j) != h.T(j, g - 1 - i))
                return fail("T w not symmetric");
    if (h.eps == 0 || K.frob(h.eps, 1) != K.neg(h.eps))
        return fail("eps^sigma != -eps");
    return true;
}

DieudonneModule harashita_module(const HarashitaForm& h)
{
    std::string why;
    if (!harashita_valid(h, &why))
        throw std::invalid_argument("harashita_module: " + why);
    const Field& K = *h.field;
    int g = h.g, n = 2 * g;
    SemilinearMap F{Mat(n, n), 1}, V{Mat(n, n), -1};
    Mat Ts = frob(K, h.T, -1);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            F.A(i, j) = h.T(i, j);
            if (i + j == g - 1) {
                F.A(g + i, j) = h.eps;
                V.A(g + i, j) = h.eps;
            }
            // (w Ts w)_{ij} = Ts_{g-1-i, g-1-j}
            V.A(g + i, g + j) = Ts(g - 1 - i, g - 1 - j);
        }
    return {g, h.field, F, V, SymplecticForm::standard(K, g)};
}

}  // namespace iwahori
