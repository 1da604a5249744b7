#include <array>
#include <set>
#include <stdexcept>

#include "iwahori/flags.hpp"

namespace iwahori {

namespace {

using Vec = std::array<Elem, kMaxDim>;

// Null space of an F_p matrix given as rows of ints.
std::vector<std::vector<int>> fp_nullspace(std::vector<std::vector<int>> a, int cols, int p)
{
    auto inv = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1)
                return y;
        return 0;
    };
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < int(a.size()); ++c) {
        int s = -1;
        for (int i = r; i < int(a.size()); ++i)
            if (a[i][c]) {
                s = i;
                break;
            }
        if (s < 0)
            continue;
        std::swap(a[s], a[r]);
        int iv = inv(a[r][c]);
        for (int& x : a[r])
            x = x * iv % p;
        for (int i = 0; i < int(a.size()); ++i)
            if (i != r && a[i][c]) {
                int f = a[i][c];
                for (int j = 0; j < cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
            }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<std::vector<int>> ns;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<int> v(cols, 0);
        v[f] = 1;
        for (int i = 0; i < r; ++i)
            v[piv[i]] = (p - a[i][f]) % p;
        ns.push_back(v);
    }
    return ns;
}

class Enumerator {
public:
    Enumerator(const DieudonneModule& D, const FlagSink& sink, EnumOptions opt)
        : D_(D), K_(D.K()), sink_(sink), opt_(opt), g_(D.g), n_(2 * D.g)
    {
        eigen_ = p_rank_mod(D) > 0;
        C_ = Mat(0, n_);
    }

    std::size_t run()
    {
        step();
        return count_;
    }

private:
    void step();
    void lines_in(const Mat& basis, int m, std::vector<Vec>& out) const;
    void eigen_lines(const Mat& M, int twist, const Mat& S, int m, std::set<Vec>& out) const;
    Vec normalized(const Elem* v, int m) const;

    const DieudonneModule& D_;
    const Field& K_;
    const FlagSink& sink_;
    EnumOptions opt_;
    int g_, n_;
    bool eigen_ = false;
    Mat C_;
    std::size_t count_ = 0;
};

Vec Enumerator::normalized(const Elem* v, int m) const
{
    Vec out{};
    int c = 0;
    while (c < m && !v[c])
        ++c;
    Elem s = K_.inv(v[c]);
    for (int j = 0; j < m; ++j)
        out[j] = K_.mul(s, v[j]);
    return out;
}

// Every line of the span of an rref basis, normalized by its pivot.
void Enumerator::lines_in(const Mat& basis, int m, std::vector<Vec>& out) const
{
    int d = basis.rows, q = K_.q();
    for (int t = 0; t < d; ++t) {
        int rest = d - 1 - t;
        long long total = 1;
        for (int s = 0; s < rest; ++s)
            total *= q;
        for (long long code = 0; code < total; ++code) {
            Vec v{};
            for (int j = 0; j < m; ++j)
                v[j] = basis(t, j);
            long long c = code;
            for (int s = t + 1; s < d; ++s) {
                Elem x = Elem(c % q);
                c /= q;
                if (x)
                    K_.axpy(v.data(), basis.row(s), m, x);
            }
            out.push_back(v);
        }
    }
}

// Lines v in span(S) with M sigma^twist(v) = a v, a != 0.
void Enumerator::eigen_lines(const Mat& M, int twist, const Mat& S, int m, std::set<Vec>& out) const
{
    int d = S.rows, k = K_.k(), p = K_.p();
    if (d == 0)
        return;
    Mat St = frob(K_, S, twist);
    std::vector<Vec> f(d);
    for (int s = 0; s < d; ++s) {
        f[s] = Vec{};
        mat_vec(K_, M, St.row(s), f[s].data());
    }
    Elem gamma = K_.generator();
    Elem a = 1;
    for (int rep = 0; rep < p - 1; ++rep, a = K_.mul(a, gamma)) {
        int cols = d * k;
        std::vector<std::vector<int>> sys(m * k, std::vector<int>(cols, 0));
        for (int s = 0; s < d; ++s)
            for (int l = 0; l < k; ++l) {
                Elem b = K_.basis_elem(l);
                Elem bt = K_.frob(b, twist);
                Elem ab = K_.mul(a, b);
                for (int j = 0; j < m; ++j) {
                    Elem e = K_.sub(K_.mul(bt, f[s][j]), K_.mul(ab, S(s, j)));
                    for (int dgt = 0; dgt < k; ++dgt)
                        sys[j * k + dgt][s * k + l] = K_.digit(e, dgt);
                }
            }
        auto ns = fp_nullspace(sys, cols, p);
        int r = int(ns.size());
        long long total = 1;
        for (int i = 0; i < r; ++i)
            total *= p;
        std::vector<int> x(cols), digits(k);
        for (long long code = 1; code < total; ++code) {
            std::fill(x.begin(), x.end(), 0);
            long long c = code;
            for (int i = 0; i < r; ++i) {
                int coef = int(c % p);
                c /= p;
                for (int j = 0; j < cols; ++j)
                    x[j] = (x[j] + coef * ns[i][j]) % p;
            }
            Vec v{};
            for (int s = 0; s < d; ++s) {
                for (int l = 0; l < k; ++l)
                    digits[l] = x[s * k + l];
                Elem t = K_.from_digits(digits.data());
                if (t)
                    K_.axpy(v.data(), S.row(s), m, t);
            }
            bool zero = true;
            for (int j = 0; j < m; ++j)
                zero = zero && !v[j];
            if (!zero)
                out.insert(normalized(v.data(), m));
        }
    }
}

void Enumerator::step()
{
    int done = C_.rows;
    if (done == g_) {
        ++count_;
        sink_(SymplecticFlag{g_, C_});
        return;
    }
    const Field& K = K_;
    const Mat& G = D_.form.gram;

    // Complement U of W in W^perp; quotient coordinates via Q = H^{-1} U G.
    Mat P = done ? nullspace(K, mul(K, C_, G)) : Mat::identity(n_);
    Mat E = C_;
    rref(K, E);
    Mat U(0, n_);
    for (int r = 0; r < P.rows; ++r)
        if (echelon_insert(K, E, P.row(r)))
            U.append_row(P.row(r));
    int m = U.rows;
    if (m != n_ - 2 * done)
        throw std::logic_error("enumerate_stable: flag step is not isotropic");
    Mat Ut = transpose(U);
    Mat UG = mul(K, U, G);
    auto Hinv = inverse(K, mul(K, UG, Ut));
    if (!Hinv)
        throw std::logic_error("enumerate_stable: degenerate quotient");
    Mat Q = mul(K, *Hinv, UG);
    Mat Abar = mul(K, Q, mul(K, D_.F.A, frob(K, Ut, 1)));
    Mat Bbar = mul(K, Q, mul(K, D_.V.A, frob(K, Ut, -1)));

    Mat kerF = frob(K, nullspace(K, Abar), -1);
    Mat kerV = frob(K, nullspace(K, Bbar), 1);
    Subspace nil = intersect(K, Subspace::span(K, kerF), Subspace::span(K, kerV));

    std::vector<Vec> cand;
    lines_in(nil.basis(), m, cand);
    if (eigen_) {
        std::set<Vec> eig;
        eigen_lines(Abar, 1, kerV, m, eig);
        eigen_lines(Bbar, -1, kerF, m, eig);
        cand.insert(cand.end(), eig.begin(), eig.end());
    }

    long long idx = 0;
    for (const Vec& v : cand) {
        if (done == 0 && (idx++ % opt_.shards) != opt_.shard)
            continue;
        Elem c[kMaxDim] = {0};
        for (int j = 0; j < m; ++j)
            if (v[j])
                K.axpy(c, U.row(j), n_, v[j]);
        C_.append_row(c);
        step();
        --C_.rows;
    }
}

}  // namespace

std::size_t enumerate_stable(const DieudonneModule& D, const FlagSink& sink, EnumOptions opt)
{
    if (opt.shards < 1 || opt.shard < 0 || opt.shard >= opt.shards)
        throw std::invalid_argument("enumerate_stable: bad shard");
    auto val = validate(D);
    if (!val.ok)
        throw std::invalid_argument("enumerate_stable: invalid module: " + val.failure);
    Enumerator e(D, sink, opt);
    return e.run();
}

std::vector<SymplecticFlag> enumerate_stable(const SignedPerm& w, FieldPtr field)
{
    std::vector<SymplecticFlag> out;
    enumerate_stable(standard_module(w, field), [&](const SymplecticFlag& f) { out.push_back(f); });
    return out;
}

}  // namespace iwahori
