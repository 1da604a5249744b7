#include <stdexcept>

#include "iwahori/flags.hpp"

namespace iwahori {

namespace {

// Coordinates relative to the flag basis c_1..c_2g: there W_i is spanned by
// the first i unit vectors, and z_i = V(c_i).
struct Frame {
    int n = 0;
    Mat C;  // rows c_i
    Mat Z;  // rows z_i in c-coordinates
};

Frame make_frame(const DieudonneModule& D, const SymplecticFlag& f)
{
    const Field& K = D.K();
    Frame fr;
    fr.n = 2 * f.g;
    fr.C = f.full_basis(K, D.form);
    auto Pinv = inverse(K, transpose(fr.C));
    if (!Pinv)
        throw KrError("kr_type: flag basis is singular");
    fr.Z = Mat(fr.n, fr.n);
    Elem y[kMaxDim];
    for (int i = 0; i < fr.n; ++i) {
        D.V.apply(K, fr.C.row(i), y);
        mat_vec(K, *Pinv, y, fr.Z.row(i));
    }
    return fr;
}

// Echelon on reversed coordinates: the pivot of a row is its last nonzero
// entry, i.e. the least j with the vector in W_j.
struct LevelEchelon {
    int n;
    Mat E;
    explicit LevelEchelon(int n_) : n(n_), E(0, n_) {}

    void reversed(const Elem* v, Elem* out) const
    {
        for (int j = 0; j < n; ++j)
            out[j] = v[n - 1 - j];
    }
    // Level (1-based) gained by adding v, or 0 if v is dependent.
    int insert(const Field& K, const Elem* v)
    {
        Elem r[kMaxDim] = {0};
        reversed(v, r);
        echelon_reduce(K, E, r);
        int c = 0;
        while (c < n && !r[c])
            ++c;
        if (c == n)
            return 0;
        echelon_insert(K, E, r);
        return n - c;
    }
    bool has_level(int level) const
    {
        int c = n - level;
        for (int i = 0; i < E.rows; ++i) {
            int pc = 0;
            while (!E(i, pc))
                ++pc;
            if (pc == c)
                return true;
        }
        return false;
    }
    // The echelon row with the given level, in original coordinates.
    void row_at(int level, Elem* out) const
    {
        int c = n - level;
        for (int i = 0; i < E.rows; ++i) {
            int pc = 0;
            while (!E(i, pc))
                ++pc;
            if (pc == c) {
                reversed(E.row(i), out);
                return;
            }
        }
        throw std::logic_error("LevelEchelon: level absent");
    }
};

bool lambda_ok(const AffineElement& x, int n)
{
    if (int(x.lambda.size()) != n || x.omega.g() * 2 != n || !x.omega.valid())
        return false;
    for (int i = 0; i < n; ++i) {
        if (x.lambda[i] != 0 && x.lambda[i] != 1)
            return false;
        if (x.lambda[i] + x.lambda[n - 1 - i] != 1)
            return false;
    }
    return true;
}

int last_nonzero(const Elem* v, int n)
{
    for (int j = n - 1; j >= 0; --j)
        if (v[j])
            return j;
    return -1;
}

// Conditions (1)-(4) in c-coordinates, where W_i = span(e_1..e_i).
bool check_in_frame(const Field& K, const Frame& fr, const AffineElement& x, const Mat& eps)
{
    int n = fr.n;
    if (!lambda_ok(x, n))
        return false;
    if (eps.rows != n || rank(K, eps) != n)
        return false;
    for (int i = 0; i < n; ++i)
        if (last_nonzero(eps.row(i), n) != i)
            return false;
    Mat Vi(0, n);
    for (int i = 1; i <= n; ++i) {
        Subspace before = Subspace::span(K, Vi);
        bool jump = echelon_insert(K, Vi, fr.Z.row(i - 1));
        if (!jump)
            continue;
        const Elem* e = eps.row(x.omega(i) - 1);
        Subspace after = Subspace::span(K, Vi);
        if (!after.contains(K, e) || before.contains(K, e))
            return false;
    }
    Mat lam0(0, n);
    for (int i = 0; i < n; ++i)
        if (x.lambda[i] == 0)
            lam0.append_row(eps.row(i));
    return Subspace::span(K, lam0) == Subspace::span(K, Vi) && lam0.rows == Vi.rows;
}

AffineElement type_from_frame(const Field& K, const Frame& fr)
{
    int n = fr.n;
    LevelEchelon le(n);
    std::vector<int> om(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        om[i] = le.insert(K, fr.Z.row(i - 1));
    std::vector<int> lambda(n, 1);
    for (int j = 1; j <= n; ++j)
        if (le.has_level(j))
            lambda[j - 1] = 0;
    std::vector<int> full = om;
    for (int i = 1; i <= n; ++i) {
        int o = om[n + 1 - i];
        if (!o)
            continue;
        if (full[i] && full[i] != n + 1 - o)
            throw KrError("kr_type: omega completion conflicts at " + std::to_string(i));
        full[i] = n + 1 - o;
    }
    SignedPerm w;
    for (int i = 1; i <= n; ++i) {
        if (!full[i])
            throw KrError("kr_type: omega undetermined at " + std::to_string(i));
        w.images.push_back(full[i]);
    }
    if (!w.valid())
        throw KrError("kr_type: completed omega is not a signed permutation");
    AffineElement x{lambda, w};
    if (!lambda_ok(x, n) || x.similitude() != 1)
        throw KrError("kr_type: lambda is not a 0/1 coweight of similitude 1");
    return x;
}

bool verify_in_frame(const Field& K, const Frame& fr, const AffineElement& x)
{
    int n = fr.n;
    if (!lambda_ok(x, n) || x.similitude() != 1)
        return false;
    LevelEchelon le(n);
    Mat eps(n, n);
    std::vector<bool> set(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        int level = x.omega(i);
        bool had = le.has_level(level);
        if (!le.insert(K, fr.Z.row(i - 1)))
            continue;
        if (had || !le.has_level(level) || set[level])
            return false;
        le.row_at(level, eps.row(level - 1));
        set[level] = true;
    }
    for (int j = 1; j <= n; ++j)
        if (!set[j])
            eps(j - 1, j - 1) = 1;
    return check_in_frame(K, fr, x, eps);
}

}  // namespace

AffineElement kr_type(const DieudonneModule& D, const SymplecticFlag& f)
{
    return type_from_frame(D.K(), make_frame(D, f));
}

bool verify_kr_basis(const DieudonneModule& D, const SymplecticFlag& f, const AffineElement& x)
{
    if (x.g() != f.g)
        return false;
    return verify_in_frame(D.K(), make_frame(D, f), x);
}

KrResult kr_type_checked(const DieudonneModule& D, const SymplecticFlag& f)
{
    Frame fr = make_frame(D, f);
    KrResult r;
    r.x = type_from_frame(D.K(), fr);
    r.verified = verify_in_frame(D.K(), fr, r.x);
    return r;
}

bool check_kr_basis(const DieudonneModule& D, const SymplecticFlag& f, const AffineElement& x, const Mat& eps)
{
    const Field& K = D.K();
    int n = 2 * f.g;
    if (!lambda_ok(x, n) || x.similitude() != 1)
        return false;
    if (eps.rows != n || eps.cols != n || rank(K, eps) != n)
        return false;
    auto prefix = [&](int i) {
        Mat m(0, n);
        for (int r = 0; r < i; ++r)
            m.append_row(eps.row(r));
        return Subspace::span(K, m);
    };
    for (int i = 1; i <= n; ++i)
        if (prefix(i) != f.step(K, D.form, i))
            return false;
    for (int i = 1; i <= n; ++i) {
        Subspace lo = D.V.apply(K, f.step(K, D.form, i - 1));
        Subspace hi = D.V.apply(K, f.step(K, D.form, i));
        if (lo == hi)
            continue;
        Mat line(0, n);
        line.append_row(eps.row(x.omega(i) - 1));
        Subspace l = Subspace::span(K, line);
        if (hi != sum(K, lo, l) || hi.dim() != lo.dim() + 1)
            return false;
    }
    Mat lam0(0, n);
    for (int i = 0; i < n; ++i)
        if (x.lambda[i] == 0)
            lam0.append_row(eps.row(i));
    Subspace imv = D.V.image(K);
    return Subspace::span(K, lam0) == imv && lam0.rows == imv.dim();
}

}  // namespace iwahori
