#include <stdexcept>

#include "iwahori/flags.hpp"

namespace iwahori {

namespace {

Mat first_rows(const Mat& m, int r)
{
    Mat out = m;
    for (int i = r; i < m.rows; ++i)
        for (int j = 0; j < kMaxDim; ++j)
            out(i, j) = 0;
    out.rows = r;
    return out;
}

}  // namespace

Subspace SymplecticFlag::step(const Field& K, const SymplecticForm& form, int i) const
{
    int n = 2 * g;
    if (i < 0 || i > n)
        throw std::out_of_range("SymplecticFlag::step");
    if (i <= g)
        return Subspace::span(K, first_rows(basis, i));
    return form.perp(K, Subspace::span(K, first_rows(basis, n - i)));
}

Mat SymplecticFlag::full_basis(const Field& K, const SymplecticForm& form) const
{
    int n = 2 * g;
    // S d = e_l with S = C G; solve on g independent columns of S.
    Mat S = mul(K, basis, form.gram);
    Mat R = S;
    int piv[kMaxDim];
    if (rref(K, R, piv) != g)
        throw std::invalid_argument("full_basis: basis rows are dependent");
    Mat Sp(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            Sp(i, j) = S(i, piv[j]);
    auto Spi = inverse(K, Sp);
    if (!Spi)
        throw std::logic_error("full_basis: pivot block singular");
    Mat C(n, n);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < n; ++j)
            C(i, j) = basis(i, j);
    // d_l is column l of Sp^{-1} spread over the pivot columns; c_{2g+1-l} = d_l.
    for (int l = 0; l < g; ++l) {
        int r = n - 1 - l;
        for (int j = 0; j < g; ++j)
            C(r, piv[j]) = (*Spi)(j, l);
    }
    return C;
}

std::vector<Mat> SymplecticFlag::echelon(const Field& K) const
{
    std::vector<Mat> out;
    for (int i = 1; i <= g; ++i) {
        Mat m = first_rows(basis, i);
        rref(K, m);
        out.push_back(m);
    }
    return out;
}

std::string SymplecticFlag::key(const Field& K) const
{
    std::string k;
    for (const auto& m : echelon(K))
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                k.push_back(char(m(i, j)));
    return k;
}

bool SymplecticFlag::isotropic(const Field& K, const SymplecticForm& form) const
{
    if (rank(K, basis) != g)
        return false;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (form.pair(K, basis.row(i), basis.row(j)))
                return false;
    return true;
}

bool is_stable(const DieudonneModule& D, const SymplecticFlag& f)
{
    const Field& K = D.K();
    if (!f.isotropic(K, D.form))
        return false;
    for (int i = 1; i <= f.g; ++i) {
        Subspace w = f.step(K, D.form, i);
        if (!w.contains(K, D.F.apply(K, w)) || !w.contains(K, D.V.apply(K, w)))
            return false;
    }
    return true;
}

}  // namespace iwahori
