#include "iwahori/linalg.hpp"

#include <stdexcept>

namespace iwahori {

Mat::Mat(int r, int c) : rows(r), cols(c)
{
    if (r < 0 || c < 0 || r > kMaxDim || c > kMaxDim)
        throw std::invalid_argument("Mat: shape exceeds 8x8");
}

Mat Mat::identity(int n)
{
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const
{
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if ((*this)(i, j))
                return false;
    return true;
}

void Mat::append_row(const Elem* v)
{
    if (rows >= kMaxDim)
        throw std::length_error("Mat: too many rows");
    for (int j = 0; j < kMaxDim; ++j)
        a[rows * kMaxDim + j] = j < cols ? v[j] : 0;
    ++rows;
}

bool operator==(const Mat& x, const Mat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        return false;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (x(i, j) != y(i, j))
                return false;
    return true;
}

Mat transpose(const Mat& m)
{
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            t(j, i) = m(i, j);
    return t;
}

Mat mul(const Field& F, const Mat& x, const Mat& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("mul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int l = 0; l < x.cols; ++l)
            F.axpy(r.row(i), y.row(l), y.cols, x(i, l));
    return r;
}

Mat add(const Field& F, const Mat& x, const Mat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("add: shape mismatch");
    Mat r = x;
    for (int i = 0; i < x.rows; ++i)
        F.axpy(r.row(i), y.row(i), x.cols, 1);
    return r;
}

Mat neg(const Field& F, const Mat& x)
{
    Mat r = x;
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            r(i, j) = F.neg(x(i, j));
    return r;
}

Mat frob(const Field& F, const Mat& x, int e)
{
    Mat r(x.rows, x.cols);
    F.frob_span(r.a.data(), x.a.data(), r.a.size(), e);
    return r;
}

void mat_vec(const Field& F, const Mat& A, const Elem* x, Elem* y)
{
    for (int i = 0; i < A.rows; ++i) {
        Elem s = 0;
        const Elem* r = A.row(i);
        for (int j = 0; j < A.cols; ++j)
            if (x[j])
                s = F.add(s, F.mul(r[j], x[j]));
        y[i] = s;
    }
}

int rref(const Field& F, Mat& m, int* pivots)
{
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < kMaxDim; ++j)
                std::swap(m(piv, j), m(r, j));
        F.scale(m.row(r), m.cols, F.inv(m(r, c)));
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m(i, c))
                F.axpy(m.row(i), m.row(r), m.cols, F.neg(m(i, c)));
        if (pivots)
            pivots[r] = c;
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        for (int j = 0; j < kMaxDim; ++j)
            m(i, j) = 0;
    m.rows = r;
    return r;
}

int rank(const Field& F, Mat m)
{
    return rref(F, m);
}

Mat nullspace(const Field& F, const Mat& m)
{
    Mat e = m;
    int piv[kMaxDim];
    int r = rref(F, e, piv);
    bool is_piv[kMaxDim] = {false};
    for (int i = 0; i < r; ++i)
        is_piv[piv[i]] = true;
    Mat ns(0, m.cols);
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f])
            continue;
        Elem v[kMaxDim] = {0};
        v[f] = 1;
        for (int i = 0; i < r; ++i)
            v[piv[i]] = F.neg(e(i, f));
        ns.append_row(v);
    }
    rref(F, ns);
    return ns;
}

std::optional<Mat> inverse(const Field& F, const Mat& m)
{
    if (m.rows != m.cols)
        return std::nullopt;
    int n = m.rows;
    Mat a = m, inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            return std::nullopt;
        if (piv != c)
            for (int j = 0; j < kMaxDim; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Elem s = F.inv(a(c, c));
        F.scale(a.row(c), n, s);
        F.scale(inv.row(c), n, s);
        for (int i = 0; i < n; ++i)
            if (i != c && a(i, c)) {
                Elem f = F.neg(a(i, c));
                F.axpy(a.row(i), a.row(c), n, f);
                F.axpy(inv.row(i), inv.row(c), n, f);
            }
    }
    return inv;
}

Elem det(const Field& F, Mat m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("det: not square");
    int n = m.rows;
    Elem d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != c) {
            for (int j = 0; j < kMaxDim; ++j)
                std::swap(m(piv, j), m(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(c, c));
        Elem s = F.inv(m(c, c));
        for (int i = c + 1; i < n; ++i)
            if (m(i, c))
                F.axpy(m.row(i), m.row(c), n, F.neg(F.mul(m(i, c), s)));
    }
    return d;
}

void echelon_reduce(const Field& F, const Mat& E, Elem* v)
{
    for (int i = 0; i < E.rows; ++i) {
        const Elem* r = E.row(i);
        int c = 0;
        while (!r[c])
            ++c;
        if (v[c])
            F.axpy(v, r, E.cols, F.neg(v[c]));
    }
}

bool echelon_insert(const Field& F, Mat& E, const Elem* v)
{
    Elem w[kMaxDim] = {0};
    for (int j = 0; j < E.cols; ++j)
        w[j] = v[j];
    echelon_reduce(F, E, w);
    int c = 0;
    while (c < E.cols && !w[c])
        ++c;
    if (c == E.cols)
        return false;
    F.scale(w, E.cols, F.inv(w[c]));
    for (int i = 0; i < E.rows; ++i)
        if (E(i, c))
            F.axpy(E.row(i), w, E.cols, F.neg(E(i, c)));
    // Keep rows ordered by pivot column.
    int pos = E.rows;
    for (int i = 0; i < E.rows; ++i) {
        int pc = 0;
        while (!E(i, pc))
            ++pc;
        if (pc > c) {
            pos = i;
            break;
        }
    }
    E.append_row(w);
    for (int i = E.rows - 1; i > pos; --i)
        for (int j = 0; j < kMaxDim; ++j)
            std::swap(E(i, j), E(i - 1, j));
    return true;
}

Subspace Subspace::full(int n)
{
    Subspace s;
    s.basis_ = Mat::identity(n);
    return s;
}

Subspace Subspace::span(const Field& F, const Mat& rows)
{
    Subspace s(rows.cols);
    s.basis_ = rows;
    rref(F, s.basis_);
    return s;
}

bool Subspace::contains(const Field& F, const Elem* v) const
{
    Elem w[kMaxDim] = {0};
    for (int j = 0; j < ambient(); ++j)
        w[j] = v[j];
    echelon_reduce(F, basis_, w);
    for (int j = 0; j < ambient(); ++j)
        if (w[j])
            return false;
    return true;
}

bool Subspace::contains(const Field& F, const Subspace& w) const
{
    for (int i = 0; i < w.dim(); ++i)
        if (!contains(F, w.basis().row(i)))
            return false;
    return true;
}

std::string Subspace::key() const
{
    std::string k;
    k.push_back(char(basis_.rows));
    k.push_back(char(basis_.cols));
    for (int i = 0; i < basis_.rows; ++i)
        for (int j = 0; j < basis_.cols; ++j)
            k.push_back(char(basis_(i, j)));
    return k;
}

Subspace sum(const Field& F, const Subspace& x, const Subspace& y)
{
    Mat e = x.basis();
    for (int i = 0; i < y.dim(); ++i)
        echelon_insert(F, e, y.basis().row(i));
    return Subspace::span(F, e);
}

Subspace annihilator(const Field& F, const Subspace& w)
{
    Mat b = w.basis();
    if (b.rows == 0)
        return Subspace::full(w.ambient());
    return Subspace::span(F, nullspace(F, b));
}

Subspace intersect(const Field& F, const Subspace& x, const Subspace& y)
{
    return annihilator(F, sum(F, annihilator(F, x), annihilator(F, y)));
}

void SemilinearMap::apply(const Field& F, const Elem* v, Elem* out) const
{
    Elem s[kMaxDim];
    for (int j = 0; j < A.cols; ++j)
        s[j] = F.frob(v[j], twist);
    mat_vec(F, A, s, out);
}

Subspace SemilinearMap::apply(const Field& F, const Subspace& w) const
{
    Mat img(0, A.rows);
    Elem out[kMaxDim];
    for (int i = 0; i < w.dim(); ++i) {
        apply(F, w.basis().row(i), out);
        echelon_insert(F, img, out);
    }
    return Subspace::span(F, img);
}

Subspace SemilinearMap::image(const Field& F) const
{
    return Subspace::span(F, transpose(A));
}

Subspace SemilinearMap::kernel(const Field& F) const
{
    // A sigma^e(x) = 0  <=>  x in sigma^{-e}(null A).
    return Subspace::span(F, frob(F, nullspace(F, A), -twist));
}

Subspace SemilinearMap::preimage(const Field& F, const Subspace& w) const
{
    Subspace ann = annihilator(F, w);
    if (ann.dim() == 0)
        return Subspace::full(A.cols);
    Mat cond = mul(F, ann.basis(), A);
    return Subspace::span(F, frob(F, nullspace(F, cond), -twist));
}

SemilinearMap compose(const Field& F, const SemilinearMap& phi, const SemilinearMap& psi)
{
    return {mul(F, phi.A, frob(F, psi.A, phi.twist)), phi.twist + psi.twist};
}

SymplecticForm SymplecticForm::standard(const Field& F, int g)
{
    if (g < 1 || 2 * g > kMaxDim)
        throw std::invalid_argument("SymplecticForm::standard: g out of range");
    SymplecticForm f;
    f.gram = Mat(2 * g, 2 * g);
    for (int i = 0; i < g && g + i < kMaxDim; ++i) {
        f.gram(i, g + i) = 1;
        f.gram(g + i, i) = F.neg(1);
    }
    return f;
}

Elem SymplecticForm::pair(const Field& F, const Elem* x, const Elem* y) const
{
    Elem gy[kMaxDim];
    mat_vec(F, gram, y, gy);
    Elem s = 0;
    for (int i = 0; i < gram.rows; ++i)
        if (x[i])
            s = F.add(s, F.mul(x[i], gy[i]));
    return s;
}

Subspace SymplecticForm::perp(const Field& F, const Subspace& w) const
{
    if (w.dim() == 0)
        return Subspace::full(gram.rows);
    return Subspace::span(F, nullspace(F, mul(F, w.basis(), gram)));
}

bool SymplecticForm::alternating(const Field& F) const
{
    for (int i = 0; i < gram.rows; ++i) {
        if (gram(i, i))
            return false;
        for (int j = 0; j < gram.cols; ++j)
            if (gram(i, j) != F.neg(gram(j, i)))
                return false;
    }
    return true;
}

bool SymplecticForm::nondegenerate(const Field& F) const
{
    return gram.rows == gram.cols && rank(F, gram) == gram.rows;
}

}  // namespace iwahori
