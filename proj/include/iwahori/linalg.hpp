#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/field.hpp"

namespace iwahori {

// Ambient dimension bound: 2g <= 8, so g <= 4.
constexpr int kMaxDim = 8;

// Dense matrix with fixed 8x8 storage; row stride is always kMaxDim so
// each row is a contiguous 8-byte span handed to the field kernels.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::array<Elem, kMaxDim * kMaxDim> a{};

    Mat() = default;
    Mat(int r, int c);
    static Mat identity(int n);

    Elem& operator()(int i, int j) { return a[i * kMaxDim + j]; }
    Elem operator()(int i, int j) const { return a[i * kMaxDim + j]; }
    Elem* row(int i) { return &a[i * kMaxDim]; }
    const Elem* row(int i) const { return &a[i * kMaxDim]; }
    bool is_zero() const;
    void append_row(const Elem* v);
};

bool operator==(const Mat& x, const Mat& y);
inline bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

Mat transpose(const Mat& m);
Mat mul(const Field& F, const Mat& x, const Mat& y);
Mat add(const Field& F, const Mat& x, const Mat& y);
Mat neg(const Field& F, const Mat& x);
Mat frob(const Field& F, const Mat& x, int e);
// y = A x for a column vector x of length A.cols.
void mat_vec(const Field& F, const Mat& A, const Elem* x, Elem* y);

// Reduced row echelon form in place; zero rows are dropped. Returns the rank.
int rref(const Field& F, Mat& m, int* pivots = nullptr);
int rank(const Field& F, Mat m);
// Rows form a basis of {x : m x = 0}, in reduced echelon form.
Mat nullspace(const Field& F, const Mat& m);
std::optional<Mat> inverse(const Field& F, const Mat& m);
Elem det(const Field& F, Mat m);

// Reduce v against an rref matrix E and, when nonzero, insert it keeping E
// in reduced echelon form. Returns true if v was independent of E.
bool echelon_insert(const Field& F, Mat& E, const Elem* v);
// Reduce v in place modulo the rows of an rref matrix.
void echelon_reduce(const Field& F, const Mat& E, Elem* v);

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int n) : basis_(0, n) {}
    static Subspace full(int n);
    static Subspace span(const Field& F, const Mat& rows);

    int ambient() const { return basis_.cols; }
    int dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }

    bool contains(const Field& F, const Elem* v) const;
    bool contains(const Field& F, const Subspace& w) const;
    std::string key() const;

    friend bool operator==(const Subspace& x, const Subspace& y) { return x.basis_ == y.basis_; }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

private:
    Mat basis_;
};

Subspace sum(const Field& F, const Subspace& x, const Subspace& y);
Subspace intersect(const Field& F, const Subspace& x, const Subspace& y);
// {x : v . x = 0 for all v in W} for the plain dot product.
Subspace annihilator(const Field& F, const Subspace& w);

// v -> A sigma^e(v), sigma the p-power Frobenius applied entrywise.
struct SemilinearMap {
    Mat A;
    int twist = 0;

    void apply(const Field& F, const Elem* v, Elem* out) const;
    Subspace apply(const Field& F, const Subspace& w) const;
    Subspace image(const Field& F) const;
    Subspace kernel(const Field& F) const;
    Subspace preimage(const Field& F, const Subspace& w) const;
    int rank(const Field& F) const { return iwahori::rank(F, A); }
};

// phi o psi: v -> A sigma^a(B sigma^b v) = A sigma^a(B) sigma^{a+b}(v).
SemilinearMap compose(const Field& F, const SemilinearMap& phi, const SemilinearMap& psi);

// Alternating form <x,y> = x^t G y.
struct SymplecticForm {
    Mat gram;

    // <e_i, e_{g+j}> = delta_ij, <e_{g+j}, e_i> = -delta_ij, zero otherwise.
    static SymplecticForm standard(const Field& F, int g);
    Elem pair(const Field& F, const Elem* x, const Elem* y) const;
    Subspace perp(const Field& F, const Subspace& w) const;
    bool alternating(const Field& F) const;
    bool nondegenerate(const Field& F) const;
};

}  // namespace iwahori
