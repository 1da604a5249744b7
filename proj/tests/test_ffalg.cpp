#include <random>

#include "doctest.h"
#include "iwahori/field.hpp"
#include "iwahori/kernels.hpp"
#include "iwahori/linalg.hpp"

using namespace iwahori;

namespace {

// Schoolbook product of digit vectors reduced by the modulus.
Elem slow_mul(const Field& K, Elem a, Elem b)
{
    int p = K.p(), k = K.k();
    std::vector<int> x(k), y(k), z(2 * k, 0);
    for (int i = 0; i < k; ++i) {
        x[i] = K.digit(a, i);
        y[i] = K.digit(b, i);
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    const auto& f = K.modulus();
    for (int d = 2 * k - 1; d >= k; --d) {
        int c = z[d];
        if (!c)
            continue;
        for (int i = 0; i <= k; ++i)
            z[d - k + i] = ((z[d - k + i] - c * f[i]) % p + p) % p;
    }
    return K.from_digits(z.data());
}

int order(const Field& K, Elem a)
{
    Elem x = a;
    int n = 1;
    while (x != 1) {
        x = K.mul(x, a);
        ++n;
    }
    return n;
}

// Evaluate a polynomial (lowest degree first) at a.
Elem eval(const Field& K, const std::vector<int>& f, Elem a)
{
    Elem r = 0;
    for (int i = int(f.size()) - 1; i >= 0; --i)
        r = K.add(K.mul(r, a), K.from_int(f[i]));
    return r;
}

const std::vector<std::pair<int, int>> kFields{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                               {3, 2}, {5, 1}, {5, 2}, {7, 2}, {2, 8}, {3, 5}};

}  // namespace

TEST_CASE("field multiplication matches polynomial arithmetic")
{
    for (auto [p, k] : kFields) {
        auto K = Field::get(p, k);
        int step = K->q() > 64 ? 7 : 1;
        for (int a = 0; a < K->q(); a += step)
            for (int b = 0; b < K->q(); ++b)
                REQUIRE(K->mul(Elem(a), Elem(b)) == slow_mul(*K, Elem(a), Elem(b)));
    }
}

TEST_CASE("field axioms")
{
    for (auto [p, k] : kFields) {
        auto K = Field::get(p, k);
        int q = K->q();
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            REQUIRE(K->add(Elem(a), K->neg(Elem(a))) == 0);
            REQUIRE(K->sub(Elem(a), Elem(a)) == 0);
            if (a) {
                REQUIRE(K->mul(Elem(a), K->inv(Elem(a))) == 1);
                REQUIRE(K->pow(Elem(a), q - 1) == 1);
            }
            // Frobenius is additive and k-periodic
            REQUIRE(K->frob(Elem(a), k) == Elem(a));
            REQUIRE(K->frob(K->frob(Elem(a), 1), -1) == Elem(a));
            REQUIRE(K->frob(Elem(a), 1) == K->pow(Elem(a), p));
        }
        std::mt19937 rng(q);
        for (int t = 0; t < 2000; ++t) {
            Elem a = Elem(rng() % q), b = Elem(rng() % q), c = Elem(rng() % q);
            REQUIRE(K->mul(a, K->add(b, c)) == K->add(K->mul(a, b), K->mul(a, c)));
            REQUIRE(K->mul(K->mul(a, b), c) == K->mul(a, K->mul(b, c)));
            REQUIRE(K->add(K->add(a, b), c) == K->add(a, K->add(b, c)));
            REQUIRE(K->frob(K->add(a, b), 1) == K->add(K->frob(a, 1), K->frob(b, 1)));
        }
        CHECK_THROWS(K->inv(0));
    }
}

TEST_CASE("tabulated moduli are primitive and compatible")
{
    for (auto [p, k] : kFields) {
        auto K = Field::get(p, k);
        CAPTURE(K->q());
        CHECK(order(*K, K->generator()) == K->q() - 1);
        CHECK(eval(*K, K->modulus(), K->generator()) == 0);
        // the norm of the generator to each subfield is a root of that
        // subfield's modulus
        for (int d = 1; d < k; ++d) {
            if (k % d)
                continue;
            long long qd = 1;
            for (int i = 0; i < d; ++i)
                qd *= p;
            Elem n = K->pow(K->generator(), (K->q() - 1) / (qd - 1));
            CHECK(eval(*K, conway_modulus(p, d), n) == 0);
        }
    }
}

TEST_CASE("Conway polynomials, frozen from the standard tables")
{
    CHECK(conway_modulus(2, 2) == std::vector<int>{1, 1, 1});
    CHECK(conway_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});
    CHECK(conway_modulus(2, 4) == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(conway_modulus(2, 8) == std::vector<int>{1, 0, 1, 1, 1, 0, 0, 0, 1});
    CHECK(conway_modulus(3, 2) == std::vector<int>{2, 2, 1});
    CHECK(conway_modulus(5, 2) == std::vector<int>{2, 4, 1});
    CHECK(conway_modulus(3, 5) == std::vector<int>{1, 2, 0, 0, 0, 1});
}

TEST_CASE("field lookup rejects what it cannot build")
{
    CHECK_THROWS_AS(Field::get(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::get(2, 9), std::invalid_argument);
    CHECK(Field::get(2, 3) == Field::get(2, 3));
}

TEST_CASE("subfield embedding is a ring map")
{
    auto small = Field::get(2, 2), big = Field::get(2, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Elem ea = embed(*small, *big, Elem(a)), eb = embed(*small, *big, Elem(b));
            CHECK(big->in_subfield(ea, 2));
            CHECK(embed(*small, *big, small->mul(Elem(a), Elem(b))) == big->mul(ea, eb));
            CHECK(embed(*small, *big, small->add(Elem(a), Elem(b))) == big->add(ea, eb));
        }
}

TEST_CASE("byte kernels agree between scalar and AVX2")
{
    const auto* vec = kernels::avx2();
    if (!vec) {
        MESSAGE("AVX2 unavailable, comparing the active table only");
        vec = &kernels::active();
    }
    const auto& ref = kernels::scalar();
    auto K = Field::get(2, 8);
    std::mt19937 rng(7);
    std::vector<std::uint8_t> src(300), a(300), b(300);
    for (int n : {0, 1, 7, 15, 16, 17, 31, 32, 33, 64, 100, 255, 300}) {
        for (auto& x : src)
            x = std::uint8_t(rng());
        for (int c = 0; c < 256; c += 5) {
            const std::uint8_t* tbl = K->nibble_mul(Elem(c));
            ref.map(a.data(), src.data(), n, tbl);
            vec->map(b.data(), src.data(), n, tbl);
            REQUIRE(std::equal(a.begin(), a.begin() + n, b.begin()));
            // map_xor on top of the same destination
            ref.map_xor(a.data(), src.data(), n, tbl);
            vec->map_xor(b.data(), src.data(), n, tbl);
            REQUIRE(std::equal(a.begin(), a.begin() + n, b.begin()));
            for (int i = 0; i < n; ++i)
                REQUIRE(a[i] == 0);
        }
        for (int e = 0; e < 8; ++e) {
            ref.map(a.data(), src.data(), n, K->nibble_frob(e));
            vec->map(b.data(), src.data(), n, K->nibble_frob(e));
            REQUIRE(std::equal(a.begin(), a.begin() + n, b.begin()));
            for (int i = 0; i < n; ++i)
                REQUIRE(a[i] == K->frob(src[i], e));
        }
        ref.xor_into(a.data(), src.data(), n);
        vec->xor_into(b.data(), src.data(), n);
        REQUIRE(std::equal(a.begin(), a.begin() + n, b.begin()));
    }
}

TEST_CASE("scalar multiplication tables match the field")
{
    for (int k : {2, 4, 8}) {
        auto K = Field::get(2, k);
        std::vector<std::uint8_t> src(K->q()), dst(K->q());
        for (int i = 0; i < K->q(); ++i)
            src[i] = std::uint8_t(i);
        for (int c = 0; c < K->q(); ++c) {
            kernels::scalar().map(dst.data(), src.data(), src.size(), K->nibble_mul(Elem(c)));
            for (int i = 0; i < K->q(); ++i)
                REQUIRE(dst[i] == K->mul(Elem(c), Elem(i)));
        }
    }
}

// ---- linear algebra --------------------------------------------------------

namespace {

Mat random_mat(const Field& K, int r, int c, std::mt19937& rng, int zero_bias = 0)
{
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = (zero_bias && rng() % zero_bias) ? 0 : Elem(rng() % K.q());
    return m;
}

// Number of x in F^n with m x = 0, by listing all of F^n.
long long kernel_size(const Field& K, const Mat& m)
{
    int n = m.cols;
    std::vector<Elem> x(n, 0), y(kMaxDim);
    long long count = 0;
    for (;;) {
        mat_vec(K, m, x.data(), y.data());
        bool z = true;
        for (int i = 0; i < m.rows; ++i)
            z = z && !y[i];
        count += z;
        int i = 0;
        while (i < n && ++x[i] == K.q())
            x[i++] = 0;
        if (i == n)
            return count;
    }
}

}  // namespace

TEST_CASE("rank and null space against exhaustive kernel count")
{
    std::mt19937 rng(11);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        auto K = Field::get(p, k);
        for (int t = 0; t < 150; ++t) {
            int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
            Mat m = random_mat(*K, r, c, rng, 3);
            long long size = kernel_size(*K, m);
            Mat N = nullspace(*K, m);
            long long expect = 1;
            for (int i = 0; i < N.rows; ++i)
                expect *= K->q();
            REQUIRE(size == expect);
            REQUIRE(rank(*K, m) + N.rows == c);
            for (int i = 0; i < N.rows; ++i) {
                Elem y[kMaxDim];
                mat_vec(*K, m, N.row(i), y);
                for (int j = 0; j < r; ++j)
                    REQUIRE(y[j] == 0);
            }
        }
    }
}

TEST_CASE("inverse and determinant")
{
    std::mt19937 rng(5);
    auto K = Field::get(3, 2);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + int(rng() % 8);
        Mat a = random_mat(*K, n, n, rng, t % 2 ? 2 : 0), b = random_mat(*K, n, n, rng);
        auto inv = inverse(*K, a);
        REQUIRE(bool(inv) == (rank(*K, a) == n));
        REQUIRE(bool(inv) == (det(*K, a) != 0));
        if (inv)
            REQUIRE(mul(*K, a, *inv) == Mat::identity(n));
        REQUIRE(det(*K, mul(*K, a, b)) == K->mul(det(*K, a), det(*K, b)));
    }
}

TEST_CASE("subspace sum and intersection dimensions")
{
    std::mt19937 rng(3);
    auto K = Field::get(2, 2);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + int(rng() % 6);
        Subspace x = Subspace::span(*K, random_mat(*K, int(rng() % (n + 1)), n, rng, 2));
        Subspace y = Subspace::span(*K, random_mat(*K, int(rng() % (n + 1)), n, rng, 2));
        Subspace s = sum(*K, x, y), i = intersect(*K, x, y);
        REQUIRE(s.dim() + i.dim() == x.dim() + y.dim());
        REQUIRE(s.contains(*K, x));
        REQUIRE(x.contains(*K, i));
        REQUIRE(y.contains(*K, i));
        REQUIRE(annihilator(*K, annihilator(*K, x)) == x);
    }
}

TEST_CASE("symplectic form")
{
    for (int g = 1; g <= 4; ++g) {
        auto K = Field::get(3, 1);
        auto f = SymplecticForm::standard(*K, g);
        CHECK(f.alternating(*K));
        CHECK(f.nondegenerate(*K));
    }
    CHECK_THROWS(SymplecticForm::standard(*Field::get(2, 1), 5));
}
