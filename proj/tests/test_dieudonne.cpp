#include "doctest.h"
#include "iwahori/dieudonne.hpp"
#include "oracles.hpp"

using namespace iwahori;
using namespace oracle;

TEST_CASE("standard modules are valid")
{
    for (int g = 1; g <= 3; ++g)
        for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}})
            for (const auto& w : final_elements(g)) {
                auto D = standard_module(w, Field::get(p, k));
                auto v = validate(D);
                CAPTURE(name(w));
                CHECK_MESSAGE(v.ok, v.failure);
                CHECK(adjoint_check(D.K(), D.F, D.V, D.form));
            }
}

TEST_CASE("validate reports a broken module")
{
    auto D = standard_module(SignedPerm::identity(2), Field::get(2, 1));
    D.F.A = Mat(4, 4);
    auto v = validate(D);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.failure.empty());
}

TEST_CASE("adjoint and perp identities, g = 2 over F_2, exhaustive")
{
    auto K = Field::get(2, 1);
    auto vs = all_vectors(*K, 4);
    auto subs = all_subspaces(*K, 4);
    CHECK(subs.size() == 67);  // 1 + 15 + 35 + 15 + 1
    for (const auto& w : final_elements(2)) {
        auto D = standard_module(w, K);
        CHECK(adjoint_on(D, vs));
        CHECK(perp_identities(D, subs));
    }
}

TEST_CASE("adjoint and perp identities, g = 3, random inputs")
{
    auto K = Field::get(3, 2);
    unsigned long long st = 99;
    for (const auto& w : final_elements(3)) {
        auto D = standard_module(w, K);
        auto M = random_symplectic(*K, D.form, st);
        auto E = conjugate(D, M);
        auto vs = random_vectors(*K, 6, 40, st++);
        CHECK(adjoint_on(E, vs));
        std::vector<Subspace> subs;
        for (int r = 0; r <= 6; ++r) {
            Mat m(0, 6);
            for (int i = 0; i < r; ++i)
                m.append_row(vs[i].data());
            subs.push_back(Subspace::span(*K, m));
        }
        CHECK(perp_identities(E, subs));
    }
}

TEST_CASE("random symplectic conjugates stay valid and keep their type")
{
    unsigned long long st = 1;
    int n = 0;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 4}})
        for (int g = 2; g <= 3; ++g)
            for (const auto& w : final_elements(g)) {
                auto D = standard_module(w, Field::get(p, k));
                for (int t = 0; t < 28; ++t, ++n) {
                    auto E = conjugate(D, random_symplectic(D.K(), D.form, st));
                    REQUIRE(validate(E).ok);
                    REQUIRE(eo_type(E) == seq_from_elem(w));
                    REQUIRE(a_number(E) == eo_a_number(w));
                    REQUIRE(p_rank_mod(E) == eo_p_rank(w));
                }
            }
    CHECK(n == 28 * 3 * (4 + 8));  // 1008 conjugates
}

TEST_CASE("conjugation rejects non-symplectic matrices")
{
    auto K = Field::get(3, 1);
    auto D = standard_module(SignedPerm::identity(2), K);
    Mat M = Mat::identity(4);
    M(0, 0) = 2;
    CHECK_THROWS_AS(conjugate(D, M), std::invalid_argument);
    CHECK(conjugate(D, Mat::identity(4)).F.A == D.F.A);
}

TEST_CASE("canonical filtration of the standard modules")
{
    auto K = Field::get(2, 2);
    for (int g = 1; g <= 3; ++g)
        for (const auto& w : final_elements(g)) {
            auto D = standard_module(w, K);
            auto s = seq_from_elem(w);
            CHECK(eo_type(D) == s);
            CHECK(dim_im_v2(D) == s.psi[g]);
            CHECK(dim_im_v2(D) == dim_im_f2(D));
            CHECK(a_number(D) == g - s.psi[g]);
            auto cf = canonical_filtration(D);
            int r = int(cf.chain.size()) - 1;
            for (int j = 0; j <= r; ++j)
                CHECK(D.form.perp(D.K(), cf.chain[j]) == cf.chain[r - j]);
        }
    auto cf = canonical_filtration(standard_module(SignedPerm::identity(3), K));
    CHECK(cf.rho == std::vector<int>{0, 3, 6});
    CHECK(dim_im_v2(standard_module(parse_name(3, "s_323").omega, K)) == 2);
    CHECK(p_rank_mod(standard_module(parse_name(3, "s_323123").omega, K)) == 3);
}

TEST_CASE("supersingular normal forms")
{
    for (int p : {2, 3}) {
        auto K = Field::get(p, 2);
        Elem eps = default_eps(*K);
        CHECK(K->frob(eps, 1) == K->neg(eps));
        for (int g = 1; g <= 3; ++g) {
            // all strictly lower triangular T, filtered by the symmetry condition
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < i; ++j)
                    cells.push_back({i, j});
            std::vector<Elem> val(cells.size(), 0);
            int forms = 0;
            for (;;) {
                HarashitaForm h{g, K, eps, Mat(g, g)};
                for (std::size_t i = 0; i < cells.size(); ++i)
                    h.T(cells[i].first, cells[i].second) = val[i];
                if (harashita_valid(h)) {
                    ++forms;
                    auto D = harashita_module(h);
                    int rk = rank(*K, h.T);
                    REQUIRE(validate(D).ok);
                    REQUIRE(a_number(D) == g - rk);
                    auto psi = eo_type(D);
                    REQUIRE(dim_im_v2(D) == psi.psi[g]);
                    if (g == 3 && rk == 0)
                        REQUIRE(psi.str() == "(0,0,0)");
                    if (g == 3 && rk == 1)
                        REQUIRE(psi.str() == "(0,0,1)");
                }
                std::size_t i = 0;
                while (i < val.size() && ++val[i] == K->q())
                    val[i++] = 0;
                if (i == val.size())
                    break;
            }
            CHECK(forms > 0);
        }
    }
}

TEST_CASE("rank one normal form in genus 3 has the seven-step chain")
{
    auto K = Field::get(3, 2);
    HarashitaForm h{3, K, default_eps(*K), Mat(3, 3)};
    h.T(2, 0) = K->generator();
    auto cf = canonical_filtration(harashita_module(h));
    CHECK(cf.v == std::vector<int>{0, 0, 0, 1, 1, 2, 3});
    HarashitaForm bad = h;
    bad.T(0, 2) = 1;
    CHECK_FALSE(harashita_valid(bad));
}
