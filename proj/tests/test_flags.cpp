#include <map>
#include <set>

#include "doctest.h"
#include "iwahori/flags.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

std::set<std::string> enumerated_keys(const SignedPerm& w, FieldPtr K)
{
    std::set<std::string> out;
    for (const auto& f : enumerate_stable(w, K))
        out.insert(f.key(*K));
    return out;
}

}  // namespace

TEST_CASE("enumeration agrees with brute force")
{
    std::vector<std::pair<int, FieldPtr>> cases{
        {1, Field::get(2, 1)}, {1, Field::get(5, 1)}, {2, Field::get(2, 1)},
        {2, Field::get(3, 1)}, {2, Field::get(2, 2)}, {3, Field::get(2, 1)},
    };
    for (const auto& [g, K] : cases)
        for (const auto& w : final_elements(g)) {
            CAPTURE(g);
            CAPTURE(K->q());
            CAPTURE(name(w));
            auto D = standard_module(w, K);
            auto brute = oracle::brute_force_flags(D);
            auto flags = enumerate_stable(w, K);
            auto keys = enumerated_keys(w, K);
            CHECK(keys.size() == flags.size());  // no repeats
            CHECK(keys == brute);
            for (const auto& f : flags) {
                REQUIRE(is_stable(D, f));
                REQUIRE(f.isotropic(*K, D.form));
            }
        }
}

TEST_CASE("sharded enumeration partitions the flags")
{
    auto K = Field::get(2, 2);
    auto w = final_elements(3)[0];
    auto D = standard_module(w, K);
    std::size_t total = enumerate_stable(D, [](const SymplecticFlag&) {});
    std::set<std::string> keys;
    std::size_t sum = 0;
    for (int s = 0; s < 3; ++s)
        sum += enumerate_stable(D, [&](const SymplecticFlag& f) { keys.insert(f.key(*K)); }, {s, 3});
    CHECK(sum == total);
    CHECK(keys.size() == total);
}

TEST_CASE("the worked KR example")
{
    auto x = parse_name(3, "s_310.tau");
    CHECK(x.lambda == std::vector<int>{0, 0, 1, 0, 1, 1});
    CHECK(x.omega.images == std::vector<int>{3, 6, 2, 5, 1, 4});
    auto adm = adm_rank0(3);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
        auto K = Field::get(p, k);
        auto D = standard_module(SignedPerm::identity(3), K);
        auto ex = oracle::worked_examples(*K, 60);
        REQUIRE(!ex.empty());
        for (const auto& e : ex) {
            REQUIRE(is_stable(D, e.flag));
            REQUIRE(check_kr_basis(D, e.flag, x, e.eps));
            REQUIRE(kr_type(D, e.flag) == x);
            REQUIRE(verify_kr_basis(D, e.flag, x));
            // no other admissible element admits a KR basis
            for (const auto& a : adm)
                if (!(a.element == x))
                    REQUIRE_FALSE(verify_kr_basis(D, e.flag, a.element));
        }
    }
}

TEST_CASE("check_kr_basis rejects a damaged basis")
{
    auto K = Field::get(2, 3);
    auto D = standard_module(SignedPerm::identity(3), K);
    auto e = oracle::worked_examples(*K, 1).at(0);
    auto x = parse_name(3, "s_310.tau");
    Mat eps = e.eps;
    std::swap(eps(0, 0), eps(0, 3));
    eps(0, 5) = K->add(eps(0, 5), 1);
    CHECK_FALSE(check_kr_basis(D, e.flag, x, eps));
    CHECK_FALSE(check_kr_basis(D, e.flag, parse_name(3, "s_320.tau"), e.eps));
}

TEST_CASE("KR types of enumerated flags are admissible and verified")
{
    for (auto [g, K] : std::vector<std::pair<int, FieldPtr>>{{2, Field::get(3, 1)}, {3, Field::get(2, 2)}}) {
        std::set<AffineElement> adm0;
        for (const auto& a : adm_rank0(g))
            adm0.insert(a.element);
        for (const auto& w : final_elements(g)) {
            auto D = standard_module(w, K);
            int pr = eo_p_rank(w);
            int room = g - eo_a_number(w);
            for (const auto& f : enumerate_stable(w, K)) {
                auto r = kr_type_checked(D, f);
                REQUIRE(r.verified);
                REQUIRE(p_rank_adm(r.x) == pr);
                REQUIRE(int(n_set(r.x).size()) <= room);
                if (pr == 0) {
                    REQUIRE(adm0.count(r.x));
                    REQUIRE(xi_inverse(r.x.omega) == r.x);
                }
            }
        }
    }
}

TEST_CASE("positive p-rank flags split along the etale and multiplicative parts")
{
    struct Case {
        int g;
        const char* w;
        int p, k;
    };
    for (auto c : std::vector<Case>{{3, "s_123", 2, 2}, {3, "s_3123", 2, 1}, {2, "s_12", 2, 1},
                                    {2, "s_212", 2, 1}, {2, "s_12", 3, 1}, {3, "s_323123", 2, 1}}) {
        CAPTURE(c.w);
        auto K = Field::get(c.p, c.k);
        auto w = parse_name(c.g, c.w).omega;
        int r = eo_p_rank(w);
        REQUIRE(r > 0);
        if (r == c.g) {
            // ordinary: nothing left over, the flags are the labels
            CHECK(enumerate_stable(w, K).size() == oracle::ordinary_formula(r, c.p));
            CHECK_THROWS(reduced_stratum(w));
            continue;
        }
        auto wr = reduced_stratum(w);
        REQUIRE(wr.g() == c.g - r);
        auto Dr = standard_module(wr, K);
        auto fiber = enumerated_keys(wr, K);
        std::map<std::string, std::set<std::string>> by_label;
        for (const auto& f : enumerate_stable(w, K)) {
            auto s = shuffle_decompose(w, *K, f);
            REQUIRE(is_stable(Dr, s.residual));
            by_label[s.label.key()].insert(s.residual.key(*K));
        }
        // C(g, r) choices of J times ON_r flags in U
        std::uint64_t on = oracle::ordinary_formula(r, c.p);
        std::uint64_t choose = 1;
        for (int i = 0; i < r; ++i)
            choose = choose * (c.g - i) / (i + 1);
        CHECK(by_label.size() == choose * on);
        for (const auto& [l, fib] : by_label)
            CHECK(fib == fiber);
    }
    CHECK(oracle::ordinary_formula(1, 2) == 2);
    CHECK(oracle::ordinary_formula(2, 2) == 12);
    CHECK(oracle::ordinary_formula(3, 2) == 168);
}
