#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "iwahori/reference.hpp"
#include "iwahori/weyl.hpp"

using namespace iwahori;

namespace {

// Word length in s_0..s_g by breadth-first search from the identity.
std::map<AffineElement, int> bfs_lengths(int g, int depth)
{
    auto G = generators(g);
    std::map<AffineElement, int> dist;
    std::queue<AffineElement> todo;
    dist[AffineElement::identity(g)] = 0;
    todo.push(AffineElement::identity(g));
    while (!todo.empty()) {
        auto x = todo.front();
        todo.pop();
        int d = dist[x];
        if (d == depth)
            continue;
        for (const auto& s : G.s) {
            auto y = compose(x, s);
            if (dist.emplace(y, d + 1).second)
                todo.push(y);
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("generators are involutions satisfying the braid relations")
{
    for (int g = 2; g <= 3; ++g) {
        auto G = generators(g);
        auto e = AffineElement::identity(g);
        for (const auto& s : G.s)
            CHECK(compose(s, s) == e);
        // tau conjugates s_i to s_{g-i}
        for (int i = 0; i <= g; ++i)
            CHECK(compose(compose(G.tau, G.s[i]), invert(G.tau)) == G.s[g - i]);
        CHECK(G.tau.similitude() == 1);
        CHECK(length(G.tau) == 0);
    }
}

TEST_CASE("length equals breadth-first word length")
{
    for (int g = 2; g <= 3; ++g) {
        auto dist = bfs_lengths(g, g == 2 ? 8 : 6);
        auto tau = generators(g).tau;
        CAPTURE(g);
        for (const auto& [x, d] : dist) {
            REQUIRE(length(x) == d);
            REQUIRE(length(compose(x, tau)) == d);
            REQUIRE(int(reduced_word(x).size()) == d);
            REQUIRE(from_word(g, reduced_word(x), 0) == x);
        }
    }
}

TEST_CASE("names round-trip")
{
    for (int g = 2; g <= 3; ++g) {
        auto dist = bfs_lengths(g, 5);
        auto tau = generators(g).tau;
        for (const auto& [x, d] : dist) {
            auto xt = compose(x, tau);
            REQUIRE(parse_name(g, name(x)) == x);
            REQUIRE(parse_name(g, name(xt)) == xt);
            REQUIRE(parse_name(g, display_name(xt)) == xt);
        }
    }
    CHECK(name(parse_name(3, "s_{310}τ")) == "s_310.tau");
    CHECK(display_name(parse_name(3, "s_310.tau")) == "s_{310}τ");
    CHECK(name(AffineElement::identity(3)) == "id");
    CHECK(name(generators(3).tau) == "tau");
    CHECK_THROWS(parse_name(3, "s_9"));
}

TEST_CASE("reduced word rule: reversal is lexicographically least")
{
    // s_1 and s_3 commute; s_3 s_1 s_0 wins over s_1 s_3 s_0
    auto x = parse_name(3, "s_130.tau");
    CHECK(name(x) == "s_310.tau");
    CHECK(reduced_word(parse_name(3, "s_13")) == std::vector<int>{3, 1});
}

TEST_CASE("Bruhat order: subwords lie below")
{
    for (int g = 2; g <= 3; ++g) {
        auto dist = bfs_lengths(g, 5);
        for (const auto& [x, d] : dist) {
            auto w = reduced_word(x);
            REQUIRE(bruhat_leq(x, x));
            for (std::size_t i = 0; i < w.size(); ++i) {
                auto sub = w;
                sub.erase(sub.begin() + i);
                auto y = from_word(g, sub, 0);
                REQUIRE(bruhat_leq(y, x));
                if (length(y) < length(x))
                    REQUIRE_FALSE(bruhat_leq(x, y));
            }
        }
    }
}

TEST_CASE("the p-rank 0 admissible set for g = 3 is the 29-element table")
{
    auto adm = adm_rank0(3);
    const auto& ref = ref::adm(3);
    REQUIRE(adm.size() == 29);
    REQUIRE(ref.size() == 29);
    std::map<std::string, AdmissibleElement> by;
    for (const auto& a : adm)
        by[a.name] = a;
    for (const auto& r : ref) {
        CAPTURE(r.name);
        REQUIRE(by.count(r.name));
        const auto& a = by[r.name];
        CHECK(a.element.lambda == r.lambda);
        CHECK(a.element.omega == SignedPerm::from_cycles(3, ref::parse_cycles(r.cycles)));
        CHECK(a.p_rank == 0);
        CHECK(a.length == length(parse_name(3, r.name)));
    }
}

TEST_CASE("the p-rank 0 admissible set for g = 2 has the five ES-table rows")
{
    std::set<std::string> got, want;
    for (const auto& a : adm_rank0(2))
        got.insert(a.name);
    for (const auto& r : ref::adm(2))
        want.insert(r.name);
    CHECK(got == want);
    CHECK(got.size() == 5);
}

TEST_CASE("xi^{-1} reads lambda off omega")
{
    for (int g = 1; g <= 3; ++g)
        for (const auto& a : adm_rank0(g)) {
            auto inv = a.element.omega.inverse();
            for (int i = 1; i <= 2 * g; ++i) {
                CHECK(inv(i) != i);
                CHECK(a.element.lambda[i - 1] == (inv(i) > i ? 0 : 1));
                CHECK(a.element.lambda[i - 1] + a.element.lambda[2 * g - i] == 1);
            }
            CHECK(xi_inverse(a.element.omega) == a.element);
        }
    CHECK_THROWS(xi_inverse(SignedPerm::identity(2)));
}

TEST_CASE("N_x and p-rank of admissible elements")
{
    auto x = parse_name(3, "s_310.tau");
    CHECK(x.omega.images == std::vector<int>{3, 6, 2, 5, 1, 4});
    CHECK(p_rank_adm(x) == 0);
    CHECK(n_set(x).empty());
    CHECK(p_rank_adm(AffineElement::perm_then_translation(SignedPerm::identity(2), {0, 0, 1, 1})) == 2);
}

TEST_CASE("signed permutation cycles")
{
    auto w = SignedPerm::from_cycles(3, {{1, 4, 6, 3}, {2, 5}});
    CHECK(w.valid());
    CHECK(w.cycles() == "(1463)(25)");
    CHECK((w * w.inverse()) == SignedPerm::identity(3));
    CHECK(SignedPerm::identity(2).cycles() == "id");
}
