#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "iwahori/reference.hpp"
#include "iwahori/strata.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace iwahori;
namespace fs = std::filesystem;

namespace {

std::vector<int> range(int a, int b)
{
    std::vector<int> v;
    for (int k = a; k <= b; ++k)
        v.push_back(k);
    return v;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("iwahori_" + tag + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

EsTable reference_table(int g)
{
    EsTable t;
    t.g = g;
    t.p = 2;
    for (const auto& [x, s] : ref::es(g))
        t.es[x] = s;
    return t;
}

}  // namespace

TEST_CASE("genus 2 ES table")
{
    auto t = es_table(2, 2, range(1, 4));
    std::map<std::string, std::set<std::string>> want(ref::es(2).begin(), ref::es(2).end());
    for (const auto& x : es_rows(t)) {
        CAPTURE(x);
        CHECK(t.es[x] == want.at(x));
    }
    CHECK(es_rows(t).size() == want.size());
    // ES only grows with more fields
    std::map<std::string, std::set<std::string>> prev;
    for (int k = 1; k <= 4; ++k) {
        auto tk = es_table(2, 2, range(1, k));
        for (const auto& [x, s] : prev)
            for (const auto& w : s)
                CHECK(tk.es[x].count(w));
        prev = tk.es;
    }
    CHECK(inversion_symmetry_check(t));
}

TEST_CASE("stats are internally consistent")
{
    std::vector<StratumJob> jobs;
    for (const auto& w : final_elements(2))
        for (int k = 1; k <= 3; ++k)
            jobs.push_back({2, 3, k, w});
    for (const auto& s : run_jobs(jobs)) {
        CAPTURE(s.w);
        std::uint64_t sum = 0;
        for (const auto& [x, n] : s.kr_hist)
            sum += n;
        CHECK(sum == s.count);
        CHECK(s.clean());
        auto D = standard_module(parse_name(2, s.w).omega, Field::get(3, s.k));
        CHECK(s.count == oracle::brute_force_flags(D).size());
    }
}

TEST_CASE("point counts")
{
    for (int p : {2, 3}) {
        auto s = point_counts(parse_name(2, "s_2").omega, p, {1, 2});
        std::uint64_t q = 1;
        for (const auto& [k, n] : s.n) {
            q *= p;
            CHECK(n == q + 1);
        }
    }
    auto o = point_counts(parse_name(3, "s_323123").omega, 2, {1, 2, 3});
    for (const auto& [k, n] : o.n)
        CHECK(n == oracle::ordinary_formula(3, 2));
    CHECK(ordinary_count(3, 2) == oracle::ordinary_formula(3, 2));
    CHECK(ordinary_count(2, 3) == oracle::ordinary_formula(2, 3));
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(5, 0) == 1);
}

TEST_CASE("dimension estimates")
{
    for (const auto& [w, d] : ref::fiber_dims(2)) {
        CAPTURE(w);
        auto s = point_counts(parse_name(2, w).omega, 2, range(1, 4));
        CHECK(dim_estimate(s) == d);
    }
    CountSeries flat{"x", 2, {{2, 5}, {4, 5}, {6, 5}}};
    CHECK(dim_estimate(flat) == 0);
    CountSeries grow{"x", 3, {{1, 1}, {2, 10}, {4, 82}}};
    CHECK(dim_estimate(grow) == 1);
    CHECK_THROWS_AS(dim_estimate(CountSeries{"x", 2, {{1, 3}, {2, 5}, {3, 9}}}), std::invalid_argument);
    CHECK_THROWS_AS(dim_estimate(CountSeries{"x", 2, {{2, 0}, {4, 5}}}), std::invalid_argument);
    CHECK_THROWS_AS(dim_estimate(CountSeries{"x", 2, {{2, 50}, {4, 1}}}), std::domain_error);
}

TEST_CASE("series restricted to a KR type")
{
    auto t = es_table(2, 2, range(1, 4));
    auto all = series_from_stats(t.stats, "id");
    REQUIRE(all.n.size() == 4);
    std::uint64_t total = 0;
    for (const auto& x : es_rows(t)) {
        auto s = series_from_stats(t.stats, "id", x);
        REQUIRE(s.n.size() == 4);
        total += s.n.back().second;
    }
    CHECK(total == all.n.back().second);
}

TEST_CASE("component census")
{
    auto c = component_census(parse_name(3, "s_123").omega, 2, 2);
    CHECK(c.p_rank == 1);
    CHECK(c.labels == 3 * oracle::ordinary_formula(1, 2));
    CHECK(c.labels == c.expected_labels);
    auto id2 = enumerate_stable(SignedPerm::identity(2), Field::get(2, 2)).size();
    CHECK(c.reduced_count == id2);
    CHECK(c.fiber_sizes == std::set<std::uint64_t>{id2});
    CHECK(c.points == c.labels * id2);

    auto d = component_census(parse_name(2, "s_12").omega, 2, 1);
    CHECK(d.labels == 4);

    auto e = component_census(SignedPerm::identity(3), 2, 2);
    CHECK(e.uncovered == 0);
    CHECK(e.points == 429);
    CHECK(e.components.at("T") == 9);  // frozen
    auto f = component_census(SignedPerm::identity(2), 3, 2);
    CHECK(f.uncovered == 0);
    CHECK(f.components.at("Z") == 1);  // frozen
    CHECK(f.components.at("Z_x") == 4);
}

TEST_CASE("cache files are stable and validated")
{
    TempDir dir("cache");
    StrataOptions opt;
    opt.cache_dir = dir.path.string();
    auto w = parse_name(2, "s_2").omega;
    std::vector<StratumJob> jobs{{2, 2, 1, w}, {2, 2, 2, w}, {2, 2, 3, w}};
    auto a = run_jobs(jobs, opt);
    fs::path file = cache_path(opt.cache_dir, 2, 2, 2, "s_2");
    REQUIRE(fs::exists(file));
    std::string before = slurp(file);
    CHECK(before.rfind(to_json(a[1]) + "\n", 0) == 0);
    auto b = run_jobs(jobs, opt);
    CHECK(a == b);
    CHECK(slurp(file) == before);

    // a damaged entry is recomputed and rewritten
    {
        std::ofstream out(file);
        out << before.substr(0, before.size() / 2);
    }
    auto c = run_jobs(jobs, opt);
    CHECK(c == a);
    CHECK(slurp(file) == before);
    // so is a well-formed entry with a wrong count
    {
        auto nl = before.find('\n');
        auto j = nlohmann::json::parse(before.substr(0, nl));
        j["count"] = 7;
        std::ofstream out(file);
        out << j.dump() << before.substr(nl);
    }
    auto d = run_jobs(jobs, opt);
    CHECK(d == a);
    CHECK(d[1].count == 5);
    CHECK(slurp(file) == before);

    CHECK(run_jobs(jobs) == a);
    CHECK(stats_from_json(to_json(a[2])) == a[2]);
}

TEST_CASE("worker count does not change results")
{
    std::vector<StratumJob> jobs;
    for (const auto& w : final_elements(3))
        for (int k = 1; k <= 2; ++k)
            jobs.push_back({3, 2, k, w});
    StrataOptions one, three;
    three.jobs = 3;
    CHECK(run_jobs(jobs, one) == run_jobs(jobs, three));
}

TEST_CASE("supersingular intersection and inversion checks on the reference table")
{
    auto t = reference_table(3);
    CHECK(inversion_symmetry_check(t));
    int empty = 0;
    for (const auto& [x, s] : ref::es(3)) {
        bool e = ss_intersection_empty(x, t);
        CHECK(e == (ref::ss_meet(x) == ref::SsMeet::Empty));
        empty += e;
    }
    CHECK(empty == 6);
    CHECK_THROWS_AS(ss_intersection_empty("s_310.tau", reference_table(2)), std::invalid_argument);
    CHECK_THROWS_AS(ss_intersection_empty("s_1", t), std::invalid_argument);

    auto bad = t;
    bad.es["s_10.tau"].insert("s_3");
    CHECK_FALSE(ss_intersection_empty("s_10.tau", bad));
    CHECK_FALSE(inversion_symmetry_check(bad));
    CHECK(inversion_symmetry_check(reference_table(2)));

    // s_310.tau and s_320.tau are partners
    CHECK(name(inversion_partner(parse_name(3, "s_310.tau"))) == "s_320.tau");
    for (const auto& a : adm_rank0(3))
        CHECK(inversion_partner(inversion_partner(a.element)) == a.element);
}

TEST_CASE("table output")
{
    auto t = es_table(2, 2, range(1, 4));
    auto csv = es_csv(t);
    CHECK(csv.rfind("x,id,s_2,supersingular,witnesses\n", 0) == 0);
    auto j = nlohmann::json::parse(es_json(t));
    CHECK(j.size() == 5);
    for (const auto& row : j)
        CHECK(row.at("schedule").size() == 4);
    CHECK(es_markdown(t).find("| x |") != std::string::npos);
}
