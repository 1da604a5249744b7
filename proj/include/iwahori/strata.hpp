#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "iwahori/eo.hpp"
#include "iwahori/flags.hpp"

namespace iwahori {

// Everything the table builders need from one enumeration of
// Flag^{perp,F,V}_w(F_{p^k}).
struct StratumStats {
    int g = 0, p = 0, k = 0;
    std::string w;
    std::uint64_t count = 0;
    std::map<std::string, std::uint64_t> kr_hist;  // KR type name -> flags
    std::uint64_t unverified = 0;      // verify_kr_basis rejected kr_type
    std::uint64_t kr_errors = 0;       // kr_type threw
    std::uint64_t nx_violations = 0;   // g - a(w) < #N_x
    std::uint64_t prank_mismatch = 0;  // p_rank_adm(x) != p-rank of w

    bool clean() const { return !unverified && !kr_errors && !nx_violations && !prank_mismatch; }
    friend bool operator==(const StratumStats&, const StratumStats&) = default;
};

// One line, fixed key order; the cache stores exactly this text.
std::string to_json(const StratumStats& s);
StratumStats stats_from_json(const std::string& text);

StratumStats compute_stats(int g, int p, int k, const SignedPerm& w);

struct StrataOptions {
    std::string cache_dir;  // empty: no cache
    int jobs = 1;
    std::function<void(const std::string&)> progress;  // diagnostics only
};

struct StratumJob {
    int g, p, k;
    SignedPerm w;
};
// Results in job order, whatever order the workers finish in.
std::vector<StratumStats> run_jobs(const std::vector<StratumJob>& jobs, const StrataOptions& opt = {});
std::string cache_path(const std::string& dir, int g, int p, int k, const std::string& w);

std::uint64_t ordinary_count(int g, int p);  // ON_g = 2^g |Flag_g(F_p)|
std::uint64_t binomial(int n, int r);

struct EsTable {
    int g = 0, p = 0;
    std::vector<int> ks;
    std::map<std::string, std::set<std::string>> es;   // x -> ES(x)
    std::map<std::string, std::uint64_t> witnesses;    // x -> flags of type x
    std::vector<StratumStats> stats;
};
EsTable es_from_stats(int g, int p, const std::vector<int>& ks, std::vector<StratumStats> stats);
EsTable es_table(int g, int p, const std::vector<int>& ks, const StrataOptions& opt = {});

struct CountSeries {
    std::string w;
    int p = 0;
    std::vector<std::pair<int, std::uint64_t>> n;  // (k, N_k)
};
CountSeries point_counts(const SignedPerm& w, int p, const std::vector<int>& ks, const StrataOptions& opt = {});
// Series for w read from existing stats; restricted to KR type x if given.
CountSeries series_from_stats(const std::vector<StratumStats>& stats, const std::string& w,
                              const std::string& x = "");
// round(log_p(N_k2 / N_k1) / (k2 - k1)) over the two largest even k.
// Throws std::invalid_argument with fewer than two even samples or a zero count.
int dim_estimate(const CountSeries& s);

struct CensusReport {
    int g = 0, p = 0, k = 0;
    std::string w;
    int p_rank = 0;
    std::uint64_t points = 0;
    // positive p-rank
    std::uint64_t labels = 0, expected_labels = 0;
    std::set<std::uint64_t> fiber_sizes;
    std::uint64_t reduced_count = 0;  // |Flag_{w~}| in genus g - p-rank
    // p-rank 0: component (or family) -> distinct fixture instances met
    std::map<std::string, std::uint64_t> components;
    std::uint64_t uncovered = 0;  // points outside every fixture component
};
CensusReport component_census(const SignedPerm& w, int p, int k);

// g = 3 only: ES(x) = {s_23}. Throws std::invalid_argument otherwise, and
// std::out_of_range when x is not in the table.
bool ss_intersection_empty(const std::string& x, const EsTable& t);
AffineElement inversion_partner(const AffineElement& x);  // xi^{-1}(xi(x)^{-1})
// ES(partner(x)) = ES(x) for every p-rank 0 row.
bool inversion_symmetry_check(const EsTable& t);

// Rows x of p-rank 0, in adm_rank0 order.
std::vector<std::string> es_rows(const EsTable& t);
std::string es_csv(const EsTable& t);
std::string es_markdown(const EsTable& t);
std::string es_json(const EsTable& t);

}  // namespace iwahori
