#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "iwahori/strata.hpp"
#include "json.hpp"

namespace iwahori {

std::uint64_t binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= r; ++i)
        c = c * std::uint64_t(n - r + i) / std::uint64_t(i);
    return c;
}

std::uint64_t ordinary_count(int g, int p)
{
    // 2^g prod_{l=1}^{g} (p^l - 1)/(p - 1)
    std::uint64_t n = std::uint64_t(1) << g;
    std::uint64_t pl = 1;
    for (int l = 1; l <= g; ++l) {
        pl *= std::uint64_t(p);
        n *= (pl - 1) / std::uint64_t(p - 1);
    }
    return n;
}

EsTable es_from_stats(int g, int p, const std::vector<int>& ks, std::vector<StratumStats> stats)
{
    EsTable t;
    t.g = g;
    t.p = p;
    t.ks = ks;
    std::sort(t.ks.begin(), t.ks.end());
    for (const auto& s : stats) {
        if (s.g != g || s.p != p)
            throw std::invalid_argument("es_from_stats: stats for another (g, p)");
        for (const auto& [x, n] : s.kr_hist) {
            if (!n)
                continue;
            t.es[x].insert(s.w);
            t.witnesses[x] += n;
        }
    }
    t.stats = std::move(stats);
    return t;
}

EsTable es_table(int g, int p, const std::vector<int>& ks, const StrataOptions& opt)
{
    if (ks.empty())
        throw std::invalid_argument("es_table: empty schedule");
    std::vector<StratumJob> jobs;
    for (int k : ks)
        for (const auto& w : final_elements(g))
            jobs.push_back({g, p, k, w});
    return es_from_stats(g, p, ks, run_jobs(jobs, opt));
}

CountSeries series_from_stats(const std::vector<StratumStats>& stats, const std::string& w, const std::string& x)
{
    CountSeries s;
    s.w = w;
    for (const auto& st : stats) {
        if (st.w != w)
            continue;
        if (s.p && s.p != st.p)
            throw std::invalid_argument("series_from_stats: mixed characteristics");
        s.p = st.p;
        std::uint64_t n = st.count;
        if (!x.empty()) {
            auto it = st.kr_hist.find(x);
            n = it == st.kr_hist.end() ? 0 : it->second;
        }
        s.n.push_back({st.k, n});
    }
    std::sort(s.n.begin(), s.n.end());
    return s;
}

CountSeries point_counts(const SignedPerm& w, int p, const std::vector<int>& ks, const StrataOptions& opt)
{
    std::vector<StratumJob> jobs;
    for (int k : ks)
        jobs.push_back({w.g(), p, k, w});
    auto s = series_from_stats(run_jobs(jobs, opt), name(w));
    s.p = p;
    return s;
}

int dim_estimate(const CountSeries& s)
{
    std::vector<std::pair<int, std::uint64_t>> even;
    for (const auto& kn : s.n)
        if (kn.first % 2 == 0)
            even.push_back(kn);
    std::sort(even.begin(), even.end());
    if (even.size() < 2)
        throw std::invalid_argument("dim_estimate: need two even exponents");
    auto [k1, n1] = even[even.size() - 2];
    auto [k2, n2] = even.back();
    if (k1 == k2)
        throw std::invalid_argument("dim_estimate: repeated exponent");
    if (!n1 || !n2)
        throw std::invalid_argument("dim_estimate: empty point set");
    double d = std::log(double(n2) / double(n1)) / std::log(double(s.p)) / double(k2 - k1);
    long r = std::lround(d);
    if (r < 0)
        throw std::domain_error("dim_estimate: counts decrease");
    return int(r);
}

bool ss_intersection_empty(const std::string& x, const EsTable& t)
{
    if (t.g != 3)
        throw std::invalid_argument("ss_intersection_empty: g = 3 only");
    AffineElement e = parse_name(3, x);
    if (p_rank_adm(e) != 0)
        throw std::invalid_argument("ss_intersection_empty: positive p-rank");
    auto it = t.es.find(name(e));
    if (it == t.es.end())
        throw std::out_of_range("ss_intersection_empty: no row for " + x);
    return it->second == std::set<std::string>{"s_23"};
}

AffineElement inversion_partner(const AffineElement& x)
{
    return xi_inverse(x.omega.inverse());
}

std::vector<std::string> es_rows(const EsTable& t)
{
    std::vector<std::string> out;
    for (const auto& a : adm_rank0(t.g))
        out.push_back(a.name);
    return out;
}

namespace {

const std::set<std::string> kEmpty;

const std::set<std::string>& es_of(const EsTable& t, const std::string& x)
{
    auto it = t.es.find(x);
    return it == t.es.end() ? kEmpty : it->second;
}

// Final elements of p-rank 0, the table's columns.
std::vector<std::string> columns(int g)
{
    std::vector<std::string> c;
    for (const auto& w : final_elements(g))
        if (eo_p_rank(w) == 0)
            c.push_back(name(w));
    return c;
}

bool supersingular_row(const EsTable& t, const std::set<std::string>& es)
{
    if (es.empty())
        return false;
    for (const auto& w : final_elements(t.g))
        if (es.count(name(w)) && !eo_in_ss(w))
            return false;
    return true;
}

}  // namespace

bool inversion_symmetry_check(const EsTable& t)
{
    if (t.g < 1 || t.g > 3)
        return false;
    for (const auto& a : adm_rank0(t.g)) {
        std::string y = name(inversion_partner(a.element));
        if (es_of(t, a.name) != es_of(t, y))
            return false;
    }
    return true;
}

std::string es_csv(const EsTable& t)
{
    auto cols = columns(t.g);
    std::ostringstream os;
    os << "x";
    for (const auto& c : cols)
        os << "," << c;
    os << ",supersingular,witnesses\n";
    for (const auto& x : es_rows(t)) {
        const auto& es = es_of(t, x);
        os << x;
        for (const auto& c : cols)
            os << "," << (es.count(c) ? c : "");
        auto it = t.witnesses.find(x);
        os << "," << (supersingular_row(t, es) ? "yes" : "no") << "," << (it == t.witnesses.end() ? 0 : it->second)
           << "\n";
    }
    return os.str();
}

std::string es_markdown(const EsTable& t)
{
    auto cols = columns(t.g);
    // group rows with the same ES set, supersingular block first
    std::map<std::set<std::string>, std::vector<std::string>> groups;
    for (const auto& x : es_rows(t))
        groups[es_of(t, x)].push_back(x);
    std::vector<std::pair<std::vector<int>, std::set<std::string>>> order;
    for (const auto& [es, xs] : groups) {
        int top = -1, mask = 0;
        for (int i = 0; i < int(cols.size()); ++i)
            if (es.count(cols[i])) {
                top = i;
                mask |= 1 << i;
            }
        order.push_back({{supersingular_row(t, es) ? 0 : 1, top, mask}, es});
    }
    std::sort(order.begin(), order.end());
    std::ostringstream os;
    os << "| x |";
    for (const auto& c : cols)
        os << " " << c << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << "---|";
    os << "\n";
    for (const auto& [key, es] : order) {
        std::string xs;
        for (const auto& x : groups[es])
            xs += (xs.empty() ? "" : ", ") + x;
        os << "| " << xs << " |";
        for (const auto& c : cols)
            os << " " << (es.count(c) ? c : "") << " |";
        os << "\n";
    }
    return os.str();
}

std::string es_json(const EsTable& t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& x : es_rows(t)) {
        nlohmann::json r;
        r["x"] = x;
        r["ES"] = es_of(t, x);
        auto it = t.witnesses.find(x);
        r["witness_count"] = it == t.witnesses.end() ? 0 : it->second;
        r["schedule"] = t.ks;
        rows.push_back(r);
    }
    return rows.dump(1) + "\n";
}

}  // namespace iwahori
