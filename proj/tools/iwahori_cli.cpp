#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "iwahori/fixtures.hpp"
#include "iwahori/reference.hpp"
#include "iwahori/strata.hpp"
#include "json.hpp"

using namespace iwahori;
using nlohmann::json;

namespace {

struct Config {
    int g = 3;
    int p = 2;
    std::string k;  // "1..8", "6,8", "4"
    std::string format = "csv";
    std::string cache_dir;
    int jobs = 1;
    std::string out;
    bool quiet = false;
};

struct Mismatch {
    std::string table, row, column, expected, got;
};

int report(const Mismatch& m)
{
    json j{{"status", "FAIL"},
           {"table", m.table},
           {"row", m.row},
           {"column", m.column},
           {"expected", m.expected},
           {"got", m.got}};
    std::cerr << j.dump() << "\n";
    return 1;
}

int parse_exponent(const std::string& s)
{
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw CLI::ValidationError("--k", "not a number: '" + s + "'");
    return k;
}

std::vector<int> parse_k(const std::string& s)
{
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            ks.push_back(parse_exponent(part));
            continue;
        }
        int a = parse_exponent(part.substr(0, dots)), b = parse_exponent(part.substr(dots + 2));
        if (a > b)
            throw CLI::ValidationError("--k", "empty range " + part);
        for (int k = a; k <= b; ++k)
            ks.push_back(k);
    }
    std::set<int> uniq(ks.begin(), ks.end());
    for (int k : uniq)
        if (k < 1)
            throw CLI::ValidationError("--k", "exponents must be positive");
    return {uniq.begin(), uniq.end()};
}

std::vector<int> schedule(const Config& c)
{
    if (!c.k.empty())
        return parse_k(c.k);
    if (c.p == 2)
        return c.g <= 2 ? parse_k("1..4") : parse_k("1..8");
    // largest field that fits
    std::vector<int> ks;
    for (int k = 1, q = c.p; q <= Field::kMaxOrder; ++k, q *= c.p)
        ks.push_back(k);
    return ks;
}

void check_config(const Config& c)
{
    if (!is_prime(c.p))
        throw CLI::ValidationError("--p", "not a prime");
    if (c.g < 1 || c.g > 4)
        throw CLI::ValidationError("--g", "supported range is 1..4");
    if (c.g == 4)
        std::cerr << "warning: g = 4 enumerations are slow\n";
    if (c.jobs < 1)
        throw CLI::ValidationError("--jobs", "must be positive");
}

StrataOptions strata_options(const Config& c)
{
    StrataOptions o;
    o.cache_dir = c.cache_dir;
    if (o.cache_dir.empty())
        if (const char* env = std::getenv("IWAHORI_CACHE_DIR"))
            o.cache_dir = env;
    o.jobs = c.jobs;
    if (!c.quiet)
        o.progress = [](const std::string& s) { std::cerr << s << "\n"; };
    return o;
}

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path)
    {
        if (path.empty() || path == "-")
            return;
        file.open(path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open " + path);
        os = &file;
    }
};

// Small row table rendered as csv, markdown or json.
struct Table {
    std::vector<std::string> head;
    std::vector<std::vector<std::string>> rows;

    std::string render(const std::string& fmt) const
    {
        std::ostringstream os;
        if (fmt == "csv") {
            auto line = [&](const std::vector<std::string>& r) {
                for (std::size_t i = 0; i < r.size(); ++i) {
                    bool quote = r[i].find(',') != std::string::npos;
                    os << (i ? "," : "") << (quote ? "\"" : "") << r[i] << (quote ? "\"" : "");
                }
                os << "\n";
            };
            line(head);
            for (const auto& r : rows)
                line(r);
        } else if (fmt == "md") {
            auto line = [&](const std::vector<std::string>& r) {
                os << "|";
                for (const auto& c : r)
                    os << " " << c << " |";
                os << "\n";
            };
            line(head);
            os << "|";
            for (std::size_t i = 0; i < head.size(); ++i)
                os << "---|";
            os << "\n";
            for (const auto& r : rows)
                line(r);
        } else {
            json a = json::array();
            for (const auto& r : rows) {
                json o;
                for (std::size_t i = 0; i < head.size(); ++i)
                    o[head[i]] = r[i];
                a.push_back(o);
            }
            os << a.dump(1) << "\n";
        }
        return os.str();
    }
};

std::string ints(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ---- adm ---------------------------------------------------------------

int cmd_adm(const Config& c)
{
    auto adm = adm_rank0(c.g);
    Table t{{"name", "lambda", "omega", "length", "p_rank"}, {}};
    std::map<std::string, AdmissibleElement> by_name;
    for (const auto& a : adm) {
        t.rows.push_back({a.name, ints(a.element.lambda), a.element.omega.cycles(), std::to_string(a.length),
                          std::to_string(a.p_rank)});
        by_name[a.name] = a;
    }
    Sink out(c.out);
    *out.os << t.render(c.format);
    if (c.g != 2 && c.g != 3)
        return 0;
    const auto& ref = ref::adm(c.g);
    if (ref.size() != adm.size())
        return report({"adm", "", "rows", std::to_string(ref.size()), std::to_string(adm.size())});
    for (const auto& r : ref) {
        auto it = by_name.find(r.name);
        if (it == by_name.end())
            return report({"adm", r.name, "name", r.name, "missing"});
        if (r.lambda.empty())
            continue;
        if (it->second.element.lambda != r.lambda)
            return report({"adm", r.name, "lambda", ints(r.lambda), ints(it->second.element.lambda)});
        if (it->second.element.omega != SignedPerm::from_cycles(c.g, ref::parse_cycles(r.cycles)))
            return report({"adm", r.name, "omega", r.cycles, it->second.element.omega.cycles()});
    }
    return 0;
}

// ---- eo ----------------------------------------------------------------

int cmd_eo(const Config& c)
{
    auto rows = eo_table(c.g);
    Table t{{"ES", "W_final", "dim", "p-rank", "a-number", "in_S_g"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.psi.str(), r.name, std::to_string(r.dim), std::to_string(r.p_rank),
                          std::to_string(r.a_number), r.in_ss ? "yes" : "no"});
    Sink out(c.out);
    *out.os << t.render(c.format);
    if (c.g != 2 && c.g != 3)
        return 0;
    const auto& ref = ref::eo(c.g);
    if (ref.size() != rows.size())
        return report({"eo", "", "rows", std::to_string(ref.size()), std::to_string(rows.size())});
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto& a = ref[i];
        const auto& b = rows[i];
        std::string row = ints(a.psi);
        if (b.psi.short_form() != a.psi)
            return report({"eo", row, "psi", row, b.psi.str()});
        if (b.name != a.w)
            return report({"eo", row, "w", a.w, b.name});
        if (b.dim != a.dim)
            return report({"eo", row, "dim", std::to_string(a.dim), std::to_string(b.dim)});
        if (b.p_rank != a.p_rank)
            return report({"eo", row, "p_rank", std::to_string(a.p_rank), std::to_string(b.p_rank)});
        if (b.a_number != a.a_number)
            return report({"eo", row, "a_number", std::to_string(a.a_number), std::to_string(b.a_number)});
        if (b.in_ss != a.in_ss)
            return report({"eo", row, "in_ss", a.in_ss ? "yes" : "no", b.in_ss ? "yes" : "no"});
    }
    return 0;
}

// ---- enumerate ---------------------------------------------------------

int cmd_enumerate(const Config& c, const std::string& wname)
{
    auto ks = schedule(c);
    if (ks.size() != 1)
        throw CLI::ValidationError("--k", "enumerate takes a single exponent");
    auto K = Field::get(c.p, ks[0]);
    SignedPerm w = parse_name(c.g, wname).omega;
    if (!is_final(w))
        throw CLI::ValidationError("--w", wname + " is not a final element");
    auto D = standard_module(w, K);
    Sink out(c.out);
    std::uint64_t bad = 0;
    std::size_t n = enumerate_stable(D, [&](const SymplecticFlag& f) {
        json steps = json::array();
        for (const auto& m : f.echelon(*K)) {
            json rows = json::array();
            for (int i = 0; i < m.rows; ++i) {
                json r = json::array();
                for (int j = 0; j < m.cols; ++j)
                    r.push_back(int(m(i, j)));
                rows.push_back(r);
            }
            steps.push_back(rows);
        }
        std::string kr;
        try {
            auto r = kr_type_checked(D, f);
            kr = name(r.x);
            if (!r.verified)
                ++bad;
        } catch (const KrError& e) {
            kr = "?";
            ++bad;
        }
        *out.os << json{{"flag", steps}, {"kr", kr}}.dump() << "\n";
    });
    if (!c.quiet)
        std::cerr << n << " flags\n";
    if (bad)
        return report({"enumerate", name(w), "kr", "verified", std::to_string(bad) + " unverified"});
    return 0;
}

// ---- es ----------------------------------------------------------------

int check_stats(const std::vector<StratumStats>& stats)
{
    for (const auto& s : stats) {
        std::string row = "g" + std::to_string(s.g) + " q=" + std::to_string(s.p) + "^" + std::to_string(s.k) +
                          " " + s.w;
        if (s.kr_errors)
            return report({"stats", row, "kr_errors", "0", std::to_string(s.kr_errors)});
        if (s.unverified)
            return report({"stats", row, "unverified", "0", std::to_string(s.unverified)});
        if (s.nx_violations)
            return report({"stats", row, "nx_violations", "0", std::to_string(s.nx_violations)});
        if (s.prank_mismatch)
            return report({"stats", row, "prank_mismatch", "0", std::to_string(s.prank_mismatch)});
    }
    return 0;
}

std::string names(const std::set<std::string>& s)
{
    std::string out = "{";
    for (const auto& x : s)
        out += (out.size() > 1 ? "," : "") + x;
    return out + "}";
}

int cmd_es(const Config& c)
{
    auto t = es_table(c.g, c.p, schedule(c), strata_options(c));
    Sink out(c.out);
    if (c.format == "md")
        *out.os << es_markdown(t);
    else if (c.format == "json")
        *out.os << es_json(t);
    else
        *out.os << es_csv(t);
    if (int rc = check_stats(t.stats))
        return rc;
    if (c.g != 2 && c.g != 3)
        return 0;
    std::set<std::string> rows;
    for (const auto& x : es_rows(t))
        rows.insert(x);
    for (const auto& [x, es] : ref::es(c.g)) {
        auto it = t.es.find(x);
        std::set<std::string> got = it == t.es.end() ? std::set<std::string>{} : it->second;
        for (const auto& w : final_elements(c.g)) {
            std::string wn = name(w);
            if (es.count(wn) != got.count(wn))
                return report({"es", x, wn, es.count(wn) ? "yes" : "no", got.count(wn) ? "yes" : "no"});
        }
        rows.erase(x);
    }
    if (!rows.empty())
        return report({"es", *rows.begin(), "", "absent", "present"});
    return 0;
}

// ---- dims --------------------------------------------------------------

int cmd_dims(const Config& c)
{
    std::vector<int> even;
    for (int k : schedule(c))
        if (k % 2 == 0)
            even.push_back(k);
    if (even.size() < 2)
        throw CLI::ValidationError("--k", "dims needs two even exponents");
    even.erase(even.begin(), even.end() - 2);
    std::vector<StratumJob> jobs;
    for (int k : even)
        for (const auto& w : final_elements(c.g))
            jobs.push_back({c.g, c.p, k, w});
    auto stats = run_jobs(jobs, strata_options(c));
    Table t{{"w", "dim"}, {}};
    for (int k : even)
        t.head.push_back("N_" + std::to_string(k));
    std::map<std::string, int> got;
    for (const auto& w : final_elements(c.g)) {
        auto s = series_from_stats(stats, name(w));
        got[name(w)] = dim_estimate(s);
        std::vector<std::string> row{name(w), std::to_string(got[name(w)])};
        for (const auto& kn : s.n)
            row.push_back(std::to_string(kn.second));
        t.rows.push_back(row);
    }
    Sink out(c.out);
    *out.os << t.render(c.format);
    if (int rc = check_stats(stats))
        return rc;
    if (c.g != 2 && c.g != 3)
        return 0;
    for (const auto& [w, d] : ref::fiber_dims(c.g))
        if (got[w] != d)
            return report({"dims", w, "dim", std::to_string(d), std::to_string(got[w])});
    return 0;
}

// ---- fixtures ----------------------------------------------------------

const char* kind_name(FixtureKind k)
{
    switch (k) {
    case FixtureKind::Component: return "component";
    case FixtureKind::Intersection: return "intersection";
    case FixtureKind::KSubset: return "K";
    case FixtureKind::LTable: return "L";
    }
    return "?";
}

int cmd_fixtures_list(const Config& c)
{
    Table t{{"name", "g", "w", "kind", "x", "dim"}, {}};
    for (const auto& f : fixture_catalog())
        t.rows.push_back({f.name, std::to_string(f.g), f.w, kind_name(f.kind), f.x,
                          f.dim < 0 ? "" : std::to_string(f.dim)});
    Sink out(c.out);
    *out.os << t.render(c.format);
    return 0;
}

int cmd_fixtures_check(Config c, const std::string& only, bool all_g)
{
    if (c.k.empty())
        c.k = c.p == 2 ? "1..4" : "1..2";
    auto ks = schedule(c);
    Sink out(c.out);
    int rc = 0;
    for (int k : ks) {
        auto K = Field::get(c.p, k);
        std::string q = std::to_string(K->q());
        // enumerated flags per (g, w): key -> kr type name
        std::map<std::string, std::map<std::string, std::string>> enumerated;
        auto flags_of = [&](int g, const std::string& wn) -> const std::map<std::string, std::string>& {
            std::string key = "g" + std::to_string(g) + "/" + wn;
            auto it = enumerated.find(key);
            if (it != enumerated.end())
                return it->second;
            auto D = standard_module(parse_name(g, wn).omega, K);
            auto& m = enumerated[key];
            enumerate_stable(D, [&](const SymplecticFlag& f) { m[f.key(*K)] = name(kr_type(D, f)); });
            return m;
        };
        std::map<std::string, std::set<std::string>> members;  // fixture name -> keys
        std::map<std::string, std::set<std::string>> union_of;  // "g3/s_23" -> component keys
        for (const auto& f : fixture_catalog()) {
            if (!only.empty() && f.name != find_fixture(only).name)
                continue;
            if (!all_g && f.g != c.g)
                continue;
            auto res = eval_fixture(f, K);
            const auto& all = flags_of(f.g, f.w);
            auto D = standard_module(parse_name(f.g, f.w).omega, K);
            std::size_t unstable = 0, wrong = 0;
            auto& keys = members[f.name];
            std::set<std::string> types;
            for (const auto& fl : res.flags) {
                std::string key = fl.key(*K);
                keys.insert(key);
                auto it = all.find(key);
                if (it == all.end() || !is_stable(D, fl)) {
                    ++unstable;
                    continue;
                }
                types.insert(it->second);
                if (!f.x.empty() && it->second != name(parse_name(f.g, f.x)))
                    ++wrong;
            }
            if (f.kind == FixtureKind::Component)
                union_of["g" + std::to_string(f.g) + "/" + f.w].insert(keys.begin(), keys.end());
            std::string status = "ok";
            std::string detail;
            if (unstable) {
                status = "FAIL";
                detail = std::to_string(unstable) + " members not stable";
            } else if (wrong) {
                status = "FAIL";
                detail = std::to_string(wrong) + " members of another KR type";
            } else if (f.kind == FixtureKind::LTable) {
                std::string x = name(parse_name(f.g, f.x));
                for (const auto& [key, t] : all)
                    if (t == x && !keys.count(key)) {
                        status = "FAIL";
                        detail = "misses an enumerated flag of type " + x;
                        break;
                    }
            } else if (f.kind == FixtureKind::Intersection) {
                auto slash = f.name.rfind('/');
                std::string prefix = f.name.substr(0, slash + 1);
                std::stringstream parts(f.name.substr(slash + 1));
                std::string part;
                while (std::getline(parts, part, '&')) {
                    const auto& comp = members[prefix + part];
                    for (const auto& key : keys)
                        if (!comp.count(key)) {
                            status = "FAIL";
                            detail = "member outside " + part;
                            break;
                        }
                }
            }
            if (status == "FAIL" && !rc)
                rc = report({"fixtures", f.name, "q=" + q, "consistent", detail});
            *out.os << json{{"fixture", f.name}, {"q", K->q()},    {"flags", res.flags.size()},
                            {"rejected", res.rejected}, {"types", types}, {"status", status}}
                           .dump()
                    << "\n";
        }
        for (const auto& [gw, keys] : union_of) {
            const auto& all = enumerated[gw];
            bool same = keys.size() == all.size();
            for (const auto& [key, t] : all)
                same = same && keys.count(key);
            *out.os << json{{"union", gw}, {"q", K->q()}, {"flags", keys.size()}, {"enumerated", all.size()},
                            {"status", same ? "ok" : "FAIL"}}
                           .dump()
                    << "\n";
            if (!same && !rc)
                rc = report({"fixtures", "union " + gw, "q=" + q, std::to_string(all.size()),
                             std::to_string(keys.size())});
        }
    }
    return rc;
}

// ---- harashita ---------------------------------------------------------

int cmd_harashita(const Config& c, int want_rank)
{
    if (c.g > 3)
        throw CLI::ValidationError("--g", "harashita sweeps g <= 3");
    auto K = Field::get(c.p, 2);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < c.g; ++i)
        for (int j = 0; j < i; ++j)
            cells.push_back({i, j});
    std::map<std::string, std::uint64_t> hist;
    std::uint64_t forms = 0, invalid = 0, a_bad = 0, v2_bad = 0;
    std::vector<Elem> val(cells.size(), 0);
    for (;;) {
        HarashitaForm h;
        h.g = c.g;
        h.field = K;
        h.eps = default_eps(*K);
        h.T = Mat(c.g, c.g);
        for (std::size_t i = 0; i < cells.size(); ++i)
            h.T(cells[i].first, cells[i].second) = val[i];
        if (harashita_valid(h) && rank(*K, h.T) == want_rank) {
            ++forms;
            auto D = harashita_module(h);
            if (!validate(D).ok) {
                ++invalid;
            } else {
                auto psi = eo_type(D);
                ++hist[psi.str()];
                if (a_number(D) != c.g - want_rank)
                    ++a_bad;
                if (dim_im_v2(D) != psi.psi[c.g])
                    ++v2_bad;
            }
        }
        std::size_t i = 0;
        while (i < val.size() && ++val[i] == K->q())
            val[i++] = 0;
        if (i == val.size())
            break;
    }
    Sink out(c.out);
    *out.os << json{{"g", c.g}, {"p", c.p}, {"rank", want_rank}, {"forms", forms}, {"eo_types", hist},
                    {"invalid", invalid}, {"a_number_mismatch", a_bad}, {"dim_im_v2_mismatch", v2_bad}}
                   .dump()
            << "\n";
    std::string row = "rank " + std::to_string(want_rank);
    if (invalid)
        return report({"harashita", row, "validate", "0", std::to_string(invalid)});
    if (a_bad)
        return report({"harashita", row, "a_number", "g - rank", std::to_string(a_bad) + " mismatches"});
    if (v2_bad)
        return report({"harashita", row, "dim_im_v2", "psi(g)", std::to_string(v2_bad) + " mismatches"});
    if (c.g == 3 && (want_rank == 0 || want_rank == 1)) {
        std::string expect = want_rank == 0 ? "(0,0,0)" : "(0,0,1)";
        for (const auto& [psi, n] : hist)
            if (psi != expect)
                return report({"harashita", row, "eo_type", expect, psi});
    }
    return 0;
}

// ---- census ------------------------------------------------------------

int cmd_census(const Config& c, const std::string& wname)
{
    auto ks = schedule(c);
    Sink out(c.out);
    int rc = 0;
    for (int k : ks) {
        auto r = component_census(parse_name(c.g, wname).omega, c.p, k);
        json j{{"w", r.w}, {"g", r.g}, {"p", r.p}, {"k", r.k}, {"p_rank", r.p_rank}, {"points", r.points}};
        if (r.p_rank > 0) {
            j["labels"] = r.labels;
            j["expected_labels"] = r.expected_labels;
            j["fiber_sizes"] = r.fiber_sizes;
            j["reduced_count"] = r.reduced_count;
            if (r.labels != r.expected_labels && !rc)
                rc = report({"census", r.w, "labels", std::to_string(r.expected_labels), std::to_string(r.labels)});
            if ((r.fiber_sizes.size() != 1 || *r.fiber_sizes.begin() != r.reduced_count) && !rc)
                rc = report({"census", r.w, "fiber", std::to_string(r.reduced_count), "uneven fibers"});
        } else {
            j["components"] = r.components;
            j["uncovered"] = r.uncovered;
        }
        *out.os << j.dump() << "\n";
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Iwahori-level flag enumeration and the tables built on it"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s, bool field) {
        s->add_option("--g", c.g, "genus")->capture_default_str();
        if (field) {
            s->add_option("--p", c.p, "characteristic")->capture_default_str();
            s->add_option("--k", c.k, "exponents of q = p^k: a..b, a,b,c or a");
            s->add_option("--cache-dir", c.cache_dir, "per-(g,p,k,w) result cache; default $IWAHORI_CACHE_DIR");
            s->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
            s->add_flag("--quiet", c.quiet, "no progress on stderr");
        }
        s->add_option("--format", c.format, "csv, md or json")
            ->check(CLI::IsMember({"csv", "md", "json"}))
            ->capture_default_str();
        s->add_option("--out", c.out, "output file (default stdout)");
    };

    auto* adm = app.add_subcommand("adm", "the p-rank 0 admissible set");
    common(adm, false);
    auto* eo = app.add_subcommand("eo", "EO strata and their invariants");
    common(eo, false);
    std::string wname = "id";
    auto* en = app.add_subcommand("enumerate", "stable flags as JSON lines");
    common(en, true);
    en->add_option("--w", wname, "final element")->capture_default_str();
    auto* es = app.add_subcommand("es", "the sets ES(x)");
    common(es, true);
    auto* dims = app.add_subcommand("dims", "fibre dimensions of pi");
    common(dims, true);
    auto* fx = app.add_subcommand("fixtures", "matrix families from the component tables");
    fx->require_subcommand(1);
    auto* fx_list = fx->add_subcommand("list", "catalog");
    common(fx_list, false);
    std::string only;
    auto* fx_check = fx->add_subcommand("check", "evaluate and compare with the enumerator");
    common(fx_check, true);
    fx_check->add_option("--name", only, "a single fixture");
    int hrank = 0;
    auto* har = app.add_subcommand("harashita", "EO types of supersingular normal forms over F_{p^2}");
    common(har, false);
    har->add_option("--p", c.p, "characteristic")->capture_default_str();
    har->add_option("--rank", hrank, "rank of T")->capture_default_str();
    auto* cen = app.add_subcommand("census", "shuffle labels or fixture components met");
    common(cen, true);
    cen->add_option("--w", wname, "final element")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        check_config(c);
        if (*adm)
            return cmd_adm(c);
        if (*eo)
            return cmd_eo(c);
        if (*en)
            return cmd_enumerate(c, wname);
        if (*es)
            return cmd_es(c);
        if (*dims)
            return cmd_dims(c);
        if (*fx_list)
            return cmd_fixtures_list(c);
        if (*fx_check) {
            bool all_g = !fx_check->count("--g");
            if (all_g && !only.empty())
                c.g = find_fixture(only).g;
            return cmd_fixtures_check(c, only, all_g);
        }
        if (*har)
            return cmd_harashita(c, hrank);
        if (*cen)
            return cmd_census(c, wname);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << json{{"status", "ERROR"}, {"what", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
