#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "iwahori/strata.hpp"
#include "json.hpp"

namespace iwahori {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_json(const StratumStats& s)
{
    json j;
    j["g"] = s.g;
    j["p"] = s.p;
    j["k"] = s.k;
    j["w"] = s.w;
    j["count"] = s.count;
    j["kr"] = s.kr_hist;
    j["unverified"] = s.unverified;
    j["kr_errors"] = s.kr_errors;
    j["nx_violations"] = s.nx_violations;
    j["prank_mismatch"] = s.prank_mismatch;
    return j.dump();
}

StratumStats stats_from_json(const std::string& text)
{
    json j = json::parse(text);
    StratumStats s;
    s.g = j.at("g");
    s.p = j.at("p");
    s.k = j.at("k");
    s.w = j.at("w");
    s.count = j.at("count");
    s.kr_hist = j.at("kr").get<std::map<std::string, std::uint64_t>>();
    s.unverified = j.at("unverified");
    s.kr_errors = j.at("kr_errors");
    s.nx_violations = j.at("nx_violations");
    s.prank_mismatch = j.at("prank_mismatch");
    return s;
}

StratumStats compute_stats(int g, int p, int k, const SignedPerm& w)
{
    if (w.g() != g)
        throw std::invalid_argument("compute_stats: genus mismatch");
    auto D = standard_module(w, Field::get(p, k));
    StratumStats s;
    s.g = g;
    s.p = p;
    s.k = k;
    s.w = name(w);
    std::map<AffineElement, std::uint64_t> types, bad;
    s.count = enumerate_stable(D, [&](const SymplecticFlag& f) {
        try {
            auto r = kr_type_checked(D, f);
            ++types[r.x];
            if (!r.verified)
                ++bad[r.x];
        } catch (const KrError&) {
            ++s.kr_errors;
        }
    });
    int room = g - eo_a_number(w), rank = eo_p_rank(w);
    for (const auto& [x, n] : types) {
        s.kr_hist[name(x)] += n;
        if (int(n_set(x).size()) > room)
            s.nx_violations += n;
        bool same = false;
        try {
            same = p_rank_adm(x) == rank;
        } catch (const std::invalid_argument&) {
        }
        if (!same)
            s.prank_mismatch += n;
    }
    for (const auto& [x, n] : bad)
        s.unverified += n;
    return s;
}

std::string cache_path(const std::string& dir, int g, int p, int k, const std::string& w)
{
    return (fs::path(dir) / ("g" + std::to_string(g) + "_p" + std::to_string(p) + "_k" + std::to_string(k) + "_" +
                             w + ".json"))
        .string();
}

namespace {

std::mutex cache_mu;

// Payload line, then an FNV-1a digest of it so that hand edits are caught.
std::string cache_text(const StratumStats& s)
{
    std::string body = to_json(s);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : body)
        h = (h ^ c) * 1099511628211ULL;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return body + "\n" + buf + "\n";
}

bool read_cached(const std::string& path, const StratumJob& job, StratumStats& out)
{
    std::string text;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        std::ifstream in(path, std::ios::binary);
        if (!in)
            return false;
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        out = stats_from_json(text.substr(0, text.find('\n')));
    } catch (const std::exception&) {
        return false;  // damaged entry, recompute
    }
    return out.g == job.g && out.p == job.p && out.k == job.k && out.w == name(job.w) &&
           text == cache_text(out);
}

void write_cached(const std::string& path, const StratumStats& s)
{
    std::lock_guard<std::mutex> lock(cache_mu);
    fs::create_directories(fs::path(path).parent_path());
    std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << cache_text(s);
        if (!out)
            throw std::runtime_error("cannot write " + tmp);
    }
    fs::rename(tmp, path);
}

}  // namespace

std::vector<StratumStats> run_jobs(const std::vector<StratumJob>& jobs, const StrataOptions& opt)
{
    std::vector<StratumStats> out(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto say = [&](const std::string& msg) {
        if (!opt.progress)
            return;
        std::lock_guard<std::mutex> lock(mu);
        opt.progress(msg);
    };
    auto worker = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= jobs.size())
                return;
            const auto& job = jobs[i];
            std::string tag = "g" + std::to_string(job.g) + " p" + std::to_string(job.p) + " k" +
                              std::to_string(job.k) + " " + name(job.w);
            try {
                std::string path;
                if (!opt.cache_dir.empty()) {
                    path = cache_path(opt.cache_dir, job.g, job.p, job.k, name(job.w));
                    if (read_cached(path, job, out[i])) {
                        say(tag + ": cached");
                        continue;
                    }
                }
                auto t0 = std::chrono::steady_clock::now();
                out[i] = compute_stats(job.g, job.p, job.k, job.w);
                double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (!path.empty())
                    write_cached(path, out[i]);
                char buf[64];
                std::snprintf(buf, sizeof buf, " (%.1f s)", sec);
                say(tag + ": " + std::to_string(out[i].count) + " flags" + buf);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure)
                    failure = std::current_exception();
                next = jobs.size();
            }
        }
    };
    int n = std::max(1, std::min<int>(opt.jobs, int(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

}  // namespace iwahori
