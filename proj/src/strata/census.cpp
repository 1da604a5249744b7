#include <map>
#include <stdexcept>

#include "iwahori/fixtures.hpp"
#include "iwahori/strata.hpp"

namespace iwahori {

CensusReport component_census(const SignedPerm& w, int p, int k)
{
    auto K = Field::get(p, k);
    auto D = standard_module(w, K);
    CensusReport r;
    r.g = w.g();
    r.p = p;
    r.k = k;
    r.w = name(w);
    r.p_rank = eo_p_rank(w);

    if (r.p_rank > 0) {
        std::map<std::string, std::uint64_t> fibers;
        r.points = enumerate_stable(D, [&](const SymplecticFlag& f) {
            ++fibers[shuffle_decompose(w, *K, f).label.key()];
        });
        r.labels = fibers.size();
        r.expected_labels = binomial(r.g, r.p_rank) * ordinary_count(r.p_rank, p);
        for (const auto& [key, n] : fibers)
            r.fiber_sizes.insert(n);
        r.reduced_count = r.p_rank == r.g ? 1 : enumerate_stable(reduced_stratum(w), K).size();
        return r;
    }

    // flag key -> (component, instance) pairs containing it
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> member;
    for (const auto& fx : fixture_catalog()) {
        if (fx.kind != FixtureKind::Component || fx.g != r.g || fx.w != r.w)
            continue;
        auto res = eval_fixture(fx, K);
        std::string comp = fx.family.empty() ? fx.name : fx.family;
        for (std::size_t i = 0; i < res.flags.size(); ++i) {
            auto& m = member[res.flags[i].key(*K)];
            if (res.tags[i].empty())
                m.push_back({comp, ""});
            for (const auto& t : res.tags[i])
                m.push_back({comp, t});
        }
    }
    std::map<std::string, std::set<std::string>> touched;
    r.points = enumerate_stable(D, [&](const SymplecticFlag& f) {
        auto it = member.find(f.key(*K));
        if (it == member.end()) {
            ++r.uncovered;
            return;
        }
        for (const auto& [comp, tag] : it->second)
            touched[comp].insert(tag);
    });
    for (const auto& [comp, tags] : touched)
        r.components[comp] = tags.size();
    return r;
}

}  // namespace iwahori
