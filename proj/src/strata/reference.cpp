#include <stdexcept>

#include "iwahori/reference.hpp"

namespace iwahori::ref {

namespace {

const std::vector<int> L000111{0, 0, 0, 1, 1, 1};
const std::vector<int> L001011{0, 0, 1, 0, 1, 1};
const std::vector<int> L010101{0, 1, 0, 1, 0, 1};
const std::vector<int> L011001{0, 1, 1, 0, 0, 1};

std::set<std::string> S(std::initializer_list<const char*> l)
{
    std::set<std::string> s;
    for (auto* c : l)
        s.insert(c);
    return s;
}

void need_g(int g)
{
    if (g != 2 && g != 3)
        throw std::invalid_argument("reference tables exist for g = 2, 3 only");
}

}  // namespace

const std::vector<AdmRow>& adm(int g)
{
    static const std::vector<AdmRow> g2{
        {"tau", {}, ""}, {"s_1.tau", {}, ""}, {"s_2.tau", {}, ""}, {"s_0.tau", {}, ""}, {"s_20.tau", {}, ""},
    };
    // left column, then right column
    static const std::vector<AdmRow> g3{
        {"tau", L000111, "(14)(25)(36)"},
        {"s_0.tau", L000111, "(1463)(25)"},
        {"s_1.tau", L000111, "(142635)"},
        {"s_2.tau", L000111, "(153624)"},
        {"s_3.tau", L001011, "(1364)(25)"},
        {"s_10.tau", L000111, "(145)(263)"},
        {"s_20.tau", L000111, "(153)(246)"},
        {"s_30.tau", L001011, "(13)(25)(46)"},
        {"s_01.tau", L000111, "(142)(356)"},
        {"s_21.tau", L000111, "(15)(26)(34)"},
        {"s_31.tau", L001011, "(135)(264)"},
        {"s_12.tau", L000111, "(16)(24)(35)"},
        {"s_32.tau", L001011, "(154)(236)"},
        {"s_23.tau", L010101, "(124)(365)"},
        {"s_010.tau", L000111, "(145632)"},
        {"s_310.tau", L001011, "(132645)"},
        {"s_120.tau", L000111, "(16)(2453)"},
        {"s_320.tau", L001011, "(154623)"},
        {"s_230.tau", L010101, "(124653)"},
        {"s_201.tau", L000111, "(1562)(34)"},
        {"s_301.tau", L001011, "(135642)"},
        {"s_121.tau", L000111, "(16)(25)(34)"},
        {"s_231.tau", L010101, "(1265)(34)"},
        {"s_312.tau", L001011, "(16)(2354)"},
        {"s_323.tau", L011001, "(123654)"},
        {"s_3010.tau", L001011, "(132)(456)"},
        {"s_3120.tau", L001011, "(16)(23)(45)"},
        {"s_3230.tau", L011001, "(123)(465)"},
        {"s_2301.tau", L010101, "(12)(34)(56)"},
    };
    need_g(g);
    return g == 2 ? g2 : g3;
}

const std::vector<EoRow>& eo(int g)
{
    static const std::vector<EoRow> g2{
        {{0, 0}, "id", 0, 0, 2, true},
        {{0, 1}, "s_2", 1, 0, 1, true},
        {{1, 1}, "s_12", 2, 1, 1, false},
        {{1, 2}, "s_212", 3, 2, 0, false},
    };
    static const std::vector<EoRow> g3{
        {{0, 0, 0}, "id", 0, 0, 3, true},
        {{0, 0, 1}, "s_3", 1, 0, 2, true},
        {{0, 1, 1}, "s_23", 2, 0, 2, false},
        {{0, 1, 2}, "s_323", 3, 0, 1, false},
        {{1, 1, 1}, "s_123", 3, 1, 2, false},
        {{1, 1, 2}, "s_3123", 4, 1, 1, false},
        {{1, 2, 2}, "s_23123", 5, 2, 1, false},
        {{1, 2, 3}, "s_323123", 6, 3, 0, false},
    };
    need_g(g);
    return g == 2 ? g2 : g3;
}

const std::vector<std::pair<std::string, std::set<std::string>>>& es(int g)
{
    static const std::vector<std::pair<std::string, std::set<std::string>>> g2{
        {"tau", S({"id"})},
        {"s_1.tau", S({"id"})},
        {"s_2.tau", S({"s_2"})},
        {"s_0.tau", S({"s_2"})},
        {"s_20.tau", S({"id", "s_2"})},
    };
    static const std::vector<std::pair<std::string, std::set<std::string>>> g3{
        {"tau", S({"id"})},
        {"s_1.tau", S({"id"})},
        {"s_2.tau", S({"id"})},
        {"s_21.tau", S({"id"})},
        {"s_12.tau", S({"id"})},
        {"s_121.tau", S({"id"})},
        {"s_3.tau", S({"s_3"})},
        {"s_0.tau", S({"s_3"})},
        {"s_30.tau", S({"id", "s_3"})},
        {"s_10.tau", S({"s_23"})},
        {"s_23.tau", S({"s_23"})},
        {"s_20.tau", S({"s_23"})},
        {"s_31.tau", S({"s_23"})},
        {"s_01.tau", S({"s_23"})},
        {"s_32.tau", S({"s_23"})},
        {"s_310.tau", S({"id", "s_23"})},
        {"s_320.tau", S({"id", "s_23"})},
        {"s_3120.tau", S({"id", "s_3", "s_23"})},
        {"s_120.tau", S({"s_3", "s_23"})},
        {"s_312.tau", S({"s_3", "s_23"})},
        {"s_201.tau", S({"s_3", "s_23"})},
        {"s_231.tau", S({"s_3", "s_23"})},
        {"s_010.tau", S({"s_323"})},
        {"s_323.tau", S({"s_323"})},
        {"s_301.tau", S({"s_323"})},
        {"s_230.tau", S({"s_323"})},
        {"s_2301.tau", S({"id", "s_3", "s_323"})},
        {"s_3010.tau", S({"s_23", "s_323"})},
        {"s_3230.tau", S({"s_23", "s_323"})},
    };
    need_g(g);
    return g == 2 ? g2 : g3;
}

const std::vector<std::pair<std::string, int>>& fiber_dims(int g)
{
    static const std::vector<std::pair<std::string, int>> g2{
        {"id", 1}, {"s_2", 1}, {"s_12", 0}, {"s_212", 0}};
    static const std::vector<std::pair<std::string, int>> g3{
        {"id", 3}, {"s_3", 2}, {"s_23", 2}, {"s_323", 1},
        {"s_123", 1}, {"s_3123", 1}, {"s_23123", 0}, {"s_323123", 0}};
    need_g(g);
    return g == 2 ? g2 : g3;
}

SsMeet ss_meet(const std::string& x)
{
    // upper block of the ES table: contained in the supersingular locus
    static const std::set<std::string> contained = S({"tau", "s_1.tau", "s_2.tau", "s_21.tau", "s_12.tau",
                                                      "s_121.tau", "s_3.tau", "s_0.tau", "s_30.tau"});
    // rows of the dimension table for KR_x ∩ S_I
    static const std::set<std::string> partial =
        S({"s_310.tau", "s_320.tau", "s_3120.tau", "s_2301.tau", "s_120.tau", "s_312.tau", "s_201.tau",
           "s_231.tau", "s_010.tau", "s_323.tau", "s_301.tau", "s_230.tau", "s_3010.tau", "s_3230.tau"});
    static const std::set<std::string> empty =
        S({"s_10.tau", "s_23.tau", "s_20.tau", "s_31.tau", "s_01.tau", "s_32.tau"});
    if (contained.count(x))
        return SsMeet::Contained;
    if (partial.count(x))
        return SsMeet::Partial;
    if (empty.count(x))
        return SsMeet::Empty;
    throw std::out_of_range("ss_meet: not a p-rank 0 element for g = 3: " + x);
}

std::vector<std::vector<int>> parse_cycles(const std::string& s)
{
    std::vector<std::vector<int>> out;
    std::vector<int>* cur = nullptr;
    for (char c : s) {
        if (c == '(') {
            out.emplace_back();
            cur = &out.back();
        } else if (c == ')') {
            cur = nullptr;
        } else if (c >= '1' && c <= '9' && cur) {
            cur->push_back(c - '0');
        } else if (c != ' ') {
            throw std::invalid_argument("parse_cycles: bad character in " + s);
        }
    }
    return out;
}

}  // namespace iwahori::ref
