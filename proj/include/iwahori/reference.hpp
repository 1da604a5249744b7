#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

// Published tables, transcribed for comparison. Names use the
// library spelling ("s_310.tau", "s_23", "id").
namespace iwahori::ref {

struct AdmRow {
    std::string name;
    std::vector<int> lambda;  // empty when only the name is listed (g = 2)
    std::string cycles;       // "(1463)(25)"
};
const std::vector<AdmRow>& adm(int g);

struct EoRow {
    std::vector<int> psi;  // short form
    std::string w;
    int dim, p_rank, a_number;
    bool in_ss;
};
const std::vector<EoRow>& eo(int g);

// x -> ES(x), rows in printed order.
const std::vector<std::pair<std::string, std::set<std::string>>>& es(int g);

// Fibre dimension of pi over EO_w.
const std::vector<std::pair<std::string, int>>& fiber_dims(int g);

// g = 3: how KR_x meets the supersingular locus.
enum class SsMeet { Contained, Partial, Empty };
SsMeet ss_meet(const std::string& x);

// Parses "(1463)(25)" into cycles.
std::vector<std::vector<int>> parse_cycles(const std::string& s);

}  // namespace iwahori::ref
