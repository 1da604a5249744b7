#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "iwahori/flags.hpp"

namespace iwahori {

enum class FixtureKind {
    Component,     // irreducible component of Flag^{perp,F,V}_w
    Intersection,  // listed intersection of components
    KSubset,       // explicit nonempty subset of L(x, id)
    LTable,        // complete parametrization of L(x, w)
};

// Field element bound to the field of the running evaluation.
struct Fx {
    Elem v = 0;
    Fx() = default;
    Fx(int n);  // NOLINT: integer literals inside matrix columns
    static Fx raw(Elem e)
    {
        Fx x;
        x.v = e;
        return x;
    }
};
Fx operator+(Fx a, Fx b);
Fx operator-(Fx a, Fx b);
Fx operator-(Fx a);
Fx operator*(Fx a, Fx b);
// a^{p^e}, e may be negative.
Fx fr(Fx a, int e);
Fx power(Fx a, long long n);

class FixtureCtx {
public:
    FixtureCtx(FieldPtr field, int g);
    ~FixtureCtx();
    FixtureCtx(const FixtureCtx&) = delete;
    FixtureCtx& operator=(const FixtureCtx&) = delete;

    const Field& K() const { return *field_; }
    int p() const { return field_->p(); }
    std::vector<Fx> all() const;
    std::vector<Fx> units() const;
    bool in_subfield(Fx a, int d) const;
    // Vectors of F^n other than multiples of `line` (pass zero for F^n - {0}).
    std::vector<std::vector<Fx>> vectors_off_line(int n, const std::vector<Fx>& line) const;
    // One n x r matrix (as columns) per partial flag of length r in F^n.
    std::vector<std::vector<std::vector<Fx>>> flags(int n, int r) const;

    // Columns c_1..c_g of a 2g x g matrix; skipped unless full rank and isotropic.
    void emit(const std::vector<std::vector<Fx>>& cols, const std::string& tag = "");

    std::vector<SymplecticFlag> flags_out;
    std::vector<std::set<std::string>> tags_out;
    std::size_t rejected = 0;

private:
    FieldPtr field_;
    int g_;
    std::map<std::string, std::size_t> index_;
    const Field* saved_ = nullptr;
};

struct Fixture {
    std::string name;     // "Fib3/id/T_infty", "KRandFib/L(s_0.tau,s_3)"
    int g = 0;
    std::string w;        // base final element
    FixtureKind kind = FixtureKind::Component;
    std::string x;        // KR type for K and L fixtures
    int dim = -1;         // printed dimension, -1 if none
    std::string family;   // components sharing a family label are counted per tag
    std::function<void(FixtureCtx&)> gen;
};

const std::vector<Fixture>& fixture_catalog();
// Accepts "τ", "s_{310}" and "∞" spellings. Throws std::out_of_range.
const Fixture& find_fixture(const std::string& name);

struct FixtureResult {
    std::vector<SymplecticFlag> flags;          // deduplicated
    std::vector<std::set<std::string>> tags;    // instance tags per flag
    std::size_t rejected = 0;                   // parameter tuples outside FM^{perp}
};
FixtureResult eval_fixture(const Fixture& f, FieldPtr field);
FixtureResult eval_fixture(const std::string& name, FieldPtr field);

}  // namespace iwahori
