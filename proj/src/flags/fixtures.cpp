#include "iwahori/fixtures.hpp"

#include <stdexcept>

namespace iwahori {

namespace {

thread_local const Field* tl_field = nullptr;

const Field& cur()
{
    if (!tl_field)
        throw std::logic_error("Fx used outside fixture evaluation");
    return *tl_field;
}

using Col = std::vector<Fx>;
using Cols = std::vector<Col>;

}  // namespace

Fx::Fx(int n) : v(cur().from_int(n)) {}
Fx operator+(Fx a, Fx b) { return Fx::raw(cur().add(a.v, b.v)); }
Fx operator-(Fx a, Fx b) { return Fx::raw(cur().sub(a.v, b.v)); }
Fx operator-(Fx a) { return Fx::raw(cur().neg(a.v)); }
Fx operator*(Fx a, Fx b) { return Fx::raw(cur().mul(a.v, b.v)); }
Fx fr(Fx a, int e) { return Fx::raw(cur().frob(a.v, e)); }
Fx power(Fx a, long long n) { return Fx::raw(cur().pow(a.v, n)); }

FixtureCtx::FixtureCtx(FieldPtr field, int g) : field_(std::move(field)), g_(g)
{
    saved_ = tl_field;
    tl_field = field_.get();
}

FixtureCtx::~FixtureCtx() { tl_field = saved_; }

std::vector<Fx> FixtureCtx::all() const
{
    std::vector<Fx> out;
    for (int e = 0; e < field_->q(); ++e)
        out.push_back(Fx::raw(Elem(e)));
    return out;
}

std::vector<Fx> FixtureCtx::units() const
{
    std::vector<Fx> out;
    for (int e = 1; e < field_->q(); ++e)
        out.push_back(Fx::raw(Elem(e)));
    return out;
}

bool FixtureCtx::in_subfield(Fx a, int d) const { return field_->in_subfield(a.v, d); }

std::vector<std::vector<Fx>> FixtureCtx::vectors_off_line(int n, const std::vector<Fx>& line) const
{
    int q = field_->q();
    long long total = 1;
    for (int i = 0; i < n; ++i)
        total *= q;
    std::vector<std::vector<Fx>> out;
    for (long long code = 0; code < total; ++code) {
        std::vector<Fx> v(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            v[i] = Fx::raw(Elem(c % q));
            c /= q;
        }
        // v in F*line iff the 2x2 minors of (line, v) vanish.
        bool on = true;
        for (int i = 0; i < n && on; ++i)
            for (int j = i + 1; j < n && on; ++j)
                if (field_->mul(line[i].v, v[j].v) != field_->mul(line[j].v, v[i].v))
                    on = false;
        bool line_zero = true;
        for (const auto& x : line)
            line_zero = line_zero && !x.v;
        bool v_zero = true;
        for (const auto& x : v)
            v_zero = v_zero && !x.v;
        if (v_zero || (!line_zero && on))
            continue;
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<std::vector<Fx>>> FixtureCtx::flags(int n, int r) const
{
    int q = field_->q();
    std::vector<std::vector<std::vector<Fx>>> out;
    std::vector<std::vector<Fx>> cols;
    std::vector<bool> pivot(n, false);
    std::function<void()> rec = [&]() {
        if (int(cols.size()) == r) {
            out.push_back(cols);
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (pivot[t])
                continue;
            std::vector<int> freepos;
            for (int j = t + 1; j < n; ++j)
                if (!pivot[j])
                    freepos.push_back(j);
            long long total = 1;
            for (std::size_t i = 0; i < freepos.size(); ++i)
                total *= q;
            for (long long code = 0; code < total; ++code) {
                std::vector<Fx> v(n, Fx::raw(0));
                v[t] = Fx::raw(1);
                long long c = code;
                for (int j : freepos) {
                    v[j] = Fx::raw(Elem(c % q));
                    c /= q;
                }
                pivot[t] = true;
                cols.push_back(v);
                rec();
                cols.pop_back();
                pivot[t] = false;
            }
        }
    };
    rec();
    return out;
}

void FixtureCtx::emit(const std::vector<std::vector<Fx>>& cols, const std::string& tag)
{
    int n = 2 * g_;
    if (int(cols.size()) != g_)
        throw std::logic_error("fixture: wrong column count");
    SymplecticFlag f{g_, Mat(0, n)};
    for (const auto& c : cols) {
        if (int(c.size()) != n)
            throw std::logic_error("fixture: wrong column length");
        Elem row[kMaxDim] = {0};
        for (int i = 0; i < n; ++i)
            row[i] = c[i].v;
        f.basis.append_row(row);
    }
    if (!f.isotropic(*field_, SymplecticForm::standard(*field_, g_))) {
        ++rejected;
        return;
    }
    auto key = f.key(*field_);
    auto it = index_.find(key);
    if (it == index_.end()) {
        index_.emplace(key, flags_out.size());
        flags_out.push_back(f);
        tags_out.push_back({tag});
    } else {
        tags_out[it->second].insert(tag);
    }
}

namespace {

// Unit column e_i (1-based) of length n.
Col e(int n, int i)
{
    Col c(n, Fx::raw(0));
    c[i - 1] = Fx::raw(1);
    return c;
}

Col col(std::initializer_list<Fx> xs) { return Col(xs); }

std::string tag_of(const std::vector<Fx>& xs)
{
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(int(xs[i].v));
    return s + ")";
}

// 2x2 determinant of rows i, j of a 3x2 matrix given by columns.
Fx minor2(const Cols& B, int i, int j) { return B[0][i] * B[1][j] - B[0][j] * B[1][i]; }

void add_fib2(std::vector<Fixture>& v)
{
    const int n = 4;
    v.push_back({"Fib2/id/Z", 2, "id", FixtureKind::Component, "", 1, "Z", [](FixtureCtx& c) {
                     for (const auto& F : c.flags(2, 2))
                         c.emit({col({0, 0, F[0][0], F[0][1]}), col({0, 0, F[1][0], F[1][1]})});
                 }});
    v.push_back({"Fib2/id/Z_x", 2, "id", FixtureKind::Component, "", 1, "Z_x", [](FixtureCtx& c) {
                     for (Fx x : c.all()) {
                         if (fr(x, 1).v != (-x).v)
                             continue;
                         for (const auto& ab : c.vectors_off_line(2, {0, 0}))
                             c.emit({col({0, 0, x, 1}), col({ab[0], -(x * ab[0]), ab[1], 0})}, tag_of({x}));
                     }
                 }});
    v.push_back({"Fib2/id/Z_infty", 2, "id", FixtureKind::Component, "", 1, "Z_x", [](FixtureCtx& c) {
                     for (const auto& ab : c.vectors_off_line(2, {0, 0}))
                         c.emit({e(n, 3), col({0, ab[0], 0, ab[1]})}, "infty");
                 }});
    v.push_back({"Fib2/s2", 2, "s_2", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& ab : c.vectors_off_line(2, {0, 0}))
                         c.emit({e(n, 4), col({ab[0], 0, ab[1], 0})});
                 }});
}

// Points (x,y) of F_{p^2}^2 with x^p + x + y^{p+1} = 0 that lie in F_q.
std::vector<std::pair<Fx, Fx>> set_I(FixtureCtx& c)
{
    std::vector<std::pair<Fx, Fx>> out;
    int p = c.p();
    for (Fx x : c.all()) {
        if (!c.in_subfield(x, 2))
            continue;
        for (Fx y : c.all()) {
            if (!c.in_subfield(y, 2))
                continue;
            if ((fr(x, 1) + x + power(y, p + 1)).v == 0)
                out.push_back({x, y});
        }
    }
    return out;
}

// Partial flags B (line in plane) of F^3 with det B_1^p det B_3 + det B_2^{p+1} + det B_1 det B_3^p = 0.
std::vector<Cols> z_planes(FixtureCtx& c)
{
    std::vector<Cols> out;
    int p = c.p();
    for (const auto& B : c.flags(3, 2)) {
        Fx d1 = minor2(B, 1, 2), d2 = minor2(B, 0, 2), d3 = minor2(B, 0, 1);
        if ((fr(d1, 1) * d3 + power(d2, p + 1) + d1 * fr(d3, 1)).v == 0)
            out.push_back(B);
    }
    return out;
}


std::vector<Col> all_vectors(FixtureCtx& c, int n)
{
    std::vector<Fx> zero(n, Fx::raw(0));
    auto out = c.vectors_off_line(n, zero);
    out.push_back(zero);
    return out;
}

Col lower6(const Col& b) { return col({0, 0, 0, b[0], b[1], b[2]}); }

void add_fib3_id(std::vector<Fixture>& v)
{
    const int n = 6;
    v.push_back({"Fib3/id/Y", 3, "id", FixtureKind::Component, "", 3, "Y", [](FixtureCtx& c) {
                     for (const auto& F : c.flags(3, 3))
                         c.emit({lower6(F[0]), lower6(F[1]), lower6(F[2])});
                 }});
    v.push_back({"Fib3/id/Z", 3, "id", FixtureKind::Component, "", 3, "Z", [](FixtureCtx& c) {
                     for (const auto& B : z_planes(c)) {
                         Fx d1 = minor2(B, 1, 2), d2 = minor2(B, 0, 2), d3 = minor2(B, 0, 1);
                         for (const auto& w : all_vectors(c, 3)) {
                             c.emit({lower6(B[0]), lower6(B[1]), col({d1, -d2, d3, w[0], w[1], w[2]})});
                             c.emit({lower6(B[0]), lower6(B[1]), lower6(w)});
                         }
                     }
                 }});
    v.push_back({"Fib3/id/T_infty", 3, "id", FixtureKind::Component, "", 2, "T", [](FixtureCtx& c) {
                     for (const auto& abc : c.vectors_off_line(3, {0, 1, 0}))
                         c.emit({e(n, 4), col({0, 0, abc[0], 0, abc[1], abc[2]}), e(n, 5)}, "infty");
                     for (const auto& ab : c.vectors_off_line(2, {0, 0}))
                         c.emit({e(n, 4), e(n, 5), col({0, 0, ab[0], 0, 0, ab[1]})}, "infty");
                 }});
    v.push_back({"Fib3/id/T_xy", 3, "id", FixtureKind::Component, "", 2, "T", [](FixtureCtx& c) {
                     for (auto [x, y] : set_I(c)) {
                         Col c1 = col({0, 0, 0, fr(x, 1), fr(y, 1), 1});
                         Col m = col({0, 0, 0, -y, 1, 0});
                         std::string t = tag_of({x, y});
                         for (const auto& abc : c.vectors_off_line(3, {0, -y, 1})) {
                             Fx a = abc[0];
                             c.emit({c1, col({a, y * a, x * a, abc[1], abc[2], 0}), m}, t);
                         }
                         for (const auto& ab : c.vectors_off_line(2, {0, 0})) {
                             Fx al = ab[0];
                             c.emit({c1, m, col({al, y * al, x * al, ab[1], 0, 0})}, t);
                         }
                     }
                 }});

    // Listed intersections of the components above.
    v.push_back({"Fib3/id/Y&Z", 3, "id", FixtureKind::Intersection, "", 2, "", [](FixtureCtx& c) {
                     for (const auto& B : z_planes(c))
                         for (const auto& w : all_vectors(c, 3))
                             c.emit({lower6(B[0]), lower6(B[1]), lower6(w)});
                 }});
    v.push_back({"Fib3/id/Y&T_infty", 3, "id", FixtureKind::Intersection, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& F : c.flags(2, 2))
                         c.emit({e(n, 4), col({0, 0, 0, 0, F[0][0], F[0][1]}), col({0, 0, 0, 0, F[1][0], F[1][1]})},
                                "infty");
                 }});
    v.push_back({"Fib3/id/Y&T_xy", 3, "id", FixtureKind::Intersection, "", 1, "", [](FixtureCtx& c) {
                     for (auto [x, y] : set_I(c))
                         for (const auto& F : c.flags(2, 2))
                             c.emit({col({0, 0, 0, fr(x, 1), fr(y, 1), 1}), col({0, 0, 0, F[0][0], F[0][1], 0}),
                                     col({0, 0, 0, F[1][0], F[1][1], 0})},
                                    tag_of({x, y}));
                 }});
    v.push_back({"Fib3/id/Z&T_infty", 3, "id", FixtureKind::Intersection, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& ab : c.vectors_off_line(2, {0, 0}))
                         c.emit({e(n, 4), e(n, 5), col({0, 0, ab[0], 0, 0, ab[1]})}, "infty");
                 }});
    v.push_back({"Fib3/id/Z&T_xy", 3, "id", FixtureKind::Intersection, "", 1, "", [](FixtureCtx& c) {
                     for (auto [x, y] : set_I(c))
                         for (const auto& ab : c.vectors_off_line(2, {0, 0})) {
                             Fx al = ab[0];
                             c.emit({col({0, 0, 0, fr(x, 1), fr(y, 1), 1}), col({0, 0, 0, -y, 1, 0}),
                                     col({al, y * al, x * al, ab[1], 0, 0})},
                                    tag_of({x, y}));
                         }
                 }});
    v.push_back({"Fib3/id/Y&Z&T_infty", 3, "id", FixtureKind::Intersection, "", 0, "", [](FixtureCtx& c) {
                     c.emit({e(n, 4), e(n, 5), e(n, 6)}, "infty");
                 }});
    v.push_back({"Fib3/id/Y&Z&T_xy", 3, "id", FixtureKind::Intersection, "", 0, "", [](FixtureCtx& c) {
                     for (auto [x, y] : set_I(c))
                         c.emit({col({0, 0, 0, fr(x, 1), fr(y, 1), 1}), col({0, 0, 0, -y, 1, 0}), e(n, 4)},
                                tag_of({x, y}));
                 }});
}

// Flags of the plane spanned by e_i, e_j (1-based) in F^6, as two columns.
std::vector<Cols> plane_flags(FixtureCtx& c, int i, int j)
{
    std::vector<Cols> out;
    for (const auto& F : c.flags(2, 2)) {
        Col a(6, Fx::raw(0)), b(6, Fx::raw(0));
        a[i - 1] = F[0][0];
        a[j - 1] = F[0][1];
        b[i - 1] = F[1][0];
        b[j - 1] = F[1][1];
        out.push_back({a, b});
    }
    return out;
}

// (alpha, 0, .., beta, ..) with alpha at row i and beta at row j.
std::vector<Col> pencil(FixtureCtx& c, int i, int j)
{
    std::vector<Col> out;
    for (const auto& ab : c.vectors_off_line(2, {0, 0})) {
        Col v(6, Fx::raw(0));
        v[i - 1] = ab[0];
        v[j - 1] = ab[1];
        out.push_back(v);
    }
    return out;
}

void add_fib3_rest(std::vector<Fixture>& v)
{
    const int n = 6;
    // X is the same plane for s_3 and s_23.
    auto plane_x = [](FixtureCtx& c) {
        for (const auto& P : plane_flags(c, 5, 6))
            for (const auto& l : pencil(c, 1, 4))
                c.emit({P[0], P[1], l});
    };
    v.push_back({"Fib3/s3/X", 3, "s_3", FixtureKind::Component, "", 2, "", plane_x});
    v.push_back({"Fib3/s3/Y", 3, "s_3", FixtureKind::Component, "", 2, "", [](FixtureCtx& c) {
                     for (const auto& abc : c.vectors_off_line(3, {0, 0, 1}))
                         c.emit({e(n, 6), col({abc[0], 0, 0, abc[1], abc[2], 0}), e(n, 5)});
                     for (const auto& l : pencil(c, 1, 4))
                         c.emit({e(n, 6), e(n, 5), l});
                 }});
    v.push_back({"Fib3/s23/X", 3, "s_23", FixtureKind::Component, "", 2, "", plane_x});
    v.push_back({"Fib3/s23/Y1", 3, "s_23", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& P : plane_flags(c, 4, 6))
                         c.emit({e(n, 5), P[0], P[1]});
                 }});
    v.push_back({"Fib3/s23/Y2", 3, "s_23", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& P : plane_flags(c, 1, 5))
                         c.emit({e(n, 6), P[0], P[1]});
                 }});
    v.push_back({"Fib3/s23/Z1", 3, "s_23", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& l : pencil(c, 2, 5))
                         c.emit({e(n, 6), e(n, 1), l});
                 }});
    v.push_back({"Fib3/s23/Z2", 3, "s_23", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& l : pencil(c, 3, 6))
                         c.emit({e(n, 5), e(n, 4), l});
                 }});
    v.push_back({"Fib3/s323/X", 3, "s_323", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& l : pencil(c, 2, 5))
                         c.emit({e(n, 6), e(n, 1), l});
                 }});
    v.push_back({"Fib3/s323/Y", 3, "s_323", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& l : pencil(c, 1, 4))
                         c.emit({e(n, 6), e(n, 5), l});
                 }});
    v.push_back({"Fib3/s323/Z", 3, "s_323", FixtureKind::Component, "", 1, "", [](FixtureCtx& c) {
                     for (const auto& P : plane_flags(c, 1, 5))
                         c.emit({e(n, 6), P[0], P[1]});
                 }});
}

// Roots in F_q of T^{p^a} + T^{p^b} + c.
std::vector<Fx> roots(FixtureCtx& c, int a, int b, Fx k)
{
    std::vector<Fx> out;
    for (Fx t : c.all())
        if ((fr(t, a) + fr(t, b) + k).v == 0)
            out.push_back(t);
    return out;
}

void add_k(std::vector<Fixture>& v)
{
    const int n = 6;
    v.push_back({"KRandFib/K(s_30.tau)", 3, "id", FixtureKind::KSubset, "s_30.tau", -1, "",
                 [](FixtureCtx& c) { c.emit({e(n, 6), e(n, 5), e(n, 1)}); }});
    v.push_back({"KRandFib/K(s_3120.tau)", 3, "id", FixtureKind::KSubset, "s_3120.tau", -1, "",
                 [](FixtureCtx& c) { c.emit({e(n, 5), e(n, 6), e(n, 1)}); }});
    v.push_back({"KRandFib/K(s_2301.tau)", 3, "id", FixtureKind::KSubset, "s_2301.tau", -1, "",
                 [](FixtureCtx& c) { c.emit({e(n, 6), e(n, 1), e(n, 5)}); }});
    v.push_back({"KRandFib/K(s_310.tau)", 3, "id", FixtureKind::KSubset, "s_310.tau", 2, "", [](FixtureCtx& c) {
                     int p = c.p();
                     for (Fx b2 : c.all()) {
                         if (c.in_subfield(b2, 2))
                             continue;
                         for (Fx b1 : roots(c, 1, 0, power(b2, p * (p + 1))))
                             for (Fx al : c.all())
                                 c.emit({col({0, 0, 0, b1, -fr(b2, 1), 1}), col({0, 0, 0, b2, 1, 0}),
                                         col({-1, b2, power(b2, p + 1) + b1, al, 0, 0})});
                     }
                 }});
    v.push_back({"KRandFib/K(s_320.tau)", 3, "id", FixtureKind::KSubset, "s_320.tau", 2, "", [](FixtureCtx& c) {
                     int p = c.p();
                     for (Fx b2 : c.all()) {
                         if (c.in_subfield(b2, 2))
                             continue;
                         for (Fx b1 : roots(c, 2, 1, power(b2, p + 1)))
                             for (Fx al : c.all())
                                 c.emit({col({0, 0, 0, b1, -fr(b2, -1), 1}), col({0, 0, 0, b2, 1, 0}),
                                         col({-1, b2, fr(b2, -1) * b2 + b1, al, 0, 0})});
                     }
                 }});
}

using Gen = std::function<void(FixtureCtx&)>;

void add_l(std::vector<Fixture>& v, const std::string& w, const std::string& x, int dim, Gen gen)
{
    v.push_back({"KRandFib/L(" + x + "," + w + ")", 3, w, FixtureKind::LTable, x, dim, "", std::move(gen)});
}

void add_l_tables(std::vector<Fixture>& v)
{
    auto E = [](int i) { return e(6, i); };
    // w = s_3
    add_l(v, "s_3", "s_120.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            c.emit({col({0, 0, 0, 0, 1, cc}), E(6), E(4)});
    });
    add_l(v, "s_3", "s_3120.tau", 2, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            for (Fx a : c.units())
                c.emit({col({0, 0, 0, 0, 1, cc}), E(6), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_3", "s_312.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            c.emit({col({0, 0, 0, 0, 1, cc}), E(6), E(1)});
    });
    add_l(v, "s_3", "s_201.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            c.emit({E(6), col({0, 0, 0, 1, cc, 0}), E(5)});
    });
    add_l(v, "s_3", "s_2301.tau", 2, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            for (Fx a : c.units())
                c.emit({E(6), col({a, 0, 0, 1, cc, 0}), E(5)});
    });
    add_l(v, "s_3", "s_231.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.all())
            c.emit({E(6), col({1, 0, 0, 0, cc, 0}), E(5)});
    });
    add_l(v, "s_3", "s_30.tau", 1, [E](FixtureCtx& c) {
        for (Fx a : c.units())
            c.emit({E(6), E(5), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_3", "s_0.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(4)}); });
    add_l(v, "s_3", "s_3.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(1)}); });

    // w = s_23
    add_l(v, "s_23", "s_20.tau", 0, [E](FixtureCtx& c) { c.emit({E(5), E(6), E(4)}); });
    add_l(v, "s_23", "s_320.tau", 1, [E](FixtureCtx& c) {
        for (Fx a : c.units())
            c.emit({E(5), E(6), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_23", "s_120.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.units())
            c.emit({col({0, 0, 0, 0, 1, cc}), E(6), E(4)});
    });
    add_l(v, "s_23", "s_3120.tau", 2, [E](FixtureCtx& c) {
        for (Fx cc : c.units())
            for (Fx a : c.units())
                c.emit({col({0, 0, 0, 0, 1, cc}), E(6), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_23", "s_312.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.units())
            c.emit({col({0, 0, 0, 0, 1, cc}), E(6), E(1)});
    });
    add_l(v, "s_23", "s_32.tau", 0, [E](FixtureCtx& c) { c.emit({E(5), E(6), E(1)}); });
    add_l(v, "s_23", "s_310.tau", 1, [E](FixtureCtx& c) {
        for (Fx a : c.units())
            c.emit({E(6), E(5), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_23", "s_10.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(4)}); });
    add_l(v, "s_23", "s_31.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(1)}); });
    add_l(v, "s_23", "s_01.tau", 0, [E](FixtureCtx& c) { c.emit({E(5), E(4), E(6)}); });
    add_l(v, "s_23", "s_201.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.units())
            c.emit({E(5), col({0, 0, 0, 1, 0, cc}), E(6)});
    });
    add_l(v, "s_23", "s_23.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(1), E(5)}); });
    add_l(v, "s_23", "s_231.tau", 1, [E](FixtureCtx& c) {
        for (Fx cc : c.units())
            c.emit({E(6), col({1, 0, 0, 0, cc, 0}), E(5)});
    });
    add_l(v, "s_23", "s_3230.tau", 1, [E](FixtureCtx& c) {
        for (Fx b : c.all())
            c.emit({E(6), E(1), col({0, 1, 0, 0, b, 0})});
    });
    add_l(v, "s_23", "s_3010.tau", 1, [E](FixtureCtx& c) {
        for (Fx b : c.all())
            c.emit({E(5), E(4), col({0, 0, 1, 0, 0, b})});
    });

    // w = s_323
    add_l(v, "s_323", "s_3230.tau", 1, [E](FixtureCtx& c) {
        for (Fx b : c.units())
            c.emit({E(6), E(1), col({0, 1, 0, 0, b, 0})});
    });
    add_l(v, "s_323", "s_323.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(1), E(2)}); });
    add_l(v, "s_323", "s_230.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(1), E(5)}); });
    add_l(v, "s_323", "s_3010.tau", 1, [E](FixtureCtx& c) {
        for (Fx a : c.units())
            c.emit({E(6), E(5), col({a, 0, 0, 1, 0, 0})});
    });
    add_l(v, "s_323", "s_010.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(4)}); });
    add_l(v, "s_323", "s_301.tau", 0, [E](FixtureCtx& c) { c.emit({E(6), E(5), E(1)}); });
    add_l(v, "s_323", "s_2301.tau", 1, [E](FixtureCtx& c) {
        for (Fx a : c.units())
            c.emit({E(6), col({a, 0, 0, 0, 1, 0}), E(1)});
    });
}

std::string normalize_name(std::string s)
{
    auto replace_all = [&s](const std::string& from, const std::string& to) {
        for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
            s.replace(pos, from.size(), to);
    };
    replace_all("{", "");
    replace_all("}", "");
    replace_all("∞", "infty");
    replace_all("infinity", "infty");
    replace_all("∩", "&");
    replace_all("τ", ".tau");
    replace_all("(.tau", "(tau");
    replace_all(",.tau", ",tau");
    replace_all("..tau", ".tau");
    return s;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog()
{
    static const std::vector<Fixture> cat = [] {
        std::vector<Fixture> v;
        add_fib2(v);
        add_fib3_id(v);
        add_fib3_rest(v);
        add_k(v);
        add_l_tables(v);
        return v;
    }();
    return cat;
}

const Fixture& find_fixture(const std::string& name)
{
    std::string want = normalize_name(name);
    for (const auto& f : fixture_catalog())
        if (f.name == want)
            return f;
    throw std::out_of_range("unknown fixture: " + name);
}

FixtureResult eval_fixture(const Fixture& f, FieldPtr field)
{
    FixtureCtx c(field, f.g);
    f.gen(c);
    FixtureResult r;
    r.flags = std::move(c.flags_out);
    r.tags = std::move(c.tags_out);
    r.rejected = c.rejected;
    return r;
}

FixtureResult eval_fixture(const std::string& name, FieldPtr field)
{
    return eval_fixture(find_fixture(name), std::move(field));
}

}  // namespace iwahori
