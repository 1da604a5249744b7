#include "iwahori/weyl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace iwahori {

SignedPerm SignedPerm::identity(int g)
{
    SignedPerm p;
    p.images.resize(2 * g);
    for (int i = 0; i < 2 * g; ++i)
        p.images[i] = i + 1;
    return p;
}

SignedPerm SignedPerm::from_cycles(int g, const std::vector<std::vector<int>>& cycles)
{
    SignedPerm p = identity(g);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            p.images[c[i] - 1] = c[(i + 1) % c.size()];
    if (!p.valid())
        throw std::invalid_argument("from_cycles: not a signed permutation: " + p.cycles());
    return p;
}

bool SignedPerm::valid() const
{
    int n = int(images.size());
    if (n % 2)
        return false;
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        int v = images[i - 1];
        if (v < 1 || v > n || seen[v])
            return false;
        seen[v] = true;
        if (v + images[n - i] != n + 1)
            return false;
    }
    return true;
}

SignedPerm SignedPerm::inverse() const
{
    SignedPerm r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        r.images[images[i] - 1] = int(i) + 1;
    return r;
}

std::string SignedPerm::cycles() const
{
    int n = int(images.size());
    std::vector<bool> done(n + 1, false);
    std::string s;
    for (int i = 1; i <= n; ++i) {
        if (done[i] || images[i - 1] == i)
            continue;
        s += "(";
        for (int j = i; !done[j]; j = images[j - 1]) {
            done[j] = true;
            if (s.back() != '(' && n >= 10)
                s += ",";
            s += std::to_string(j);
        }
        s += ")";
    }
    return s.empty() ? "id" : s;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b)
{
    if (a.images.size() != b.images.size())
        throw std::invalid_argument("SignedPerm product: mismatched g");
    SignedPerm r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i)
        r.images[i] = a.images[b.images[i] - 1];
    return r;
}

int AffineElement::similitude() const
{
    return lambda.empty() ? 0 : lambda.front() + lambda.back();
}

bool AffineElement::valid_coweight() const
{
    int n = int(lambda.size());
    if (n != int(omega.images.size()) || n % 2)
        return false;
    for (int i = 0; i < n / 2; ++i)
        if (lambda[i] + lambda[n - 1 - i] != similitude())
            return false;
    return true;
}

AffineElement AffineElement::identity(int g)
{
    return {std::vector<int>(2 * g, 0), SignedPerm::identity(g)};
}

AffineElement AffineElement::perm_then_translation(const SignedPerm& omega, const std::vector<int>& mu)
{
    return compose({std::vector<int>(mu.size(), 0), omega}, {mu, SignedPerm::identity(omega.g())});
}

AffineElement compose(const AffineElement& x, const AffineElement& y)
{
    if (x.lambda.size() != y.lambda.size())
        throw std::invalid_argument("compose: mismatched g");
    int n = int(x.lambda.size());
    SignedPerm winv = x.omega.inverse();
    AffineElement r;
    r.lambda.resize(n);
    for (int i = 0; i < n; ++i)
        r.lambda[i] = x.lambda[i] + y.lambda[winv.images[i] - 1];
    r.omega = x.omega * y.omega;
    return r;
}

AffineElement invert(const AffineElement& x)
{
    // (t^l w)^{-1} = t^{-w^{-1}.l} w^{-1}
    int n = int(x.lambda.size());
    AffineElement r;
    r.omega = x.omega.inverse();
    r.lambda.resize(n);
    for (int i = 0; i < n; ++i)
        r.lambda[i] = -x.lambda[x.omega.images[i] - 1];
    return r;
}

Generators generators(int g)
{
    if (g < 1)
        throw std::invalid_argument("generators: g must be positive");
    int n = 2 * g;
    Generators G;
    std::vector<int> mu(n, 0);
    mu[0] = 1;
    mu[n - 1] = -1;
    G.s.push_back(AffineElement::perm_then_translation(SignedPerm::from_cycles(g, {{1, n}}), mu));
    for (int i = 1; i < g; ++i)
        G.s.push_back({std::vector<int>(n, 0), SignedPerm::from_cycles(g, {{i, i + 1}, {n + 1 - i, n - i}})});
    G.s.push_back({std::vector<int>(n, 0), SignedPerm::from_cycles(g, {{g, g + 1}})});
    SignedPerm w = SignedPerm::identity(g);
    for (int i = 1; i <= g; ++i) {
        w.images[i - 1] = g + i;
        w.images[g + i - 1] = i;
    }
    std::vector<int> t(n, 0);
    for (int i = 0; i < g; ++i)
        t[i] = 1;
    G.tau = AffineElement::perm_then_translation(w, t);
    return G;
}

AffineElement tau_power(int g, int e)
{
    AffineElement t = generators(g).tau;
    if (e < 0) {
        t = invert(t);
        e = -e;
    }
    AffineElement r = AffineElement::identity(g);
    for (int i = 0; i < e; ++i)
        r = compose(r, t);
    return r;
}

namespace {

void check_element(const AffineElement& x)
{
    if (!x.omega.valid())
        throw std::invalid_argument("length: omega is not a signed permutation");
    if (!x.valid_coweight())
        throw std::invalid_argument("length: lambda is not a coweight");
}

long long floordiv(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Number of affine root hyperplanes separating the base alcove from its
// image under an element of W_a (zero similitude). The base alcove is
// -1/2 < v_1 < ... < v_g < 0 on {v_i + v_{2g+1-i} = 0}; coordinates are
// scaled by M = 2g+2 so a generic interior point is integral.
int length_wa(const AffineElement& w)
{
    int n = int(w.lambda.size()), g = n / 2;
    long long M = 2 * g + 2;
    std::vector<long long> c(n), x(n);
    for (int i = 1; i <= g; ++i) {
        c[i - 1] = -(g + 1 - i);
        c[n - i] = g + 1 - i;
    }
    SignedPerm winv = w.omega.inverse();
    for (int i = 0; i < n; ++i)
        x[i] = c[winv.images[i] - 1] + M * w.lambda[i];
    long long total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // v_i - v_j and v_{n-1-j} - v_{n-1-i} are the same functional.
            int i2 = n - 1 - j, j2 = n - 1 - i;
            if (std::make_pair(i2, j2) < std::make_pair(i, j))
                continue;
            long long a = c[i] - c[j], b = x[i] - x[j];
            total += std::llabs(floordiv(b, M) - floordiv(a, M));
        }
    return int(total);
}

AffineElement strip_tau(const AffineElement& x)
{
    int c = x.similitude();
    return c == 0 ? x : compose(x, tau_power(x.g(), -c));
}

}  // namespace

int length(const AffineElement& x)
{
    check_element(x);
    return length_wa(strip_tau(x));
}

int length(const SignedPerm& w)
{
    return length(AffineElement{std::vector<int>(w.images.size(), 0), w});
}

bool bruhat_leq(const AffineElement& x, const AffineElement& y)
{
    check_element(x);
    check_element(y);
    if (x.similitude() != y.similitude())
        return false;
    AffineElement a = strip_tau(x), b = strip_tau(y);
    auto gens = generators(x.g()).s;
    std::function<bool(const AffineElement&, int, const AffineElement&, int)> rec =
        [&](const AffineElement& u, int lu, const AffineElement& v, int lv) -> bool {
        if (lu > lv)
            return false;
        if (lv == 0)
            return u == v;
        for (const auto& s : gens) {
            AffineElement sv = compose(s, v);
            int lsv = length_wa(sv);
            if (lsv >= lv)
                continue;
            AffineElement su = compose(s, u);
            int lsu = length_wa(su);
            if (lsu < lu)
                return rec(su, lsu, sv, lsv);
            return rec(u, lu, sv, lsv);
        }
        return false;
    };
    return rec(a, length_wa(a), b, length_wa(b));
}

std::vector<int> reduced_word(const AffineElement& x)
{
    check_element(x);
    AffineElement y = strip_tau(x);
    auto gens = generators(x.g()).s;
    std::vector<int> rev;
    int l = length_wa(y);
    while (l > 0) {
        bool found = false;
        for (int i = 0; i <= x.g(); ++i) {
            AffineElement z = compose(y, gens[i]);
            int lz = length_wa(z);
            if (lz < l) {
                rev.push_back(i);
                y = z;
                l = lz;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("reduced_word: no right descent");
    }
    return {rev.rbegin(), rev.rend()};
}

namespace {

std::string word_string(const std::vector<int>& w, int g)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && g >= 10)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace

std::string name(const AffineElement& x)
{
    auto w = reduced_word(x);
    int c = x.similitude();
    std::string t = c == 0 ? "" : (c == 1 ? "tau" : "tau^" + std::to_string(c));
    if (w.empty())
        return t.empty() ? "id" : t;
    return "s_" + word_string(w, x.g()) + (t.empty() ? "" : "." + t);
}

std::string display_name(const AffineElement& x)
{
    auto w = reduced_word(x);
    int c = x.similitude();
    std::string t = c == 0 ? "" : (c == 1 ? "τ" : "τ^" + std::to_string(c));
    if (w.empty())
        return t.empty() ? "id" : t;
    return "s_{" + word_string(w, x.g()) + "}" + t;
}

std::string name(const SignedPerm& w)
{
    return name(AffineElement{std::vector<int>(w.images.size(), 0), w});
}

AffineElement from_word(int g, const std::vector<int>& word, int tau_exp)
{
    auto G = generators(g);
    AffineElement r = AffineElement::identity(g);
    for (int i : word) {
        if (i < 0 || i > g)
            throw std::invalid_argument("from_word: generator index out of range");
        r = compose(r, G.s[i]);
    }
    return compose(r, tau_power(g, tau_exp));
}

AffineElement parse_name(int g, const std::string& raw)
{
    std::string s = raw;
    int tau = 0;
    auto strip_suffix = [&](const std::string& suf) {
        if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            s.erase(s.size() - suf.size());
            return true;
        }
        return false;
    };
    if (strip_suffix(".tau") || strip_suffix("tau") || strip_suffix("τ"))
        tau = 1;
    if (s.empty() || s == "id")
        return from_word(g, {}, tau);
    if (s.rfind("s", 0) != 0)
        throw std::invalid_argument("parse_name: cannot parse '" + raw + "'");
    s.erase(0, 1);
    std::vector<int> word;
    std::string digits;
    for (char ch : s) {
        if (ch == '_' || ch == '{' || ch == '}')
            continue;
        if (ch == ',') {
            if (!digits.empty())
                word.push_back(std::stoi(digits));
            digits.clear();
        } else if (ch >= '0' && ch <= '9') {
            if (g < 10)
                word.push_back(ch - '0');
            else
                digits.push_back(ch);
        } else {
            throw std::invalid_argument("parse_name: cannot parse '" + raw + "'");
        }
    }
    if (!digits.empty())
        word.push_back(std::stoi(digits));
    return from_word(g, word, tau);
}

AffineElement xi_inverse(const SignedPerm& omega)
{
    SignedPerm inv = omega.inverse();
    int n = int(omega.images.size());
    AffineElement x;
    x.omega = omega;
    x.lambda.resize(n);
    for (int i = 1; i <= n; ++i) {
        if (inv(i) == i)
            throw std::invalid_argument("xi_inverse: omega has a fixed point");
        x.lambda[i - 1] = inv(i) > i ? 0 : 1;
    }
    return x;
}

int p_rank_adm(const AffineElement& x)
{
    int fix = 0;
    for (int i = 1; i <= 2 * x.g(); ++i)
        if (x.omega(i) == i)
            ++fix;
    if (fix % 2)
        throw std::invalid_argument("p_rank_adm: odd number of fixed points");
    return fix / 2;
}

std::vector<int> n_set(const AffineElement& x)
{
    std::vector<int> r;
    for (int i = 1; i <= 2 * x.g(); ++i) {
        int w = x.omega(i);
        if (w < i && x.omega(w) < w)
            r.push_back(i);
    }
    return r;
}

AdmissibleElement make_admissible(const AffineElement& x)
{
    return {x, length(x), p_rank_adm(x), name(x)};
}

std::vector<AdmissibleElement> adm_rank0(int g)
{
    int n = 2 * g;
    std::vector<AdmissibleElement> out;
    SignedPerm w = SignedPerm::identity(g);
    std::vector<bool> used(n + 1, false);
    std::function<void(int)> rec = [&](int i) {
        if (i > g) {
            bool fpf = true;
            for (int j = 1; j <= n; ++j)
                if (w(j) == j)
                    fpf = false;
            if (fpf)
                out.push_back(make_admissible(xi_inverse(w)));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v] || used[n + 1 - v] || v == n + 1 - v)
                continue;
            used[v] = used[n + 1 - v] = true;
            w.images[i - 1] = v;
            w.images[n - i] = n + 1 - v;
            rec(i + 1);
            used[v] = used[n + 1 - v] = false;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const AdmissibleElement& a, const AdmissibleElement& b) {
        return a.length != b.length ? a.length < b.length : a.name < b.name;
    });
    return out;
}

}  // namespace iwahori
