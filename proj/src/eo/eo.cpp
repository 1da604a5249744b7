#include "iwahori/eo.hpp"

#include <algorithm>
#include <stdexcept>

namespace iwahori {

bool FinalSequence::valid() const
{
    int n = int(psi.size()) - 1;
    if (n < 2 || n % 2)
        return false;
    int gg = n / 2;
    if (psi[0] != 0 || psi[n] != gg)
        return false;
    for (int i = 0; i < n; ++i)
        if (psi[i + 1] < psi[i] || psi[i + 1] > psi[i] + 1)
            return false;
    for (int i = 0; i < n; ++i) {
        bool up = psi[i] < psi[i + 1];
        bool flat = psi[n - i] == psi[n - i - 1];
        if (up != flat)
            return false;
    }
    return true;
}

std::string FinalSequence::str() const
{
    std::string s = "(";
    auto sf = short_form();
    for (std::size_t i = 0; i < sf.size(); ++i)
        s += (i ? "," : "") + std::to_string(sf[i]);
    return s + ")";
}

FinalSequence FinalSequence::from_short(const std::vector<int>& s)
{
    int g = int(s.size());
    FinalSequence f;
    f.psi.assign(2 * g + 1, 0);
    for (int i = 1; i <= g; ++i)
        f.psi[i] = s[i - 1];
    for (int i = 0; i < g; ++i)
        f.psi[2 * g - i] = f.psi[i] + g - i;
    return f;
}

bool is_final(const SignedPerm& w)
{
    if (!w.valid())
        return false;
    for (int i = 1; i < w.g(); ++i)
        if (w(i) > w(i + 1))
            return false;
    return true;
}

FinalSequence seq_from_elem(const SignedPerm& w)
{
    if (!is_final(w))
        throw std::invalid_argument("seq_from_elem: not a final element");
    int g = w.g();
    FinalSequence f;
    f.psi.resize(2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) {
        int c = 0;
        for (int a = 1; a <= g; ++a)
            if (w(a) <= i)
                ++c;
        f.psi[i] = i - c;
    }
    for (int i = 0; i <= g; ++i)
        if (f.psi[2 * g - i] != f.psi[i] + g - i)
            throw std::logic_error("seq_from_elem: symmetry fails");
    return f;
}

SignedPerm elem_from_seq(const FinalSequence& s)
{
    if (!s.valid())
        throw std::invalid_argument("elem_from_seq: invalid final sequence " + s.str());
    int g = s.g();
    // {w(1),...,w(g)} are the i with psi(i) = psi(i-1).
    SignedPerm w = SignedPerm::identity(g);
    int a = 0;
    for (int i = 1; i <= 2 * g; ++i)
        if (s.psi[i] == s.psi[i - 1]) {
            ++a;
            w.images[a - 1] = i;
            w.images[2 * g - a] = 2 * g + 1 - i;
        }
    if (a != g || !w.valid())
        throw std::invalid_argument("elem_from_seq: sequence does not give a signed permutation");
    return w;
}

std::vector<SignedPerm> final_elements(int g)
{
    std::vector<std::vector<int>> shorts;
    std::vector<int> cur(g);
    // Short forms: psi(1) in {0,1}, steps 0 or 1; validity filtered below.
    for (int mask = 0; mask < (1 << g); ++mask) {
        int v = 0;
        for (int i = 0; i < g; ++i) {
            v += (mask >> (g - 1 - i)) & 1;
            cur[i] = v;
        }
        shorts.push_back(cur);
    }
    std::sort(shorts.begin(), shorts.end());
    std::vector<SignedPerm> out;
    for (const auto& sf : shorts) {
        FinalSequence f = FinalSequence::from_short(sf);
        if (f.valid())
            out.push_back(elem_from_seq(f));
    }
    return out;
}

int eo_dim(const SignedPerm& w)
{
    auto s = seq_from_elem(w);
    int d = 0;
    for (int i = 1; i <= w.g(); ++i)
        d += s.psi[i];
    return d;
}

int eo_p_rank(const SignedPerm& w)
{
    if (!is_final(w))
        throw std::invalid_argument("eo_p_rank: not a final element");
    int g = w.g(), c = 0;
    for (int i = 1; i <= g; ++i)
        if (w(i) == g + i)
            ++c;
    if (c != w(1) - 1)
        throw std::logic_error("eo_p_rank: formulas disagree");
    return c;
}

int eo_a_number(const SignedPerm& w)
{
    return w.g() - seq_from_elem(w).psi[w.g()];
}

bool eo_in_ss(const SignedPerm& w)
{
    if (!is_final(w))
        throw std::invalid_argument("eo_in_ss: not a final element");
    int g = w.g();
    for (int i = 1; i <= g - g / 2; ++i)
        if (w(i) != i)
            return false;
    return true;
}

bool closure_leq(const FinalSequence& a, const FinalSequence& b)
{
    if (a.g() != b.g())
        throw std::invalid_argument("closure_leq: mismatched g");
    for (int i = 1; i <= a.g(); ++i)
        if (a.psi[i] > b.psi[i])
            return false;
    return true;
}

std::vector<EoRow> eo_table(int g)
{
    std::vector<EoRow> rows;
    for (const auto& w : final_elements(g))
        rows.push_back({seq_from_elem(w), w, name(w), eo_dim(w), eo_p_rank(w), eo_a_number(w), eo_in_ss(w)});
    return rows;
}

}  // namespace iwahori
