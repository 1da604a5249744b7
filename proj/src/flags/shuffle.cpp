#include <stdexcept>

#include "iwahori/flags.hpp"

namespace iwahori {

namespace {

Subspace coordinate_space(const Field& K, int n, const std::vector<int>& idx)
{
    Mat m(0, n);
    for (int i : idx) {
        Elem e[kMaxDim] = {0};
        e[i] = 1;
        m.append_row(e);
    }
    return Subspace::span(K, m);
}

}  // namespace

SignedPerm reduced_stratum(const SignedPerm& w)
{
    auto psi = seq_from_elem(w);
    int g = w.g(), k = eo_p_rank(w), h = g - k;
    if (h == 0)
        throw std::invalid_argument("reduced_stratum: ordinary stratum");
    FinalSequence t;
    for (int i = 0; i <= 2 * h; ++i)
        t.psi.push_back(psi.psi[k + i] - k);
    return elem_from_seq(t);
}

std::string ShuffleLabel::key() const
{
    std::string s;
    for (int j : J)
        s.push_back(char(j));
    s.push_back('|');
    for (const auto& m : u_flag)
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                s.push_back(char(m(i, j)));
    return s;
}

ShuffleSplit shuffle_decompose(const SignedPerm& w, const Field& K, const SymplecticFlag& f)
{
    int g = w.g(), n = 2 * g, k = eo_p_rank(w), h = g - k;
    if (k == 0)
        throw std::invalid_argument("shuffle_decompose: p-rank zero");
    if (f.g != g)
        throw std::invalid_argument("shuffle_decompose: genus mismatch");
    std::vector<int> u_idx, r_idx;
    for (int i = 0; i < g; ++i) {
        (i < k ? u_idx : r_idx).push_back(i);
        (i < k ? u_idx : r_idx).push_back(g + i);
    }
    Subspace U = coordinate_space(K, n, u_idx);
    Subspace R = coordinate_space(K, n, r_idx);
    // beta~^{-1}: e_{k+i} -> e~_i, e_{g+k+i} -> e~_{h+i}.
    std::vector<int> to_small(n, -1);
    for (int i = 0; i < h; ++i) {
        to_small[k + i] = i;
        to_small[g + k + i] = h + i;
    }

    ShuffleSplit out;
    out.residual.g = h;
    out.residual.basis = Mat(0, 2 * h);
    Mat Rech(0, 2 * h);
    int prev_u = 0;
    Mat rows(0, n);
    for (int j = 1; j <= g; ++j) {
        rows.append_row(f.basis.row(j - 1));
        Subspace W = Subspace::span(K, rows);
        Subspace wu = intersect(K, W, U), wr = intersect(K, W, R);
        if (wu.dim() + wr.dim() != j)
            throw std::runtime_error("shuffle_decompose: W_" + std::to_string(j) + " does not split");
        if (wu.dim() > prev_u) {
            out.label.J.push_back(j);
            out.label.u_flag.push_back(wu.basis());
            prev_u = wu.dim();
            continue;
        }
        // The residual part grew by one; pick a new vector from W_j ∩ U^{i,u}.
        bool found = false;
        for (int r = 0; r < wr.dim() && !found; ++r) {
            Elem small[kMaxDim] = {0};
            for (int c = 0; c < n; ++c)
                if (wr.basis()(r, c))
                    small[to_small[c]] = wr.basis()(r, c);
            if (echelon_insert(K, Rech, small)) {
                out.residual.basis.append_row(small);
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("shuffle_decompose: residual step missing");
    }
    if (int(out.label.J.size()) != k)
        throw std::runtime_error("shuffle_decompose: W_g ∩ U is not Lagrangian in U");
    return out;
}

}  // namespace iwahori
