#include "iwahori/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "iwahori/kernels.hpp"

namespace iwahori {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

int least_primitive_root(int p)
{
    if (p == 2)
        return 1;
    std::vector<int> f;
    int m = p - 1;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            f.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    if (m > 1)
        f.push_back(m);
    for (int a = 2; a < p; ++a) {
        bool prim = true;
        for (int r : f) {
            long long x = 1, b = a;
            for (int e = (p - 1) / r; e; e >>= 1, b = b * b % p)
                if (e & 1)
                    x = x * b % p;
            if (x == 1) {
                prim = false;
                break;
            }
        }
        if (prim)
            return a;
    }
    return 1;
}

// Polynomials over F_p as digit vectors, reduced modulo the monic modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m, int p)
{
    int k = int(m.size()) - 1;
    std::vector<int> r(2 * k, 0);
    for (int i = 0; i < k; ++i)
        if (a[i])
            for (int j = 0; j < k; ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * k - 1; d >= k; --d) {
        int c = r[d];
        if (!c)
            continue;
        for (int t = 0; t <= k; ++t)
            r[d - k + t] = ((r[d - k + t] - c * m[t]) % p + p) % p;
    }
    r.resize(k);
    return r;
}

}  // namespace

std::vector<int> conway_modulus(int p, int k)
{
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    if (k == 1 && is_prime(p))
        return {(p - least_primitive_root(p)) % p, 1};
    auto it = table.find({p, k});
    return it == table.end() ? std::vector<int>{} : it->second;
}

FieldPtr Field::get(int p, int k)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldPtr> cache;
    if (!is_prime(p))
        throw std::invalid_argument("field: p=" + std::to_string(p) + " is not prime");
    if (k < 1)
        throw std::invalid_argument("field: degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field: F_" + std::to_string(p) + "^" + std::to_string(k) + " exceeds 256 elements");
    }
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end())
        return it->second;
    auto m = conway_modulus(p, k);
    if (m.empty())
        throw std::invalid_argument("field: no modulus tabulated for p=" + std::to_string(p) + ", k=" + std::to_string(k));
    auto f = std::make_shared<const Field>(p, k, m);
    cache.emplace(std::make_pair(p, k), f);
    return f;
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), q_(1), modulus_(std::move(modulus))
{
    for (int i = 0; i < k; ++i)
        q_ *= p;
    auto digits = [&](int code) {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i, code /= p_)
            d[i] = code % p_;
        return d;
    };
    auto code = [&](const std::vector<int>& d) {
        int c = 0;
        for (int i = k_ - 1; i >= 0; --i)
            c = c * p_ + d[i];
        return c;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    std::vector<std::vector<int>> dig(q_);
    for (int a = 0; a < q_; ++a)
        dig[a] = digits(a);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> n(k_);
        for (int i = 0; i < k_; ++i)
            n[i] = (p_ - dig[a][i]) % p_;
        neg_[a] = Elem(code(n));
        for (int b = 0; b < q_; ++b) {
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i)
                s[i] = (dig[a][i] + dig[b][i]) % p_;
            add_[a * q_ + b] = Elem(code(s));
            mul_[a * q_ + b] = Elem(code(poly_mulmod(dig[a], dig[b], modulus_, p_)));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = Elem(b);
                break;
            }

    frob_.assign(k_, std::vector<Elem>(q_));
    for (int a = 0; a < q_; ++a) {
        Elem x = Elem(a);
        for (int e = 0; e < k_; ++e) {
            frob_[e][a] = x;
            x = pow(x, p_);
        }
    }

    if (k_ == 1)
        gen_ = Elem((p_ - modulus_[0]) % p_);
    else
        gen_ = Elem(p_);  // the class of t

    if (p_ == 2) {
        nib_mul_.resize(q_ * 32);
        for (int c = 0; c < q_; ++c)
            for (int x = 0; x < 16; ++x) {
                nib_mul_[c * 32 + x] = x < q_ ? mul_[c * q_ + x] : 0;
                nib_mul_[c * 32 + 16 + x] = (x << 4) < q_ ? mul_[c * q_ + (x << 4)] : 0;
            }
        nib_frob_.assign(k_, std::vector<std::uint8_t>(32));
        for (int e = 0; e < k_; ++e)
            for (int x = 0; x < 16; ++x) {
                nib_frob_[e][x] = x < q_ ? frob_[e][x] : 0;
                nib_frob_[e][16 + x] = (x << 4) < q_ ? frob_[e][x << 4] : 0;
            }
    }
}

std::string Field::name() const
{
    return k_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw std::domain_error("field: inverse of zero");
    return inv_[a];
}

Elem Field::pow(Elem a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::frob(Elem a, int e) const
{
    if (frob_.empty())
        return a;
    int r = ((e % k_) + k_) % k_;
    return frob_[r][a];
}

const Elem* Field::frob_table(int e) const
{
    return frob_[((e % k_) + k_) % k_].data();
}

const std::uint8_t* Field::nibble_frob(int e) const
{
    return nib_frob_[((e % k_) + k_) % k_].data();
}

Elem Field::from_int(long long n) const
{
    long long r = ((n % p_) + p_) % p_;
    return Elem(r);
}

Elem Field::basis_elem(int i) const
{
    int c = 1;
    for (int j = 0; j < i; ++j)
        c *= p_;
    return Elem(c);
}

int Field::digit(Elem a, int i) const
{
    int c = a;
    for (int j = 0; j < i; ++j)
        c /= p_;
    return c % p_;
}

Elem Field::from_digits(const int* d) const
{
    int c = 0;
    for (int i = k_ - 1; i >= 0; --i)
        c = c * p_ + ((d[i] % p_) + p_) % p_;
    return Elem(c);
}

void Field::axpy(Elem* dst, const Elem* src, std::size_t n, Elem c) const
{
    if (c == 0)
        return;
    if (p_ == 2) {
        if (c == 1)
            kernels::active().xor_into(dst, src, n);
        else
            kernels::active().map_xor(dst, src, n, nibble_mul(c));
        return;
    }
    const Elem* row = mul_row(c);
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = add_[dst[i] * q_ + row[src[i]]];
}

void Field::scale(Elem* dst, std::size_t n, Elem c) const
{
    if (c == 1)
        return;
    if (p_ == 2) {
        kernels::active().map(dst, dst, n, nibble_mul(c));
        return;
    }
    const Elem* row = mul_row(c);
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = row[dst[i]];
}

void Field::frob_span(Elem* dst, const Elem* src, std::size_t n, int e) const
{
    if (((e % k_) + k_) % k_ == 0) {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] = src[i];
        return;
    }
    if (p_ == 2) {
        kernels::active().map(dst, src, n, nibble_frob(e));
        return;
    }
    const Elem* t = frob_table(e);
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = t[src[i]];
}

Elem embed(const Field& from, const Field& to, Elem a)
{
    if (from.p() != to.p() || to.k() % from.k() != 0)
        throw std::invalid_argument("embed: F_" + std::to_string(from.q()) + " is not a subfield of F_" + std::to_string(to.q()));
    // Conway compatibility: the generator of the small field maps to
    // gen^((q_big - 1)/(q_small - 1)).
    Elem img = to.pow(to.generator(), (to.q() - 1) / (from.q() - 1));
    if (from.k() == 1)
        return to.from_int(a);
    // a = sum c_i t^i with t the small generator.
    Elem r = 0, tp = 1;
    for (int i = 0; i < from.k(); ++i) {
        r = to.add(r, to.mul(to.from_int(from.digit(a, i)), tp));
        tp = to.mul(tp, img);
    }
    return r;
}

}  // namespace iwahori
