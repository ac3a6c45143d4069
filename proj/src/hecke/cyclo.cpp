#include "heis/cyclo.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <functional>

namespace heis {

CycloElement& CycloElement::operator+=(const CycloElement& o)
{
    if (o.n != n)
        throw input_error("rank mismatch in H_n^lambda sum");
    axpy(v, Q(1), o.v);
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o)
{
    if (o.n != n)
        throw input_error("rank mismatch in H_n^lambda difference");
    axpy(v, Q(-1), o.v);
    return *this;
}

CycloElement& CycloElement::operator*=(const Q& c)
{
    if (c == 0)
        v.clear();
    for (auto& [k, x] : v)
        x *= c;
    return *this;
}

CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
CycloElement operator*(const Q& c, CycloElement a) { return a *= c; }

HeckeTower::HeckeTower(Weight w, long max_dim) : w_(std::move(w)), max_dim_(max_dim) {}

long HeckeTower::dim(int n) const
{
    long r = 1;
    for (int i = 1; i <= n; ++i)
        r *= static_cast<long>(w_.d) * i;
    return r;
}

void HeckeTower::check_dim(int n) const
{
    if (dim(n) > max_dim_)
        throw resource_error("dim H_" + std::to_string(n) + "^lambda = " + std::to_string(dim(n)) +
                             " exceeds the cap " + std::to_string(max_dim_));
}

PbwKey HeckeTower::key(int n, int idx) const
{
    long dpow = 1;
    for (int i = 0; i < n; ++i)
        dpow *= w_.d;
    PbwKey k;
    k.w = Perm::from_index(n, idx / dpow);
    long r = idx % dpow;
    k.e.resize(n);
    for (int i = 0; i < n; ++i) {
        k.e[i] = static_cast<int>(r % w_.d);
        r /= w_.d;
    }
    return k;
}

int HeckeTower::index(const PbwKey& k) const
{
    long dpow = 1, off = 0;
    for (size_t i = 0; i < k.e.size(); ++i) {
        if (k.e[i] < 0 || k.e[i] >= w_.d)
            throw internal_error("exponent outside the cyclotomic basis range");
        off += k.e[i] * dpow;
        dpow *= w_.d;
    }
    return static_cast<int>(k.w.index() * dpow + off);
}

HeckeTower::Level& HeckeTower::level(int n)
{
    if (n < 0)
        throw input_error("negative rank");
    while (static_cast<int>(levels_.size()) <= n) {
        auto L = std::make_unique<Level>();
        L->n = static_cast<int>(levels_.size());
        L->size = dim(L->n);
        L->rx.resize(L->n);
        levels_.push_back(std::move(L));
    }
    return *levels_[n];
}

CycloElement HeckeTower::scalar(int n, const Q& c) const
{
    CycloElement a{n, {}};
    add_term(a.v, 0, c);
    return a;
}

CycloElement HeckeTower::basis(int n, int idx) const
{
    CycloElement a{n, {}};
    a.v[idx] = 1;
    return a;
}

CycloElement HeckeTower::x(int n, int i, int power)
{
    if (i < 1 || i > n)
        throw input_error("x_" + std::to_string(i) + " out of range for rank " + std::to_string(n));
    Level& L = level(n);
    CycloElement a = one(n);
    for (int t = 0; t < power; ++t)
        a.v = right_x_vec(L, a.v, i - 1);
    return a;
}

CycloElement HeckeTower::s(int n, int i)
{
    if (i < 1 || i >= n)
        throw input_error("s_" + std::to_string(i) + " out of range for rank " + std::to_string(n));
    return {n, right_perm(n, one(n).v, Perm::simple(n, i - 1))};
}

SparseVec HeckeTower::right_perm(int n, const SparseVec& v, const Perm& p) const
{
    SparseVec out;
    for (const auto& [idx, c] : v) {
        PbwKey k = key(n, idx);
        k.w = k.w * p;
        add_term(out, index(k), c);
    }
    return out;
}

SparseVec HeckeTower::reduce_mono(Level& L, const std::vector<int>& e)
{
    auto it = L.mono.find(e);
    if (it != L.mono.end())
        return it->second;
    int d = w_.d, n = L.n;
    int p = static_cast<int>(std::find(e.begin(), e.end(), d) - e.begin());
    SparseVec out;
    if (p == 0) {
        // x_1^d = -sum_j f_j x_1^j
        for (int j = 0; j < d; ++j) {
            PbwKey k{e, Perm::identity(n)};
            k.e[0] = j;
            add_term(out, index(k), -w_.f[j]);
        }
    } else {
        // x^e = s (x^{e''}) s + M (divided difference of x_q^d x_p^c) s, q = p - 1
        int q = p - 1, c = e[q];
        std::vector<int> e2 = e;
        e2[q] = d;
        e2[p] = c;
        SparseVec inner = reduce_mono(L, e2);
        Perm sq = Perm::simple(n, q);
        for (const auto& [idx, co] : inner)
            axpy(out, co, right_perm(n, left_s(L, idx, q), sq));
        for (int u = 0; u <= d - c - 1; ++u) {
            PbwKey k{e, sq};
            k.e[q] = c + u;
            k.e[p] = c + (d - c - 1 - u);
            add_term(out, index(k), Q(1));
        }
    }
    L.mono.emplace(e, out);
    return out;
}

SparseVec HeckeTower::left_s(Level& L, int idx, int q)
{
    int n = L.n;
    PbwKey k = key(n, idx);
    Perm sq = Perm::simple(n, q);
    SparseVec out;
    PbwKey lead = k;
    std::swap(lead.e[q], lead.e[q + 1]);
    lead.w = sq * k.w;
    add_term(out, index(lead), Q(1));
    for (const auto& [m, c] : divided_difference(k.e, q))
        add_term(out, index({m, k.w}), -c);
    return out;
}

const SparseVec& HeckeTower::right_x(Level& L, int idx, int k)
{
    auto& table = L.rx[k];
    auto it = table.find(idx);
    if (it != table.end())
        return it->second;
    PbwKey key0 = key(L.n, idx);
    int p = key0.w(k);
    SparseVec out;
    std::vector<int> e = key0.e;
    e[p] += 1;
    if (e[p] < w_.d)
        add_term(out, index({e, key0.w}), Q(1));
    else
        out = right_perm(L.n, reduce_mono(L, e), key0.w);
    for (const auto& [v, c] : perm_times_x_lower(key0.w, k))
        add_term(out, index({key0.e, v}), c);
    return table.emplace(idx, std::move(out)).first->second;
}

SparseVec HeckeTower::right_x_vec(Level& L, const SparseVec& v, int k)
{
    SparseVec out;
    for (const auto& [idx, c] : v)
        axpy(out, c, right_x(L, idx, k));
    return out;
}

CycloElement HeckeTower::mul(const CycloElement& a, const CycloElement& b)
{
    if (a.n != b.n)
        throw input_error("rank mismatch in H_n^lambda product");
    int n = a.n;
    Level& L = level(n);
    // group the right factor by exponent vector: a * x^e computed once
    std::map<std::vector<int>, std::vector<std::pair<Perm, Q>>> groups;
    for (const auto& [idx, c] : b.v) {
        PbwKey k = key(n, idx);
        groups[k.e].emplace_back(k.w, c);
    }
    CycloElement out{n, {}};
    for (const auto& [e, perms] : groups) {
        SparseVec cur = a.v;
        for (int k = 0; k < n; ++k)
            for (int t = 0; t < e[k]; ++t)
                cur = right_x_vec(L, cur, k);
        for (const auto& [w, c] : perms)
            axpy(out.v, c, right_perm(n, cur, w));
    }
    return out;
}

CycloElement HeckeTower::reduce(const AffineElement& a)
{
    int n = a.rank();
    Level& L = level(n);
    CycloElement out{n, {}};
    for (const auto& [k, c] : a.terms()) {
        SparseVec cur = one(n).v;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < k.e[i]; ++t)
                cur = right_x_vec(L, cur, i);
        axpy(out.v, c, right_perm(n, cur, k.w));
    }
    return out;
}

AffineElement HeckeTower::to_affine(const CycloElement& a) const
{
    AffineElement out(a.n);
    for (const auto& [idx, c] : a.v)
        out.add(key(a.n, idx), c);
    return out;
}

CycloElement HeckeTower::include(const CycloElement& a, int m) const
{
    if (m < a.n)
        throw input_error("cannot include H_n into a smaller rank");
    CycloElement out{m, {}};
    for (const auto& [idx, c] : a.v) {
        PbwKey k = key(a.n, idx);
        k.e.resize(m, 0);
        k.w = k.w.extended(m);
        out.v.emplace(index(k), c);
    }
    return out;
}

CycloElement HeckeTower::restrict_to(const CycloElement& a, int n) const
{
    CycloElement out{n, {}};
    for (const auto& [idx, c] : a.v) {
        PbwKey k = key(a.n, idx);
        for (int i = n; i < a.n; ++i)
            if (k.e[i] != 0 || k.w(i) != i)
                throw internal_error("element does not lie in the subalgebra H_" + std::to_string(n));
        k.e.resize(n);
        k.w.w.resize(n);
        out.v.emplace(index(k), c);
    }
    return out;
}

CycloElement HeckeTower::trace(const CycloElement& z) const
{
    if (z.n < 1)
        throw input_error("trace needs rank at least 1");
    int t = z.n - 1;
    CycloElement out{t, {}};
    for (const auto& [idx, c] : z.v) {
        PbwKey k = key(z.n, idx);
        if (k.w(t) != t || k.e[t] != w_.d - 1)
            continue;
        k.e.resize(t);
        k.w.w.resize(t);
        add_term(out.v, index(k), c);
    }
    return out;
}

CycloElement HeckeTower::left_basis(int m, LeftLabel l)
{
    if (l.j < 1 || l.j > m || l.a < 0 || l.a >= w_.d)
        throw input_error("left basis label out of range");
    Perm c = Perm::identity(m);
    for (int g = m - 2; g >= l.j - 1; --g)
        c = c * Perm::simple(m, g);
    CycloElement out{m, right_perm(m, one(m).v, c)};
    Level& L = level(m);
    for (int t = 0; t < l.a; ++t)
        out.v = right_x_vec(L, out.v, l.j - 1);
    return out;
}

CycloElement HeckeTower::right_basis(int m, LeftLabel l)
{
    if (l.j < 1 || l.j > m || l.a < 0 || l.a >= w_.d)
        throw input_error("right basis label out of range");
    CycloElement out = x(m, l.j, l.a);
    Perm c = Perm::identity(m);
    for (int g = l.j - 1; g <= m - 2; ++g)
        c = c * Perm::simple(m, g);
    out.v = right_perm(m, out.v, c);
    return out;
}

std::map<LeftLabel, CycloElement> HeckeTower::left_decompose(const CycloElement& z0)
{
    int m = z0.n;
    if (m < 1)
        throw input_error("left decomposition needs rank at least 1");
    int t = m - 1;
    std::map<LeftLabel, CycloElement> out;
    CycloElement z = z0;
    long guard = 0;
    while (!z.is_zero()) {
        if (++guard > 4 * dim(m) + 16)
            throw internal_error("left decomposition failed to terminate");
        int best = -1, best_deg = -1;
        for (const auto& [idx, c] : z.v) {
            PbwKey k = key(m, idx);
            int deg = 0;
            for (int e : k.e)
                deg += e;
            if (deg > best_deg) {
                best_deg = deg;
                best = idx;
            }
        }
        Q co = z.v.at(best);
        PbwKey k = key(m, best);
        int j0 = k.w.inverse()(t);
        Perm c = Perm::identity(m);
        for (int g = t - 1; g >= j0; --g)
            c = c * Perm::simple(m, g);
        Perm u = k.w * c.inverse();
        PbwKey hk{std::vector<int>(k.e.begin(), k.e.end() - 1), u};
        hk.w.w.resize(t);
        CycloElement h = basis(t, index(hk));
        LeftLabel lab{j0 + 1, k.e[t]};
        CycloElement prod = mul(include(h, m), left_basis(m, lab));
        z -= co * prod;
        auto [it, fresh] = out.emplace(lab, co * h);
        if (!fresh) {
            it->second += co * h;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

CycloElement HeckeTower::dual_dot(int n, int k)
{
    int d = w_.d;
    if (n < 1)
        throw input_error("dual dot needs rank at least 1");
    if (k < 0 || k >= d)
        throw input_error("dual dot index out of range");
    auto cached = dual_cache_.find({n, k});
    if (cached != dual_cache_.end())
        return cached->second;
    // traces tr_n(x_n^m), as elements of H_{n-1}
    std::map<int, CycloElement> tr;
    auto trace_power = [&](int m) -> const CycloElement& {
        auto it = tr.find(m);
        if (it == tr.end())
            it = tr.emplace(m, trace(x(n, n, m))).first;
        return it->second;
    };
    // determinant with commuting entries, Laplace expansion along the first row
    std::function<CycloElement(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) {
        int size = static_cast<int>(cols.size());
        if (size == 0)
            return one(n - 1);
        CycloElement acc = zero(n - 1);
        for (int c = 0; c < size; ++c) {
            // entry (i, j) = tr_n(x_n^{d + j - i}), 1-based i, j
            int i = row + 1, j = cols[c] + 1;
            const CycloElement& entry = trace_power(d + j - i);
            if (entry.is_zero())
                continue;
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + c);
            CycloElement term = mul(entry, det(rest, row + 1));
            acc += (c % 2 ? Q(-1) : Q(1)) * term;
        }
        return acc;
    };
    CycloElement y = zero(n);
    for (int t = k; t <= d - 1; ++t) {
        int size = d - 1 - t;
        std::vector<int> cols(size);
        for (int c = 0; c < size; ++c)
            cols[c] = c;
        CycloElement dt = include(det(cols, 0), n);
        Q sign = (d - 1 - t) % 2 ? Q(-1) : Q(1);
        y += sign * mul(x(n, n, t - k), dt);
    }
    dual_cache_.emplace(std::make_pair(n, k), y);
    return y;
}

std::string HeckeTower::str(const CycloElement& a) const
{
    return to_affine(a).str();
}

} // namespace heis
