#include "heis/karoubi.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <numeric>

namespace heis {

DotTuple DotTuple::make(std::vector<int> b, int d)
{
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] >= d)
            throw input_error("dot tuple entry " + std::to_string(b[i]) + " outside 0.." + std::to_string(d - 1));
        if (i > 0 && b[i] < b[i - 1])
            throw input_error("dot tuple is not sorted");
    }
    return DotTuple{std::move(b)};
}

int DotTuple::total() const
{
    return std::accumulate(b.begin(), b.end(), 0);
}

long DotTuple::stabilizer() const
{
    long s = 1;
    for (size_t i = 0, run = 0; i < b.size(); ++i) {
        run = (i > 0 && b[i] == b[i - 1]) ? run + 1 : 1;
        s *= static_cast<long>(run);
    }
    return s;
}

std::string DotTuple::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

std::vector<DotTuple> dot_tuples(int l, int d)
{
    std::vector<DotTuple> out;
    std::vector<int> cur;
    auto rec = [&](int lo, auto& self) -> void {
        if (static_cast<int>(cur.size()) == l) {
            out.push_back(DotTuple{cur});
            return;
        }
        for (int v = lo; v < d; ++v) {
            cur.push_back(v);
            self(v, self);
            cur.pop_back();
        }
    };
    rec(0, rec);
    return out;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b)
{
    GroupElement r;
    for (const auto& [v, p] : a)
        for (const auto& [w, q] : b) {
            std::vector<int> vw(w.size());
            for (size_t i = 0; i < w.size(); ++i)
                vw[i] = v[w[i]];
            Q& c = r[vw];
            c += p * q;
            if (c == 0)
                r.erase(vw);
        }
    return r;
}

namespace {

int sign_of(const std::vector<int>& w)
{
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                ++inv;
    return inv % 2 ? -1 : 1;
}

// permutations preserving each block of the partition of 0..n-1
GroupElement block_sum(const std::vector<std::vector<int>>& blocks, int n, bool signed_sum)
{
    GroupElement r;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    r[id] = 1;
    for (const auto& blk : blocks) {
        GroupElement step;
        std::vector<int> img = blk;
        std::sort(img.begin(), img.end());
        do {
            std::vector<int> w = id;
            for (size_t i = 0; i < blk.size(); ++i)
                w[blk[i]] = img[i];
            std::vector<int> local(blk.size());
            for (size_t i = 0; i < blk.size(); ++i)
                local[i] = static_cast<int>(std::find(blk.begin(), blk.end(), img[i]) - blk.begin());
            step[w] = signed_sum ? Q(sign_of(local)) : Q(1);
        } while (std::next_permutation(img.begin(), img.end()));
        r = group_mul(r, step);
    }
    return r;
}

} // namespace

GroupElement young_symmetrizer(const std::vector<int>& shape)
{
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    for (size_t i = 0; i < shape.size(); ++i)
        if (shape[i] <= 0 || (i > 0 && shape[i] > shape[i - 1]))
            throw input_error("not a partition");
    // row reading tableau
    std::vector<std::vector<int>> rows, cols;
    int next = 0;
    for (int len : shape) {
        rows.emplace_back();
        for (int j = 0; j < len; ++j) {
            rows.back().push_back(next);
            if (j >= static_cast<int>(cols.size()))
                cols.emplace_back();
            cols[j].push_back(next);
            ++next;
        }
    }
    // f^mu / n! by the hook length formula is 1 / prod(hooks)
    Q hooks = 1;
    for (size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int below = 0;
            for (size_t r = i + 1; r < shape.size(); ++r)
                if (shape[r] > j)
                    ++below;
            hooks *= shape[i] - j + below;
        }
    GroupElement e = group_mul(block_sum(rows, n, false), block_sum(cols, n, true));
    for (auto& [w, c] : e)
        c /= hooks;
    return e;
}

Morphism permutation_diagram(const std::vector<int>& w, char orientation)
{
    int n = static_cast<int>(w.size());
    SignSeq s(n, orientation);
    BasisDiagram b;
    b.dom = b.cod = s;
    for (int i = 0; i < n; ++i) {
        if (orientation == '+')
            b.strands.push_back({{false, i}, {true, w[i]}});
        else
            b.strands.push_back({{true, i}, {false, w[i]}});
    }
    b.dots.assign(n, 0);
    std::sort(b.strands.begin(), b.strands.end());
    Morphism m = Morphism::zero(s, s);
    m.add(b, PiPoly(1));
    return m;
}

Morphism group_image(const GroupElement& g, int n, char orientation)
{
    SignSeq s(n, orientation);
    Morphism m = Morphism::zero(s, s);
    for (const auto& [w, c] : g)
        m += permutation_diagram(w, orientation) * PiPoly(c);
    return m;
}

nlohmann::json to_json(const DecompositionReport& r)
{
    nlohmann::json j;
    j["params"] = {{"n", r.n}, {"m", r.m}, {"weight", r.weight}, {"d", r.d}};
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [k, c] : r.multiplicities)
        mult[std::to_string(k)] = c;
    j["multiplicities"] = mult;
    j["orthogonal"] = r.orthogonal;
    j["complete"] = r.complete;
    j["idempotents"] = nlohmann::json::array();
    for (const auto& [b, e] : r.idempotents)
        j["idempotents"].push_back({{"tuple", b.b}, {"terms", e.terms.size()}});
    return j;
}

Karoubi::Karoubi(const Weight& w, int cap, ReduceOptions opt) : R_(w), cap_(cap), opt_(opt) {}

void Karoubi::check_cap(int n) const
{
    if (n > cap_)
        throw resource_error("symmetrizer size " + std::to_string(n) + " exceeds the cap " + std::to_string(cap_));
}

KaroubiObject Karoubi::symmetrizer(int n, char orientation)
{
    if (n < 0 || (orientation != '+' && orientation != '-'))
        throw input_error("bad symmetrizer request");
    check_cap(n);
    auto key = std::pair{n, orientation};
    auto it = sym_.find(key);
    if (it != sym_.end())
        return it->second;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    GroupElement g;
    do
        g[w] = Q(1) / factorial(n);
    while (std::next_permutation(w.begin(), w.end()));
    KaroubiObject x{SignSeq(n, orientation), group_image(g, n, orientation)};
    return sym_[key] = x;
}

KaroubiObject Karoubi::young(const std::vector<int>& shape, char orientation)
{
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    check_cap(n);
    return {SignSeq(n, orientation), group_image(young_symmetrizer(shape), n, orientation)};
}

KaroubiObject Karoubi::tensor(const KaroubiObject& a, const KaroubiObject& b)
{
    return {a.eps + b.eps, R_.tensor(a.e, b.e, opt_)};
}

bool Karoubi::is_idempotent(const KaroubiObject& x)
{
    return compose(x.e, x.e) == x.e;
}

bool Karoubi::is_morphism(const KaroubiMorphism& f)
{
    return compose(f.tgt.e, compose(f.f, f.src.e)) == f.f;
}

KaroubiMorphism Karoubi::compose(const KaroubiMorphism& f, const KaroubiMorphism& g)
{
    if (f.src.eps != g.tgt.eps || !(f.src.e == g.tgt.e))
        throw input_error("compose: source and target objects differ");
    return {g.src, f.tgt, compose(f.f, g.f)};
}

Morphism Karoubi::reduce_sum(const SignSeq& dom, const SignSeq& cod, const std::vector<std::pair<Q, std::string>>& ws)
{
    Morphism r = Morphism::zero(dom, cod);
    for (const auto& [q, text] : ws)
        r += R_.reduce(text.empty() ? identity_word(dom) : parse_slice_word(text), opt_) * PiPoly(q);
    return r;
}

namespace {

// text slices over a running sign sequence
struct WordBuilder {
    SignSeq sig;
    std::vector<std::string> slices;

    void put(size_t pos, size_t width, const std::string& tok, const SignSeq& repl)
    {
        std::string s;
        auto add = [&](const std::string& t) { s += (s.empty() ? "" : " * ") + t; };
        for (size_t i = 0; i < pos; ++i)
            add(sig[i] == '+' ? "U" : "D");
        add(tok);
        for (size_t i = pos + width; i < sig.size(); ++i)
            add(sig[i] == '+' ? "U" : "D");
        slices.push_back(s);
        sig = sig.substr(0, pos) + repl + sig.substr(pos + width);
    }
    void dots(size_t pos, int k)
    {
        if (k > 0)
            put(pos, 1, std::string(sig[pos] == '+' ? "PU^" : "PD^") + std::to_string(k), sig.substr(pos, 1));
    }
    void bubble(size_t pos, int dots_on)
    {
        put(pos, 0, "CUPCCW", "-+");
        put(pos + 1, 1, "PU^" + std::to_string(dots_on), "+");
        put(pos, 2, "CAPCCW", "");
    }
    std::string text() const
    {
        std::string s;
        for (const auto& x : slices)
            s += (s.empty() ? "" : " ; ") + x;
        return s;
    }
};

} // namespace

KaroubiMorphism Karoubi::build_interchange(int n, int m, const DotTuple& b, Interchange dir)
{
    int l = b.length(), d = weight().d;
    if (n < 1 || m < 1)
        throw input_error("interchange needs positive n and m");
    if (l > std::min(n, m))
        throw input_error("dot tuple of length " + std::to_string(l) + " is too long for (" + std::to_string(n) +
                          "," + std::to_string(m) + ")");
    DotTuple::make(b.b, d);
    KaroubiObject big = tensor(symmetrizer(n, '-'), symmetrizer(m, '+'));
    KaroubiObject small = tensor(symmetrizer(m - l, '+'), symmetrizer(n - l, '-'));
    std::vector<std::pair<Q, std::string>> words;
    if (dir == Interchange::beta) {
        WordBuilder wb{small.eps, {}};
        int a = m - l;
        for (int j = 0; j < n - l; ++j)
            for (int p = a + j - 1; p >= j; --p)
                wb.put(p, 2, "XDU", "-+");
        for (int t = 0; t < l; ++t)
            wb.put(n - l + t, 0, "CUPCCW", "-+");
        for (int r = 0; r < l; ++r)
            wb.dots(n + r, b.b[l - 1 - r]);
        words.push_back({Q(1), wb.text()});
        Morphism raw = reduce_sum(small.eps, big.eps, words);
        return {small, big, compose(big.e, compose(raw, small.e))};
    }
    // dual dots on the right leg of each cap: sum_i x^{i-b} c_{d-1-i}, c just right of the leg
    std::vector<std::vector<std::pair<PiMono, Q>>> choices(l);
    std::vector<std::vector<int>> extra(l);
    for (int r = 0; r < l; ++r)
        for (int i = b.b[r]; i < d; ++i) {
            PiPoly c = structure_scalar(d - 1 - i, weight());
            for (const auto& [mono, q] : c.terms()) {
                choices[r].push_back({mono, q});
                extra[r].push_back(i - b.b[r]);
            }
        }
    std::vector<size_t> pick(l, 0);
    for (;;) {
        WordBuilder wb{big.eps, {}};
        Q coeff = 1;
        for (int r = 0; r < l; ++r) {
            wb.dots(n + r, extra[r][pick[r]]);
            const auto& [mono, q] = choices[r][pick[r]];
            coeff *= q;
            for (size_t k = 0; k < mono.size(); ++k)
                for (int e = 0; e < mono[k]; ++e)
                    wb.bubble(n + r + 1, d + static_cast<int>(k) + 1);
        }
        for (int r = 0; r < l; ++r)
            wb.put(n - 1 - r, 2, "CAPCCW", "");
        int a = n - l;
        for (int j = 0; j < m - l; ++j)
            for (int p = a + j - 1; p >= j; --p)
                wb.put(p, 2, "XUD", "+-");
        words.push_back({coeff, wb.text()});
        int r = 0;
        while (r < l && ++pick[r] == choices[r].size())
            pick[r++] = 0;
        if (r == l)
            break;
    }
    Morphism raw = reduce_sum(big.eps, small.eps, words);
    return {big, small, compose(small.e, compose(raw, big.e))};
}

KaroubiMorphism Karoubi::regroup(int n, int m, char orientation)
{
    KaroubiObject src = tensor(symmetrizer(n, orientation), symmetrizer(m, orientation));
    KaroubiObject tgt = tensor(symmetrizer(m, orientation), symmetrizer(n, orientation));
    std::string tok = orientation == '+' ? "XUU" : "XDD";
    WordBuilder wb{src.eps, {}};
    // each strand of the right block moves left past the whole left block
    for (int j = 0; j < m; ++j)
        for (int p = n + j - 1; p >= j; --p)
            wb.put(p, 2, tok, SignSeq(2, orientation));
    Morphism raw = reduce_sum(src.eps, tgt.eps, {{Q(1), wb.text()}});
    return {src, tgt, compose(tgt.e, compose(raw, src.e))};
}

std::vector<DotTuple> Karoubi::solve_order(int n, int m) const
{
    std::vector<DotTuple> all;
    for (int k = 0; k <= std::min(n, m); ++k)
        for (auto& b : dot_tuples(k, weight().d))
            all.push_back(b);
    std::stable_sort(all.begin(), all.end(), [](const DotTuple& a, const DotTuple& b) {
        if (a.total() != b.total())
            return a.total() > b.total();
        return a.b < b.b;
    });
    return all;
}

std::map<DotTuple, KaroubiMorphism> Karoubi::theta_solve(int n, int m)
{
    check_cap(std::max(n, m));
    auto order = solve_order(n, m);
    std::map<DotTuple, KaroubiMorphism> beta, theta;
    for (const auto& b : order)
        beta.emplace(b, build_interchange(n, m, b, Interchange::beta));
    std::vector<DotTuple> done;
    for (const auto& c : order) {
        int k = c.length();
        KaroubiMorphism a = build_interchange(n, m, c, Interchange::alpha);
        Q scale = factorial(n) * factorial(m) / (Q(c.stabilizer()) * factorial(n - k) * factorial(m - k));
        KaroubiMorphism t = a;
        t.f *= PiPoly(scale);
        Morphism corr = Morphism::zero(t.f.dom, t.f.cod);
        for (const auto& b : done) {
            Morphism tb = compose(t.f, beta.at(b).f);
            if (!tb.is_zero())
                corr += compose(tb, theta.at(b).f);
        }
        t.f += corr * PiPoly(-1);
        theta.emplace(c, t);
        done.push_back(c);
    }
    for (const auto& c : order)
        for (const auto& b : order) {
            Morphism g = compose(theta.at(c).f, beta.at(b).f);
            bool ok = c == b ? g == beta.at(b).src.e : g.is_zero();
            if (!ok)
                throw internal_error("theta_solve: theta_" + c.str() + " o beta_" + b.str() +
                                     " is not the expected identity or zero");
        }
    return theta;
}

DecompositionReport Karoubi::decompose_identity(int n, int m)
{
    DecompositionReport rep;
    rep.n = n;
    rep.m = m;
    rep.weight = weight().str();
    rep.d = weight().d;
    auto theta = theta_solve(n, m);
    KaroubiObject big = tensor(symmetrizer(n, '-'), symmetrizer(m, '+'));
    for (const auto& [b, t] : theta) {
        KaroubiMorphism be = build_interchange(n, m, b, Interchange::beta);
        rep.idempotents.push_back({b, compose(be.f, t.f)});
    }
    rep.orthogonal = true;
    Morphism sum = Morphism::zero(big.eps, big.eps);
    for (const auto& [b, p] : rep.idempotents) {
        sum += p;
        for (const auto& [c, q] : rep.idempotents) {
            Morphism pq = compose(p, q);
            if (!(b == c ? pq == p : pq.is_zero()))
                rep.orthogonal = false;
        }
        if (!p.is_zero())
            ++rep.multiplicities[b.length()];
    }
    rep.complete = sum == big.e;
    return rep;
}

} // namespace heis
