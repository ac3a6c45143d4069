#include "heis/affine.hpp"

#include "heis/errors.hpp"

namespace heis {

AffineElement AffineElement::scalar(int n, const Q& c)
{
    AffineElement a(n);
    a.add({std::vector<int>(n, 0), Perm::identity(n)}, c);
    return a;
}

AffineElement AffineElement::x(int n, int i)
{
    if (i < 1 || i > n)
        throw input_error("x_" + std::to_string(i) + " out of range for rank " + std::to_string(n));
    AffineElement a(n);
    PbwKey k{std::vector<int>(n, 0), Perm::identity(n)};
    k.e[i - 1] = 1;
    a.add(k, Q(1));
    return a;
}

AffineElement AffineElement::s(int n, int i)
{
    if (i < 1 || i >= n)
        throw input_error("s_" + std::to_string(i) + " out of range for rank " + std::to_string(n));
    AffineElement a(n);
    a.add({std::vector<int>(n, 0), Perm::simple(n, i - 1)}, Q(1));
    return a;
}

void AffineElement::add(const PbwKey& k, const Q& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AffineElement& AffineElement::operator+=(const AffineElement& o)
{
    if (o.n_ != n_)
        throw input_error("rank mismatch");
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

AffineElement& AffineElement::operator-=(const AffineElement& o)
{
    if (o.n_ != n_)
        throw input_error("rank mismatch");
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

AffineElement& AffineElement::operator*=(const Q& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

AffineElement operator+(AffineElement a, const AffineElement& b) { return a += b; }
AffineElement operator-(AffineElement a, const AffineElement& b) { return a -= b; }
AffineElement operator*(const Q& c, AffineElement a) { return a *= c; }

std::vector<std::pair<Perm, Q>> perm_times_x_lower(const Perm& w, int k)
{
    int n = w.rank();
    std::vector<int> word = w.reduced_word();
    // process w = s_{i_1} ... s_{i_l} from the right
    Perm v = Perm::identity(n);
    int j = k;
    std::map<Perm, Q> lower;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        Perm si = Perm::simple(n, i);
        std::map<Perm, Q> next;
        for (const auto& [p, c] : lower)
            next[si * p] += c;
        if (j == i) {
            next[v] -= 1; // s_i x_i = x_{i+1} s_i - 1
            j = i + 1;
        } else if (j == i + 1) {
            next[v] += 1; // s_i x_{i+1} = x_i s_i + 1
            j = i;
        }
        v = si * v;
        lower.clear();
        for (auto& [p, c] : next)
            if (c != 0)
                lower.emplace(p, c);
    }
    return {lower.begin(), lower.end()};
}

std::map<std::vector<int>, Q> divided_difference(const std::vector<int>& e, int q)
{
    std::map<std::vector<int>, Q> out;
    int a = e[q], b = e[q + 1];
    if (a == b)
        return out;
    int lo = std::min(a, b), hi = std::max(a, b);
    Q sign = a > b ? 1 : -1;
    for (int u = 0; u <= hi - lo - 1; ++u) {
        std::vector<int> m = e;
        m[q] = lo + u;
        m[q + 1] = lo + (hi - lo - 1 - u);
        out[m] += sign;
    }
    return out;
}

AffineElement operator*(const AffineElement& a, const AffineElement& b)
{
    if (a.rank() != b.rank())
        throw input_error("rank mismatch in affine product");
    int n = a.rank();
    AffineElement out(n);
    for (const auto& [kb, cb] : b.terms()) {
        for (const auto& [ka, ca] : a.terms()) {
            // w * x^{e_b} as sum of x^c u
            std::map<PbwKey, Q> cur;
            cur[{std::vector<int>(n, 0), ka.w}] = 1;
            for (int k = 0; k < n; ++k) {
                for (int t = 0; t < kb.e[k]; ++t) {
                    std::map<PbwKey, Q> next;
                    for (const auto& [key, c] : cur) {
                        PbwKey lead = key;
                        lead.e[key.w(k)] += 1;
                        next[lead] += c;
                        for (const auto& [p, cp] : perm_times_x_lower(key.w, k))
                            next[{key.e, p}] += c * cp;
                    }
                    cur.clear();
                    for (auto& [key, c] : next)
                        if (c != 0)
                            cur.emplace(key, c);
                }
            }
            for (const auto& [key, c] : cur) {
                PbwKey r{key.e, key.w * kb.w};
                for (int i = 0; i < n; ++i)
                    r.e[i] += ka.e[i];
                out.add(r, ca * cb * c);
            }
        }
    }
    return out;
}

std::string monomial_str(const PbwKey& k)
{
    std::string s;
    for (size_t i = 0; i < k.e.size(); ++i) {
        if (!k.e[i])
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (k.e[i] > 1)
            s += "^" + std::to_string(k.e[i]);
    }
    for (int g : k.w.reduced_word()) {
        if (!s.empty())
            s += "*";
        s += "s" + std::to_string(g + 1);
    }
    return s.empty() ? "1" : s;
}

std::string AffineElement::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        std::string m = monomial_str(k);
        bool neg = c < 0;
        Q a = neg ? Q(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m == "1")
            s += to_string(a);
        else if (a == 1)
            s += m;
        else
            s += to_string(a) + "*" + m;
    }
    return s;
}

} // namespace heis
