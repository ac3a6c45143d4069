#include "heis/pipoly.hpp"

#include "heis/errors.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace heis {

namespace {

void trim(PiMono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

PiMono mono_mul(const PiMono& a, const PiMono& b) {
    PiMono r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

} // namespace

PiPoly::PiPoly(const Q& c) {
    if (c != 0) terms_[{}] = c;
}

PiPoly PiPoly::var(int k) {
    if (k < 1) throw input_error("bubble variable index must be >= 1");
    PiMono m(k, 0);
    m[k - 1] = 1;
    PiPoly p;
    p.terms_[m] = 1;
    return p;
}

bool PiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Q PiPoly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Q(0) : it->second;
}

void PiPoly::add(const PiMono& m0, const Q& c) {
    if (c == 0) return;
    PiMono m = m0;
    trim(m);
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int PiPoly::mono_degree(const PiMono& m) {
    int deg = 0;
    for (size_t i = 0; i < m.size(); ++i) deg += m[i] * static_cast<int>(i + 2);
    return deg;
}

int PiPoly::degree() const {
    int best = INT_MIN;
    for (auto& [m, c] : terms_) best = std::max(best, mono_degree(m));
    return best;
}

int PiPoly::max_var() const {
    int k = 0;
    for (auto& [m, c] : terms_) k = std::max(k, static_cast<int>(m.size()));
    return k;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
    PiPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add(mono_mul(ma, mb), ca * cb);
    *this = std::move(r);
    return *this;
}

PiPoly& PiPoly::operator*=(const Q& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string PiPoly::mono_str(const PiMono& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "y" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string PiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Q a = abs(c);
        std::string body;
        if (m.empty()) body = to_string(a);
        else if (a == 1) body = mono_str(m);
        else body = to_string(a) + "*" + mono_str(m);
        if (out.empty()) out = (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

PiMono PiPoly::parse_mono(const std::string& text) {
    PiMono m;
    if (text == "1" || text.empty()) return m;
    std::stringstream ss(text);
    std::string f;
    while (std::getline(ss, f, '*')) {
        if (f.size() < 2 || f[0] != 'y') throw input_error("bad bubble monomial '" + text + "'");
        size_t caret = f.find('^');
        int k = 0, e = 1;
        try {
            k = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            if (caret != std::string::npos) e = std::stoi(f.substr(caret + 1));
        } catch (const std::exception&) {
            throw input_error("bad bubble monomial '" + text + "'");
        }
        if (k < 1 || e < 0) throw input_error("bad bubble monomial '" + text + "'");
        if (static_cast<int>(m.size()) < k) m.resize(k, 0);
        m[k - 1] += e;
    }
    trim(m);
    return m;
}

PiPoly PiPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw input_error("empty polynomial");
    PiPoly p;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw input_error("bad polynomial '" + text + "'");
        Q c = 1;
        std::string mono = term;
        if (term[0] != 'y') {
            size_t star = term.find('*');
            c = parse_rational(term.substr(0, star));
            mono = star == std::string::npos ? "" : term.substr(star + 1);
        }
        p.add(parse_mono(mono), sign * c);
        i = j;
    }
    return p;
}

PiPoly bubble_value(int t, const Weight& w) {
    int d = w.d;
    if (t < d - 1) return PiPoly();
    if (t == d - 1) return PiPoly(1);
    if (t == d) return PiPoly(w.residue_sum());
    return PiPoly::var(t - d);
}

namespace {

PiPoly det(std::vector<std::vector<PiPoly>> a) {
    size_t n = a.size();
    if (n == 0) return PiPoly(1);
    if (n == 1) return a[0][0];
    PiPoly r;
    for (size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<PiPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<PiPoly> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        PiPoly t = a[0][c] * det(std::move(minor));
        if (c % 2) r -= t;
        else r += t;
    }
    return r;
}

} // namespace

PiPoly structure_scalar(int s, const Weight& w) {
    if (s < 0 || s > w.d) throw input_error("structure scalar index out of range");
    std::vector<std::vector<PiPoly>> a(s, std::vector<PiPoly>(s));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) a[i - 1][j - 1] = bubble_value(w.d + j - i, w);
    PiPoly r = det(std::move(a));
    return s % 2 ? -r : r;
}

} // namespace heis
