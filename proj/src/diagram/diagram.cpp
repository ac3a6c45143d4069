#include "engine.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <sstream>

namespace heis {

std::string Endpoint::str() const { return (top ? "t" : "b") + std::to_string(pos); }

Endpoint Endpoint::parse(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'b' && s[0] != 't')) throw input_error("bad endpoint '" + s + "'");
    try {
        size_t used = 0;
        int p = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1 || p < 0) throw input_error("bad endpoint '" + s + "'");
        return Endpoint{s[0] == 't', p};
    } catch (const std::logic_error&) {
        throw input_error("bad endpoint '" + s + "'");
    }
}

int BasisDiagram::total_dots() const { return std::accumulate(dots.begin(), dots.end(), 0); }

std::string BasisDiagram::str() const {
    if (strands.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < strands.size(); ++i) {
        if (i) s += " ";
        s += strands[i].first.str() + "->" + strands[i].second.str();
        if (dots[i]) s += ":" + std::to_string(dots[i]);
    }
    return s + "]";
}

Morphism Morphism::zero(const SignSeq& dom, const SignSeq& cod) {
    Morphism m;
    m.dom = dom;
    m.cod = cod;
    return m;
}

void Morphism::add(const BasisDiagram& b, const PiPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

PiPoly Morphism::scalar() const {
    if (!dom.empty() || !cod.empty()) throw input_error("scalar of a morphism with nonempty boundary");
    return terms.empty() ? PiPoly() : terms.begin()->second;
}

Morphism& Morphism::operator+=(const Morphism& o) {
    if (o.dom != dom || o.cod != cod) throw input_error("adding morphisms of different signatures");
    for (auto& [b, c] : o.terms) add(b, c);
    return *this;
}

Morphism& Morphism::operator*=(const PiPoly& c) {
    std::map<BasisDiagram, PiPoly> r;
    for (auto& [b, p] : terms) {
        PiPoly q = p * c;
        if (!q.is_zero()) r.emplace(b, std::move(q));
    }
    terms = std::move(r);
    return *this;
}

std::string Morphism::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [b, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")" + b.str();
    }
    return s;
}

nlohmann::json to_json(const Morphism& m) {
    nlohmann::json j;
    j["domain"] = m.dom;
    j["codomain"] = m.cod;
    j["terms"] = nlohmann::json::array();
    for (auto& [b, c] : m.terms) {
        nlohmann::json t;
        t["matching"] = nlohmann::json::array();
        for (auto& [a, z] : b.strands) t["matching"].push_back({a.str(), z.str()});
        t["dots"] = b.dots;
        nlohmann::json co = nlohmann::json::object();
        for (auto& [mono, q] : c.terms()) co[PiPoly::mono_str(mono)] = to_string(q);
        t["coeff"] = co;
        j["terms"].push_back(t);
    }
    return j;
}

namespace {

void check_diagram(const BasisDiagram& b) {
    auto sign = [&](const Endpoint& e) {
        const SignSeq& s = e.top ? b.cod : b.dom;
        if (e.pos < 0 || e.pos >= static_cast<int>(s.size())) throw input_error("endpoint " + e.str() + " out of range");
        return s[e.pos];
    };
    std::set<Endpoint> seen;
    for (auto& [in, out] : b.strands) {
        if ((sign(in) == '+') == in.top) throw input_error("endpoint " + in.str() + " is not an in-endpoint");
        if ((sign(out) == '+') != out.top) throw input_error("endpoint " + out.str() + " is not an out-endpoint");
        if (!seen.insert(in).second || !seen.insert(out).second) throw input_error("endpoint used twice");
    }
    if (seen.size() != b.dom.size() + b.cod.size()) throw input_error("matching does not cover every endpoint");
    for (int x : b.dots)
        if (x < 0) throw input_error("negative dot count");
}

} // namespace

Morphism morphism_from_json(const nlohmann::json& j) {
    try {
        Morphism m = Morphism::zero(j.at("domain").get<std::string>(), j.at("codomain").get<std::string>());
        for (auto& t : j.at("terms")) {
            BasisDiagram b;
            b.dom = m.dom;
            b.cod = m.cod;
            for (auto& pr : t.at("matching"))
                b.strands.push_back({Endpoint::parse(pr.at(0).get<std::string>()), Endpoint::parse(pr.at(1).get<std::string>())});
            b.dots = t.at("dots").get<std::vector<int>>();
            if (b.dots.size() != b.strands.size()) throw input_error("dots and matching differ in length");
            std::sort(b.strands.begin(), b.strands.end());
            check_diagram(b);
            PiPoly c;
            for (auto& [mono, q] : t.at("coeff").items()) {
                std::string qs = q.is_string() ? q.get<std::string>() : q.dump();
                c.add(PiPoly::parse_mono(mono), parse_rational(qs));
            }
            m.add(b, c);
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad morphism JSON: ") + e.what());
    }
}

Reducer::Reducer(const Weight& w) : w_(w), cache_(std::make_unique<CanonCache>()) {}
Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Morphism Reducer::reduce(const SliceWord& w, const ReduceOptions& opt) {
    pm::Engine eng(w_, opt, cache_.get());
    return eng.reduce_word(w);
}

Morphism Reducer::reduce(const std::string& text, const ReduceOptions& opt) { return reduce(parse_slice_word(text), opt); }

Morphism Reducer::compose(const Morphism& f, const Morphism& g, const ReduceOptions& opt) {
    if (f.dom != g.cod) throw input_error("compose: domain '" + f.dom + "' does not match codomain '" + g.cod + "'");
    Morphism r = Morphism::zero(g.dom, f.cod);
    for (auto& [bg, pg] : g.terms)
        for (auto& [bf, pf] : f.terms) r += reduce(stack(to_word(bg), to_word(bf)), opt) * (pg * pf);
    return r;
}

Morphism Reducer::tensor(const Morphism& f, const Morphism& g, const ReduceOptions& opt) {
    Morphism r = Morphism::zero(f.dom + g.dom, f.cod + g.cod);
    for (auto& [bf, pf] : f.terms)
        for (auto& [mono, q] : pf.terms())
            for (auto& [bg, pg] : g.terms)
                r += reduce(juxtapose(to_word(bf, mono, w_), to_word(bg)), opt) * (pg * PiPoly(q));
    return r;
}

Morphism Reducer::identity(const SignSeq& s) const {
    BasisDiagram b;
    b.dom = b.cod = s;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == '+') b.strands.push_back({{false, i}, {true, i}});
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == '-') b.strands.push_back({{true, i}, {false, i}});
    b.dots.assign(b.strands.size(), 0);
    Morphism m = Morphism::zero(s, s);
    m.add(b, PiPoly(1));
    return m;
}

int Reducer::filtration_degree(const Morphism& m) const {
    int best = INT_MIN;
    for (auto& [b, c] : m.terms) best = std::max(best, degree(b, w_) + c.degree());
    return best;
}

std::vector<std::pair<Q, SliceWord>> to_words(const Morphism& m, const Weight& w) {
    std::vector<std::pair<Q, SliceWord>> out;
    for (auto& [b, c] : m.terms)
        for (auto& [mono, q] : c.terms()) out.push_back({q, to_word(b, mono, w)});
    return out;
}

std::vector<BasisDiagram> basis_enumerate(const SignSeq& dom, const SignSeq& cod, int dot_budget) {
    std::vector<Endpoint> ins, outs;
    for (int i = 0; i < static_cast<int>(dom.size()); ++i) (dom[i] == '+' ? ins : outs).push_back({false, i});
    for (int j = 0; j < static_cast<int>(cod.size()); ++j) (cod[j] == '+' ? outs : ins).push_back({true, j});
    std::vector<BasisDiagram> res;
    if (ins.size() != outs.size() || dot_budget < 0) return res;
    size_t k = ins.size();
    std::sort(ins.begin(), ins.end());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    // dot vectors with total <= budget
    std::vector<std::vector<int>> dv;
    std::vector<int> cur(k, 0);
    auto gen = [&](size_t i, int left, auto& self) -> void {
        if (i == k) {
            dv.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur[i] = a;
            self(i + 1, left - a, self);
        }
        cur[i] = 0;
    };
    gen(0, dot_budget, gen);
    do {
        BasisDiagram b;
        b.dom = dom;
        b.cod = cod;
        for (size_t i = 0; i < k; ++i) b.strands.push_back({ins[i], outs[perm[i]]});
        for (auto& d : dv) {
            b.dots = d;
            res.push_back(b);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(res.begin(), res.end());
    return res;
}

Morphism dot_shift_image(const Morphism& m, int j, const Weight& w) {
    Weight mu = w.shifted(j);
    int d = w.d;
    Q mj = -j;
    auto pw = [](const Q& a, int e) {
        Q r = 1;
        for (int i = 0; i < e; ++i) r *= a;
        return r;
    };
    std::map<int, PiPoly> ysub;
    auto image_y = [&](int t) -> const PiPoly& {
        auto it = ysub.find(t);
        if (it != ysub.end()) return it->second;
        PiPoly r;
        for (int i = 0; i <= d + t; ++i) r += bubble_value(i, mu) * (binomial(d + t, i) * pw(mj, d + t - i));
        return ysub[t] = r;
    };
    Morphism res = Morphism::zero(m.dom, m.cod);
    for (auto& [b, c] : m.terms) {
        PiPoly cimg;
        for (auto& [mono, q] : c.terms()) {
            PiPoly t(q);
            for (size_t k = 0; k < mono.size(); ++k)
                for (int r = 0; r < mono[k]; ++r) t *= image_y(static_cast<int>(k) + 1);
            cimg += t;
        }
        if (cimg.is_zero()) continue;
        // expand (x - j)^k on every strand
        std::vector<std::pair<std::vector<int>, Q>> dts{{{}, Q(1)}};
        for (int k : b.dots) {
            std::vector<std::pair<std::vector<int>, Q>> nx;
            for (auto& [v, q] : dts)
                for (int i = 0; i <= k; ++i) {
                    Q a = binomial(k, i) * pw(mj, k - i);
                    if (a == 0) continue;
                    auto v2 = v;
                    v2.push_back(i);
                    nx.push_back({v2, q * a});
                }
            dts = std::move(nx);
        }
        for (auto& [v, q] : dts) {
            BasisDiagram b2 = b;
            b2.dots = v;
            res.add(b2, cimg * q);
        }
    }
    return res;
}

} // namespace heis
