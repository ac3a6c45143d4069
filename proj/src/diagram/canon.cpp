#include "engine.hpp"

#include "heis/errors.hpp"

#include <algorithm>

namespace heis::pm {

StrandInfo Engine::strands(const PMap& m) const {
    StrandInfo si;
    si.strand_of_edge.assign(m.ne(), -1);
    int ndom = static_cast<int>(dom.size());
    std::vector<int> in_darts;
    for (int v = 0; v < m.nv(); ++v) {
        if (m.kind[v] != VK::Bound) continue;
        for (int x : m.rot[v])
            if (!m.frame[edge_of(x)] && !is_head(x)) in_darts.push_back(x);
    }
    auto id_of = [&](int v) {
        int b = m.bpos[v];
        return b > 0 ? b - 1 : ndom + (-b - 1);
    };
    std::sort(in_darts.begin(), in_darts.end(),
              [&](int a, int b) { return id_of(m.dart_v[a]) < id_of(m.dart_v[b]); });
    for (int x : in_darts) {
        int s = static_cast<int>(si.in_id.size());
        si.in_id.push_back(id_of(m.dart_v[x]));
        si.seq.emplace_back();
        int e = edge_of(x);
        for (int guard = 0;; ++guard) {
            if (guard > m.ne()) throw internal_error("strand walk does not terminate");
            si.strand_of_edge[e] = s;
            int h = m.head(e);
            if (m.kind[h] == VK::Bound) {
                si.out_id.push_back(id_of(h));
                si.last_edge.push_back(e);
                break;
            }
            e = m.next_edge(e);
        }
    }
    for (int e = 0; e < m.ne(); ++e)
        if (!m.frame[e] && si.strand_of_edge[e] < 0) si.closed_strand = true;
    if (si.closed_strand) return si;
    for (size_t s = 0; s < si.in_id.size(); ++s) {
        int e = -1;
        for (int x : in_darts)
            if (si.strand_of_edge[edge_of(x)] == static_cast<int>(s)) e = edge_of(x);
        while (m.kind[m.head(e)] == VK::Cross) {
            int v = m.head(e);
            for (int x : m.rot[v])
                if (si.strand_of_edge[edge_of(x)] != static_cast<int>(s)) {
                    si.seq[s].push_back(si.strand_of_edge[edge_of(x)]);
                    break;
                }
            e = m.next_edge(e);
        }
    }
    return si;
}

BasisDiagram Engine::extract_basis(const Term& t, const StrandInfo& si) const {
    BasisDiagram b;
    b.dom = dom;
    b.cod = cod;
    int ndom = static_cast<int>(dom.size());
    for (size_t s = 0; s < si.in_id.size(); ++s) {
        b.strands.push_back({endpoint_of(si.in_id[s], ndom), endpoint_of(si.out_id[s], ndom)});
        int dots = 0;
        for (int e = 0; e < t.m.ne(); ++e)
            if (si.strand_of_edge[e] == static_cast<int>(s)) dots += t.m.dots[e];
        b.dots.push_back(dots);
    }
    return b;
}

const CanonData& Engine::canon(const BasisDiagram& shape) {
    auto it = cache_->shapes.find(shape);
    if (it != cache_->shapes.end()) return it->second;
    auto ts = build(to_word(shape));
    if (ts.size() != 1) throw internal_error("canonical drawing is not a single diagram");
    StrandInfo si = strands(ts[0].m);
    CanonData cd;
    for (size_t s = 0; s < si.seq.size(); ++s)
        for (size_t i = 0; i < si.seq[s].size(); ++i) {
            auto key = std::pair{si.in_id[s], si.in_id[si.seq[s][i]]};
            if (cd.pos.count(key)) throw internal_error("canonical drawing crosses a pair twice");
            cd.pos[key] = static_cast<int>(i);
        }
    return cache_->shapes[shape] = std::move(cd);
}

} // namespace heis::pm

namespace heis {

namespace {

Token id_tok(char s) { return Token{s == '+' ? Tok::ID_UP : Tok::ID_DOWN, 1}; }

Tok cross_tok(char l, char r) {
    if (l == '+' && r == '+') return Tok::CROSS_UU;
    if (l == '-' && r == '-') return Tok::CROSS_DD;
    return l == '+' ? Tok::CROSS_DU : Tok::CROSS_UD;
}

} // namespace

SliceWord to_word(const BasisDiagram& b) {
    int k1 = static_cast<int>(b.dom.size()), k2 = static_cast<int>(b.cod.size());
    SliceWord w;
    w.dom = b.dom;
    w.cod = b.cod;
    std::vector<int> bot_dots(k1, 0), top_dots(k2, 0);
    // strand through each endpoint
    std::vector<int> at_bot(k1, -1), at_top(k2, -1);
    for (size_t s = 0; s < b.strands.size(); ++s) {
        for (const Endpoint& e : {b.strands[s].first, b.strands[s].second}) (e.top ? at_top[e.pos] : at_bot[e.pos]) = s;
        const Endpoint& z = b.strands[s].second;
        (z.top ? top_dots[z.pos] : bot_dots[z.pos]) += b.dots[s];
    }
    auto top_pos = [&](int s) {
        for (const Endpoint& e : {b.strands[s].first, b.strands[s].second})
            if (e.top) return e.pos;
        return -1;
    };
    std::vector<int> legs, lp; // lp: top position of each leg, cup stage only
    std::vector<char> sg;
    for (int i = 0; i < k1; ++i) {
        legs.push_back(at_bot[i]);
        sg.push_back(b.dom[i]);
    }
    auto slice_with = [&](size_t at, std::vector<Token> mid, size_t width) {
        Slice s;
        for (size_t i = 0; i < at; ++i) s.push_back(id_tok(sg[i]));
        s.insert(s.end(), mid.begin(), mid.end());
        for (size_t i = at + width; i < sg.size(); ++i) s.push_back(id_tok(sg[i]));
        w.slices.push_back(std::move(s));
    };
    auto cross_at = [&](size_t i) {
        slice_with(i, {Token{cross_tok(sg[i], sg[i + 1]), 1}}, 2);
        std::swap(legs[i], legs[i + 1]);
        std::swap(sg[i], sg[i + 1]);
        if (!lp.empty()) std::swap(lp[i], lp[i + 1]);
    };
    if (std::any_of(bot_dots.begin(), bot_dots.end(), [](int x) { return x; })) {
        Slice s;
        for (int i = 0; i < k1; ++i) s.push_back(bot_dots[i] ? Token{Tok::DOT_DOWN, bot_dots[i]} : id_tok(b.dom[i]));
        w.slices.push_back(std::move(s));
    }
    // caps, by increasing right endpoint
    std::vector<std::pair<int, int>> caps, cups;
    for (auto& [a, z] : b.strands) {
        if (!a.top && !z.top) caps.push_back({std::max(a.pos, z.pos), std::min(a.pos, z.pos)});
        if (a.top && z.top) cups.push_back({std::max(a.pos, z.pos), std::min(a.pos, z.pos)});
    }
    std::sort(caps.begin(), caps.end());
    for (auto [q, p] : caps) {
        int s = at_bot[p];
        size_t ip = std::find(legs.begin(), legs.end(), s) - legs.begin();
        size_t iq = std::find(legs.begin() + ip + 1, legs.end(), s) - legs.begin();
        for (size_t t = iq; t > ip + 1; --t) cross_at(t - 1);
        slice_with(ip, {Token{sg[ip] == '+' ? Tok::CAP_CW : Tok::CAP_CCW, 1}}, 2);
        legs.erase(legs.begin() + ip, legs.begin() + ip + 2);
        sg.erase(sg.begin() + ip, sg.begin() + ip + 2);
    }
    // through strands into top order
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t i = 0; i + 1 < legs.size(); ++i)
            if (top_pos(legs[i]) > top_pos(legs[i + 1])) {
                cross_at(i);
                moved = true;
                break;
            }
    }
    // cups, by decreasing right endpoint
    std::sort(cups.rbegin(), cups.rend());
    for (int s : legs) lp.push_back(top_pos(s));
    for (auto [q, p] : cups) {
        int s = at_top[p];
        size_t i = 0;
        while (i < lp.size() && lp[i] < p) ++i;
        slice_with(i, {Token{b.cod[p] == '-' ? Tok::CUP_CCW : Tok::CUP_CW, 1}}, 0);
        legs.insert(legs.begin() + i, {s, s});
        sg.insert(sg.begin() + i, {b.cod[p], b.cod[q]});
        lp.insert(lp.begin() + i, {p, q});
        for (size_t t = i + 1; t + 1 < lp.size() && lp[t + 1] < q; ++t) cross_at(t);
    }
    if (std::any_of(top_dots.begin(), top_dots.end(), [](int x) { return x; })) {
        Slice s;
        for (int j = 0; j < k2; ++j) s.push_back(top_dots[j] ? Token{Tok::DOT_UP, top_dots[j]} : id_tok(b.cod[j]));
        w.slices.push_back(std::move(s));
    }
    return w;
}

SliceWord to_word(const BasisDiagram& b, const PiMono& mono, const Weight& wt) {
    SliceWord w = to_word(b);
    for (size_t k = 0; k < mono.size(); ++k)
        for (int r = 0; r < mono[k]; ++r) {
            Slice a, m, z;
            for (char s : b.cod) {
                a.push_back(id_tok(s));
                m.push_back(id_tok(s));
                z.push_back(id_tok(s));
            }
            a.push_back(Token{Tok::CUP_CCW, 1});
            m.push_back(id_tok('-'));
            m.push_back(Token{Tok::DOT_UP, wt.d + static_cast<int>(k) + 1});
            z.push_back(Token{Tok::CAP_CCW, 1});
            w.slices.push_back(std::move(a));
            w.slices.push_back(std::move(m));
            w.slices.push_back(std::move(z));
        }
    return w;
}

int degree(const BasisDiagram& b, const Weight& w) {
    SliceWord sw = to_word(b);
    int deg = 0;
    for (auto& s : sw.slices)
        for (auto& t : s) {
            if (t.kind == Tok::DOT_UP || t.kind == Tok::DOT_DOWN) deg += t.dots;
            if (t.kind == Tok::CUP_CW) deg += w.d - 1;
            if (t.kind == Tok::CAP_CCW) deg -= w.d - 1;
        }
    return deg;
}

} // namespace heis
