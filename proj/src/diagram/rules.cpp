#include "engine.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace heis::pm {

namespace {

int index_in(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw internal_error("rule: dart not on the disk boundary");
    return static_cast<int>(it - v.begin());
}

// boundary index where the strand entering at boundary dart b leaves the disk
int follow(const PMap& m, const std::vector<int>& bd, int b, std::vector<int>* through = nullptr) {
    int z = m.straight(b);
    if (through) through->push_back(m.dart_v[b]);
    for (int guard = 0; guard < 64; ++guard) {
        auto it = std::find(bd.begin(), bd.end(), z);
        if (it != bd.end()) return static_cast<int>(it - bd.begin());
        int y = rev(z);
        if (through) through->push_back(m.dart_v[y]);
        z = m.straight(y);
        if (z < 0) break;
    }
    throw internal_error("rule: strand does not cross the disk");
}

bool is_cross_face(const PMap& m, const std::vector<int>& f) {
    std::set<int> vs, es;
    for (int x : f) {
        if (m.kind[m.dart_v[x]] != VK::Cross || m.frame[edge_of(x)]) return false;
        vs.insert(m.dart_v[x]);
        es.insert(edge_of(x));
    }
    return vs.size() == f.size() && es.size() == f.size();
}

} // namespace

void dot_slide(Engine& eng, const Term& t, int e, std::vector<Term>& out) {
    const PMap& m = t.m;
    int h = 2 * e + 1, X = m.dart_v[h];
    if (m.kind[X] != VK::Cross || m.dots[e] == 0) throw internal_error("dot slide at a non-crossing");
    eng.spend(t, "dot slide");
    Term base = t;
    base.m.dots[e] -= 1;
    int so = m.straight(h);
    Term moved = base;
    moved.m.dots[edge_of(so)] += 1;
    out.push_back(std::move(moved));
    const auto& r = m.rot[X];
    int t_in = -1, t_out = -1;
    for (int x : r) {
        if (x == h || x == so) continue;
        (is_head(x) ? t_in : t_out) = x;
    }
    Engine::Content c;
    c.factor = m.ccw(so) == t_out ? 1 : -1;
    std::vector<int> bd(r.begin(), r.end());
    auto bp = [&](int x) { return Engine::End{true, index_in(bd, x), 0}; };
    c.wires.push_back({bp(h), bp(t_out), 0});
    c.wires.push_back({bp(t_in), bp(so), 0});
    for (auto& u : eng.surgery(base, {X}, {}, bd, c)) out.push_back(std::move(u));
}

namespace {

void curl(Engine& eng, const Term& t, int x, std::vector<Term>& out) {
    const PMap& m = t.m;
    int e = edge_of(x);
    if (m.dots[e]) {
        dot_slide(eng, t, e, out);
        return;
    }
    eng.spend(t, "curl");
    if (!is_head(x)) return; // left curl vanishes
    int v = m.dart_v[x];
    auto bd = Engine::disk_boundary(m, {x});
    int k_in = is_head(bd[0]) ? 0 : 1;
    for (int j = 0; j <= eng.d(); ++j) {
        Engine::Content c;
        c.wires.push_back({{true, k_in, 0}, {true, 1 - k_in, 0}, j});
        c.poly_corner = k_in;
        c.poly = eng.c(eng.d() - j);
        for (auto& u : eng.surgery(t, {v}, {e}, bd, c)) out.push_back(std::move(u));
    }
}

void bigon(Engine& eng, const Term& t, const std::vector<int>& f, std::vector<Term>& out) {
    const PMap& m = t.m;
    for (int x : f)
        if (m.dots[edge_of(x)]) {
            dot_slide(eng, t, edge_of(x), out);
            return;
        }
    eng.spend(t, "bigon");
    int v0 = m.dart_v[f[0]], v1 = m.dart_v[f[1]];
    auto bd = Engine::disk_boundary(m, f);
    std::vector<int> internal{edge_of(f[0]), edge_of(f[1])};
    Engine::Content id;
    for (int k = 0; k < 4; ++k)
        if (is_head(bd[k])) id.wires.push_back({{true, k, 0}, {true, follow(m, bd, bd[k]), 0}, 0});
    bool fw0 = !is_head(f[0]), fw1 = !is_head(f[1]);
    if (fw0 != fw1 || fw0) {
        // parallel strands or the counterclockwise antiparallel bigon
        for (auto& u : eng.surgery(t, {v0, v1}, internal, bd, id)) out.push_back(std::move(u));
        return;
    }
    for (auto& u : eng.surgery(t, {v0, v1}, internal, bd, id)) out.push_back(std::move(u));
    int es = edge_of(f[eng.coin() ? 1 : 0]);
    int X = m.tail(es), Y = m.head(es);
    int s_in = -1, t_out = -1, t_in = -1, s_out = -1, central = -1;
    for (int k = 0; k < 4; ++k) {
        int v = m.dart_v[bd[k]];
        bool in = is_head(bd[k]);
        if (v == X) (in ? s_in : t_out) = k;
        else (in ? t_in : s_out) = k;
        if (v == Y && m.dart_v[bd[(k + 1) % 4]] == X) central = k;
    }
    int d = eng.d();
    for (int j = 0; j < d; ++j)
        for (int i = j; i < d; ++i) {
            Engine::Content c;
            c.factor = -1;
            c.wires.push_back({{true, s_in, 0}, {true, t_out, 0}, i - j});
            c.wires.push_back({{true, t_in, 0}, {true, s_out, 0}, j});
            c.poly_corner = central;
            c.poly = eng.c(d - 1 - i);
            for (auto& u : eng.surgery(t, {v0, v1}, internal, bd, c)) out.push_back(std::move(u));
        }
}

} // namespace

void flip(Engine& eng, const Term& t, const std::vector<int>& f, std::vector<Term>& out) {
    const PMap& m = t.m;
    eng.spend(t, "triangle flip");
    auto bd = Engine::disk_boundary(m, f);
    if (bd.size() != 6) throw internal_error("triangle flip: boundary is not six points");
    std::vector<int> verts{m.dart_v[f[0]], m.dart_v[f[1]], m.dart_v[f[2]]};
    std::vector<int> internal{edge_of(f[0]), edge_of(f[1]), edge_of(f[2])};
    struct Chord {
        int in, out;
        std::vector<int> vs; // triangle vertices in strand order
    };
    std::vector<Chord> ch;
    for (int k = 0; k < 6; ++k) {
        if (!is_head(bd[k])) continue;
        Chord c{k, -1, {}};
        c.out = follow(m, bd, bd[k], &c.vs);
        if (c.vs.size() != 2 || (c.out - c.in + 6) % 6 != 3) throw internal_error("triangle flip: malformed chord");
        ch.push_back(c);
    }
    if (ch.size() != 3) throw internal_error("triangle flip: expected three chords");
    // partner chord at a vertex
    auto partner = [&](int a, int v) {
        for (int b = 0; b < 3; ++b)
            if (b != a && std::count(ch[b].vs.begin(), ch[b].vs.end(), v)) return b;
        throw internal_error("triangle flip: vertex on one chord");
    };
    std::vector<std::array<int, 2>> old_order(3);
    for (int a = 0; a < 3; ++a) old_order[a] = {partner(a, ch[a].vs[0]), partner(a, ch[a].vs[1])};

    // new vertex for each chord pair, ports sorted by boundary index
    auto pair_id = [](int a, int b) { return std::min(a, b) + std::max(a, b) - 1; }; // {0,1}->0 {0,2}->1 {1,2}->2
    auto slot = [&](int a, int b, int toward) {
        std::vector<int> ends{ch[a].in, ch[a].out, ch[b].in, ch[b].out};
        std::sort(ends.begin(), ends.end());
        return static_cast<int>(std::find(ends.begin(), ends.end(), toward) - ends.begin());
    };
    Engine::Content main;
    main.new_vertices = 3;
    for (int a = 0; a < 3; ++a) {
        int p1 = old_order[a][1], p2 = old_order[a][0];
        int n1 = pair_id(a, p1), n2 = pair_id(a, p2);
        main.wires.push_back({{true, ch[a].in, 0}, {false, n1, slot(a, p1, ch[a].in)}, 0});
        main.wires.push_back({{false, n1, slot(a, p1, ch[a].out)}, {false, n2, slot(a, p2, ch[a].in)}, 0});
        main.wires.push_back({{false, n2, slot(a, p2, ch[a].out)}, {true, ch[a].out, 0}, 0});
    }
    for (auto& u : eng.surgery(t, verts, internal, bd, main)) out.push_back(std::move(u));

    bool all_fw = true, all_bw = true;
    for (int x : f) (is_head(x) ? all_fw : all_bw) = false;
    if (!all_fw && !all_bw) return;
    int d = eng.d();
    if (d < 2) return;
    // smoothing: in-point of a chord to the out-point of a partner
    std::vector<int> to(6, -1);
    for (int a = 0; a < 3; ++a) to[ch[a].in] = ch[old_order[a][all_fw ? 1 : 0]].out;
    int central = -1;
    for (int k = 0; k < 6; ++k) {
        int k2 = (k + 1) % 6;
        if (to[k] != k2 && to[k2] != k) {
            central = k;
            break;
        }
    }
    for (int s = 0; s <= d - 2; ++s) {
        int rest = d - 2 - s;
        for (int p = 0; p <= rest; ++p)
            for (int q = 0; p + q <= rest; ++q) {
                int dots[3] = {p, q, rest - p - q};
                Engine::Content c;
                c.factor = all_fw ? -1 : 1;
                for (int a = 0; a < 3; ++a) c.wires.push_back({{true, ch[a].in, 0}, {true, to[ch[a].in], 0}, dots[a]});
                c.poly_corner = central;
                c.poly = eng.c(s);
                for (auto& u : eng.surgery(t, verts, internal, bd, c)) out.push_back(std::move(u));
            }
    }
}

namespace {

struct Walk {
    struct Arrival {
        int v, dart;
        size_t nedges;
    };
    std::vector<int> edges;
    std::vector<Arrival> arr;
    int loop_dart = -1; // arrival dart when the walk returns to its start
    size_t loop_edges = 0;
};

Walk walk_from(const PMap& m, int a) {
    Walk w;
    int X = m.dart_v[a];
    std::set<int> seen{X};
    for (int x = a;;) {
        w.edges.push_back(edge_of(x));
        int r = rev(x), u = m.dart_v[r];
        if (m.kind[u] != VK::Cross) break;
        if (u == X) {
            w.loop_dart = r;
            w.loop_edges = w.edges.size();
            break;
        }
        if (!seen.insert(u).second) break;
        w.arr.push_back({u, r, w.edges.size()});
        x = m.straight(r);
    }
    return w;
}

bool lens_step(Engine& eng, Term& t, const Faces& F, std::vector<Term>& out) {
    const PMap& m = t.m;
    std::vector<std::vector<int>> lenses;
    for (int X = 0; X < m.nv(); ++X) {
        if (m.kind[X] != VK::Cross) continue;
        std::vector<Walk> ws;
        for (int a : m.rot[X]) ws.push_back(walk_from(m, a));
        for (int i = 0; i < 4; ++i) {
            const Walk& wa = ws[i];
            if (wa.loop_dart >= 0 && wa.loop_dart != m.rot[X][i] && wa.loop_dart != m.straight(m.rot[X][i]))
                lenses.emplace_back(wa.edges.begin(), wa.edges.begin() + wa.loop_edges);
            for (int j = i + 1; j < 4; ++j) {
                if (j == i + 2) continue;
                const Walk& wb = ws[j];
                for (size_t p = 0; p < wa.arr.size(); ++p)
                    for (size_t q = 0; q < wb.arr.size(); ++q) {
                        if (wa.arr[p].v != wb.arr[q].v) continue;
                        int ra = wa.arr[p].dart, rb = wb.arr[q].dart;
                        if (rb == ra || rb == m.straight(ra)) continue;
                        std::set<int> inner;
                        bool ok = true;
                        for (size_t s = 0; s < p; ++s) inner.insert(wa.arr[s].v);
                        for (size_t s = 0; s < q && ok; ++s) ok = !inner.count(wb.arr[s].v);
                        if (!ok) continue;
                        std::vector<int> es(wa.edges.begin(), wa.edges.begin() + wa.arr[p].nedges);
                        es.insert(es.end(), wb.edges.begin(), wb.edges.begin() + wb.arr[q].nedges);
                        lenses.push_back(std::move(es));
                    }
            }
        }
    }
    if (lenses.empty()) return false;

    int nf = static_cast<int>(F.darts.size());
    int outer = F.of[t.outer];
    std::vector<int> best_inside;
    std::vector<char> best_lens;
    int best = -1, ties = 0;
    for (auto& L : lenses) {
        std::vector<char> in_l(m.ne(), 0);
        for (int e : L) in_l[e] = 1;
        std::vector<int> grp(nf, -1);
        int ng = 0;
        for (int f0 = 0; f0 < nf; ++f0) {
            if (grp[f0] >= 0) continue;
            std::vector<int> st{f0};
            grp[f0] = ng;
            while (!st.empty()) {
                int f = st.back();
                st.pop_back();
                for (int x : F.darts[f]) {
                    int e = edge_of(x);
                    if (in_l[e] || m.frame[e]) continue;
                    int g = F.of[rev(x)];
                    if (grp[g] < 0) {
                        grp[g] = ng;
                        st.push_back(g);
                    }
                }
            }
            ++ng;
        }
        std::set<int> inside_groups;
        for (int e : L)
            for (int s = 0; s < 2; ++s)
                if (grp[F.of[2 * e + s]] != grp[outer]) inside_groups.insert(grp[F.of[2 * e + s]]);
        if (inside_groups.empty()) continue;
        std::vector<int> inside;
        for (int f = 0; f < nf; ++f)
            if (inside_groups.count(grp[f])) inside.push_back(f);
        int sz = static_cast<int>(inside.size());
        if (best < 0 || sz < best) {
            best = sz;
            ties = 1;
            best_inside = inside;
            best_lens = in_l;
        } else if (sz == best && eng.pick(++ties) == 0) {
            best_inside = inside;
            best_lens = in_l;
        }
    }
    if (best < 0) return false;
    std::vector<int> cand;
    for (int f : best_inside) {
        const auto& fd = F.darts[f];
        if (fd.size() != 3 || !is_cross_face(m, fd)) continue;
        bool side = false;
        for (int x : fd) side |= best_lens[edge_of(x)] != 0;
        if (side) cand.push_back(f);
    }
    if (cand.empty()) throw reduction_failure("lens without a triangle on its boundary");
    const auto& fd = F.darts[cand[eng.pick(static_cast<int>(cand.size()))]];
    for (int x : fd)
        if (m.dots[edge_of(x)]) {
            dot_slide(eng, t, edge_of(x), out);
            return true;
        }
    flip(eng, t, fd, out);
    return true;
}

} // namespace

bool Engine::step(Term& t, std::vector<Term>& out) {
    PMap& m = t.m;
    bool closed = !m.framed();
    if (closed && m.nv() == 1 && m.kind[0] == VK::Joint) return false;
    Faces F = faces(m);
    int nf = static_cast<int>(F.darts.size());
    std::vector<char> ex(nf, 0);
    for (int x = 0; x < m.nd(); ++x)
        if (m.frame[edge_of(x)]) ex[F.of[x]] = 1;
    if (closed) ex[F.of[t.outer]] = 1;

    std::vector<int> monos, bigons;
    for (int f = 0; f < nf; ++f) {
        if (ex[f]) continue;
        const auto& fd = F.darts[f];
        if (fd.size() == 1 && m.kind[m.dart_v[fd[0]]] == VK::Cross) monos.push_back(f);
        else if (fd.size() == 2 && is_cross_face(m, fd)) bigons.push_back(f);
    }
    bool bigon_first = !bigons.empty() && (monos.empty() || coin());
    if (!monos.empty() && !bigon_first) {
        curl(*this, t, F.darts[monos[pick(static_cast<int>(monos.size()))]][0], out);
        return true;
    }
    if (!bigons.empty()) {
        bigon(*this, t, F.darts[bigons[pick(static_cast<int>(bigons.size()))]], out);
        return true;
    }
    if (lens_step(*this, t, F, out)) return true;
    if (closed) throw reduction_failure("closed diagram with no reducible lens (" + std::to_string(m.num_cross()) +
                                        " crossings)");

    StrandInfo si = strands(m);
    if (si.closed_strand) throw reduction_failure("closed strand left in a lens-free diagram");
    std::vector<int> dotted;
    for (int e = 0; e < m.ne(); ++e)
        if (m.dots[e] && !m.frame[e] && m.kind[m.head(e)] == VK::Cross) dotted.push_back(e);
    if (!dotted.empty()) {
        dot_slide(*this, t, dotted[pick(static_cast<int>(dotted.size()))], out);
        return true;
    }
    if (m.num_cross() == 0) return false;
    BasisDiagram shape = extract_basis(t, si);
    for (auto& dv : shape.dots) dv = 0;
    const CanonData& cd = canon(shape);
    std::vector<int> wrong;
    for (int f = 0; f < nf; ++f) {
        if (ex[f] || F.darts[f].size() != 3 || !is_cross_face(m, F.darts[f])) continue;
        const auto& fd = F.darts[f];
        int a = si.strand_of_edge[edge_of(fd[0])];
        // the side fd[0] joins the crossings of a with the strands through its ends
        auto other = [&](int v) {
            for (int x : m.rot[v])
                if (si.strand_of_edge[edge_of(x)] != a) return si.strand_of_edge[edge_of(x)];
            return -1;
        };
        int e0 = edge_of(fd[0]);
        int b = other(m.tail(e0)), c = other(m.head(e0));
        auto ib = cd.pos.find({si.in_id[a], si.in_id[b]}), ic = cd.pos.find({si.in_id[a], si.in_id[c]});
        if (ib == cd.pos.end() || ic == cd.pos.end())
            throw reduction_failure("crossing pair absent from the canonical drawing");
        if (ib->second > ic->second) wrong.push_back(f);
    }
    if (!wrong.empty()) {
        flip(*this, t, F.darts[wrong[pick(static_cast<int>(wrong.size()))]], out);
        return true;
    }
    for (size_t s = 0; s < si.seq.size(); ++s) {
        int a = si.in_id[s];
        for (size_t i = 0; i < si.seq[s].size(); ++i) {
            auto it = cd.pos.find({a, si.in_id[si.seq[s][i]]});
            if (it == cd.pos.end() || it->second != static_cast<int>(i))
                throw reduction_failure("crossing order differs from the canonical drawing with no triangle to flip");
        }
    }
    return false;
}

} // namespace heis::pm
