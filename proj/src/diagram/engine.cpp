#include "engine.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace heis::pm {

int endpoint_id(const Endpoint& e, int ndom) { return e.top ? ndom + e.pos : e.pos; }

Endpoint endpoint_of(int id, int ndom) { return id < ndom ? Endpoint{false, id} : Endpoint{true, id - ndom}; }

Engine::Engine(const Weight& w, const ReduceOptions& opt, CanonCache* cache)
    : w_(w), opt_(opt), fuel_(opt.fuel), rng_(opt.seed), cache_(cache) {
    for (int s = 0; s <= w_.d; ++s) c_.push_back(structure_scalar(s, w_));
}

namespace {

std::string describe(const PMap& m) {
    std::ostringstream os;
    int dots = 0;
    for (int x : m.dots) dots += x;
    os << m.nv() << " vertices, " << m.num_cross() << " crossings, " << m.ne() << " edges, " << dots << " dots";
    return os.str();
}

} // namespace

void Engine::spend(const Term& t, const char* rule) {
    if (--fuel_ < 0)
        throw reduction_failure("rewriting fuel exhausted (" + std::to_string(opt_.fuel) + " rule applications); last rule " +
                                rule + " on a diagram with " + describe(t.m));
}

int Engine::pick(int n) {
    if (!opt_.randomize || n <= 1) return 0;
    return static_cast<int>(rng_() % static_cast<std::uint64_t>(n));
}

bool Engine::coin() { return opt_.randomize && (rng_() & 1); }

std::vector<int> Engine::disk_boundary(const PMap& m, const std::vector<int>& face_darts) {
    std::vector<int> out;
    size_t n = face_darts.size();
    for (size_t i = 0; i < n; ++i) {
        int in = rev(face_darts[i]), nxt = face_darts[(i + 1) % n];
        for (int x = m.ccw(in); x != nxt; x = m.ccw(x)) out.push_back(x);
    }
    return out;
}

std::vector<Term> Engine::surgery(const Term& t, const std::vector<int>& remove_v, const std::vector<int>& internal_e,
                                  const std::vector<int>& boundary, const Content& c) {
    const PMap& m = t.m;
    bool closed = !m.framed();
    Faces f0 = faces(m);
    int outer0 = f0.of[t.outer];
    std::vector<char> dead_v(m.nv(), 0), dead_e(m.ne(), 0);
    for (int v : remove_v) dead_v[v] = 1;
    for (int e : internal_e) {
        if (m.dots[e]) throw internal_error("surgery: dotted edge inside the disk");
        dead_e[e] = 1;
    }
    bool outer_touched = false;
    for (int x : f0.darts[outer0])
        if (dead_v[m.dart_v[x]]) outer_touched = true;

    PMap n = m;
    int K = static_cast<int>(boundary.size());
    std::vector<int> joint(K), nvx(c.new_vertices);
    for (int k = 0; k < K; ++k) {
        joint[k] = n.add_vertex(VK::Joint, 2);
        n.dart_v[boundary[k]] = -1;
        n.attach(boundary[k], joint[k], 0);
    }
    for (auto& v : nvx) v = n.add_vertex(VK::Cross, 4);
    auto port = [&](const End& e) { return e.bp ? std::pair{joint[e.idx], 1} : std::pair{nvx[e.idx], e.slot}; };
    for (const Wire& w : c.wires) {
        int e = n.add_edge(w.dots);
        auto [tv, ts] = port(w.from);
        auto [hv, hs] = port(w.to);
        n.attach(2 * e, tv, ts);
        n.attach(2 * e + 1, hv, hs);
    }
    dead_v.resize(n.nv(), 0);
    dead_e.resize(n.ne(), 0);
    auto m1 = n.erase(dead_v, dead_e);
    auto m2 = n.normalize();
    auto emap = [&](int e) { return m2[m1[e]]; };

    Faces F = faces(n);
    std::vector<int> comp;
    int ncomp = components(n, comp);
    std::vector<int> E(K), ccwf(K), cwf(K), cc(K);
    for (int k = 0; k < K; ++k) {
        E[k] = emap(edge_of(boundary[k]));
        bool in = is_head(boundary[k]);
        ccwf[k] = in ? F.of[2 * E[k] + 1] : F.of[2 * E[k]];
        cwf[k] = in ? F.of[2 * E[k]] : F.of[2 * E[k] + 1];
        cc[k] = comp[n.tail(E[k])];
    }

    std::vector<Placement> pl(ncomp);
    std::vector<char> placed(ncomp, 0);
    int main_comp = -1, main_outer = -1;
    if (!closed || !outer_touched) {
        int o = 2 * emap(edge_of(t.outer)) + (t.outer & 1);
        main_outer = o;
        main_comp = comp[n.dart_v[o]];
        placed[main_comp] = 1;
        pl[main_comp].outer_face = F.of[o];
    } else {
        for (int k = 0; k < K; ++k) {
            if (f0.of[boundary[k]] != outer0 || placed[cc[k]]) continue;
            placed[cc[k]] = 1;
            pl[cc[k]].outer_face = ccwf[k];
            if (main_comp < 0) {
                main_comp = cc[k];
                main_outer = is_head(boundary[k]) ? 2 * E[k] + 1 : 2 * E[k];
            }
        }
        if (main_comp < 0) throw internal_error("surgery: outer region lost");
    }
    auto place_from = [&](int ca, int fa, int cb, int fb) {
        if (!placed[ca] || placed[cb]) return false;
        if (ca == main_comp || fa != pl[ca].outer_face) {
            pl[cb].host_comp = ca;
            pl[cb].host_face = fa;
        } else {
            pl[cb].host_comp = pl[ca].host_comp;
            pl[cb].host_face = pl[ca].host_face;
        }
        pl[cb].outer_face = fb;
        placed[cb] = 1;
        return true;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < K; ++k) {
            int k2 = (k + 1) % K;
            changed |= place_from(cc[k], ccwf[k], cc[k2], cwf[k2]);
            changed |= place_from(cc[k2], cwf[k2], cc[k], ccwf[k]);
        }
    }
    for (int x = 0; x < ncomp; ++x)
        if (!placed[x]) throw internal_error("surgery: unplaced component");

    std::vector<std::pair<std::pair<int, int>, PiPoly>> polys;
    if (c.poly_corner >= 0 && !c.poly.is_constant()) {
        int k = c.poly_corner;
        int rc = cc[k], rf = ccwf[k];
        while (rc >= 0 && rc != main_comp && rf == pl[rc].outer_face) {
            int h = pl[rc].host_comp;
            rf = pl[rc].host_face;
            rc = h;
        }
        polys.push_back({{rc, rf}, c.poly});
    }
    PiPoly coeff = t.coeff * c.factor;
    if (c.poly_corner >= 0 && c.poly.is_constant()) coeff *= c.poly.constant_term();
    if (coeff.is_zero()) return {};
    return finish(n, main_comp, main_outer, pl, polys, coeff);
}

std::vector<Term> Engine::finish(PMap& n, int main_comp, int main_outer, std::vector<Placement>& pl,
                                 const std::vector<std::pair<std::pair<int, int>, PiPoly>>& polys,
                                 const PiPoly& coeff) {
    Faces F = faces(n);
    std::vector<int> comp;
    int ncomp = components(n, comp);
    if (ncomp == 1) {
        Term t{std::move(n), main_outer, coeff};
        std::vector<Term> ts{std::move(t)};
        for (auto& [where, p] : polys) ts = slide_in(std::move(ts), p, F.darts[where.second][0]);
        return ts;
    }
    std::vector<PMap> sub(ncomp);
    std::vector<std::vector<int>> dmap(ncomp);
    for (int x = 0; x < ncomp; ++x) {
        sub[x] = n;
        std::vector<char> keep(n.nv());
        for (int v = 0; v < n.nv(); ++v) keep[v] = comp[v] == x;
        dmap[x] = sub[x].restrict_to(keep);
    }
    std::vector<std::vector<int>> children(ncomp);
    std::vector<int> top;
    for (int x = 0; x < ncomp; ++x) {
        if (x == main_comp) continue;
        if (pl[x].host_comp < 0) top.push_back(x);
        else children[pl[x].host_comp].push_back(x);
    }
    auto face_dart = [&](int x, int face) {
        int d = dmap[x][F.darts[face][0]];
        if (d < 0) throw internal_error("finish: face not on its component");
        return d;
    };
    auto populate = [&](int x, Term t, auto& self) -> std::vector<Term> {
        std::vector<Term> ts{std::move(t)};
        for (int ch : children[x]) {
            Term tc{sub[ch], face_dart(ch, pl[ch].outer_face), PiPoly(1)};
            PiPoly v = reduce_closed(self(ch, std::move(tc), self));
            ts = slide_in(std::move(ts), v, face_dart(x, pl[ch].host_face));
        }
        for (auto& [where, p] : polys)
            if (where.first == x) ts = slide_in(std::move(ts), p, face_dart(x, where.second));
        return ts;
    };
    PiPoly cf = coeff;
    for (int x : top) {
        Term tc{sub[x], face_dart(x, pl[x].outer_face), PiPoly(1)};
        cf *= reduce_closed(populate(x, std::move(tc), populate));
    }
    for (auto& [where, p] : polys)
        if (where.first < 0) cf *= p;
    if (cf.is_zero()) return {};
    Term tm{sub[main_comp], dmap[main_comp][main_outer], cf};
    return populate(main_comp, std::move(tm), populate);
}

const std::map<int, PiPoly>& Engine::slide_lr(int t) {
    auto it = lr_cache_.find(t);
    if (it != lr_cache_.end()) return it->second;
    std::map<int, PiPoly> r;
    r[0] += bubble(d() - 1 + t);
    for (int b = 0; b <= t - 2; ++b) {
        auto sub = slide_lr(b);
        for (auto& [k, p] : sub) r[k + t - 2 - b] += p * Q(t - 1 - b);
    }
    std::erase_if(r, [](auto& kv) { return kv.second.is_zero(); });
    return lr_cache_[t] = std::move(r);
}

std::map<int, PiPoly> Engine::slide_rl(int t) const {
    std::map<int, PiPoly> r;
    r[0] += bubble(d() - 1 + t);
    for (int b = 0; b <= t - 2; ++b) r[t - 2 - b] -= bubble(d() - 1 + b) * Q(t - 1 - b);
    std::erase_if(r, [](auto& kv) { return kv.second.is_zero(); });
    return r;
}

std::vector<Term> Engine::slide_in(std::vector<Term> terms, const PiPoly& v, int host_dart) {
    if (terms.empty()) return terms;
    if (v.is_zero()) return {};
    if (v.is_constant()) {
        for (auto& t : terms) t.coeff *= v.constant_term();
        return terms;
    }
    const PMap& m = terms[0].m;
    Faces F = faces(m);
    int src = F.of[host_dart], dst = F.of[terms[0].outer];
    std::vector<int> via(F.darts.size(), -2);
    via[src] = -1;
    std::deque<int> q{src};
    while (!q.empty() && via[dst] == -2) {
        int f = q.front();
        q.pop_front();
        for (int x : F.darts[f]) {
            if (m.frame[edge_of(x)]) continue;
            int g = F.of[rev(x)];
            if (via[g] != -2) continue;
            via[g] = x;
            q.push_back(g);
        }
    }
    if (via[dst] == -2) throw internal_error("bubble slide: no path to the outer region");
    std::vector<int> path;
    for (int f = dst; f != src; f = F.of[via[f]]) path.push_back(via[f]);
    std::reverse(path.begin(), path.end());

    // states: dots added per path step -> bubble polynomial still to slide
    std::map<std::vector<int>, PiPoly> states;
    states[std::vector<int>(path.size(), 0)] = v;
    for (size_t i = 0; i < path.size(); ++i) {
        bool lr = !is_head(path[i]);
        std::map<std::vector<int>, PiPoly> next;
        for (auto& [dv, p] : states) {
            for (auto& [mono, coef] : p.terms()) {
                std::map<int, PiPoly> acc{{0, PiPoly(coef)}};
                for (size_t k = 0; k < mono.size(); ++k)
                    for (int rep = 0; rep < mono[k]; ++rep) {
                        std::map<int, PiPoly> ex = lr ? slide_lr(static_cast<int>(k) + 2) : slide_rl(static_cast<int>(k) + 2);
                        std::map<int, PiPoly> nacc;
                        for (auto& [a, pa] : acc)
                            for (auto& [b, pb] : ex) nacc[a + b] += pa * pb;
                        acc = std::move(nacc);
                    }
                for (auto& [a, pa] : acc) {
                    if (pa.is_zero()) continue;
                    auto key = dv;
                    key[i] = a;
                    next[key] += pa;
                }
            }
        }
        std::erase_if(next, [](auto& kv) { return kv.second.is_zero(); });
        states = std::move(next);
    }
    std::vector<Term> out;
    for (auto& t : terms)
        for (auto& [dv, p] : states) {
            Term u = t;
            for (size_t i = 0; i < path.size(); ++i) u.m.dots[edge_of(path[i])] += dv[i];
            u.coeff *= p;
            if (!u.coeff.is_zero()) out.push_back(std::move(u));
        }
    return out;
}

PiPoly Engine::cw_value(int s) const {
    auto it = cw_cache_.find(s);
    if (it != cw_cache_.end()) return it->second;
    int dd = d();
    PiPoly r = bubble(2 * dd + s);
    for (int j = 0; j < dd; ++j) r += c_[dd - j] * bubble(dd + s + j);
    for (int a = dd; a <= dd + s - 1; ++a) r -= bubble(a) * cw_value(dd + s - 1 - a);
    return cw_cache_[s] = r;
}

PiPoly Engine::ring_value(const Term& t) const {
    if (t.m.ne() != 1 || t.m.nv() != 1) throw internal_error("ring value of a non-ring");
    int k = t.m.dots[0];
    return t.outer == 1 ? bubble(k) : cw_value(k);
}

PiPoly Engine::reduce_closed(std::vector<Term> work) {
    PiPoly total;
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero()) continue;
        std::vector<Term> out;
        if (step(t, out)) {
            for (auto& u : out) work.push_back(std::move(u));
            continue;
        }
        total += t.coeff * ring_value(t);
    }
    return total;
}

Morphism Engine::reduce_word(const SliceWord& w) {
    dom = w.dom;
    cod = w.cod;
    std::vector<Term> work = build(w);
    Morphism res = Morphism::zero(w.dom, w.cod);
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero()) continue;
        std::vector<Term> out;
        if (step(t, out)) {
            for (auto& u : out) work.push_back(std::move(u));
            continue;
        }
        res.add(extract_basis(t, strands(t.m)), t.coeff);
    }
    return res;
}

} // namespace heis::pm
