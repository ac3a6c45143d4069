#include "planar.hpp"

#include "heis/errors.hpp"

#include <numeric>
#include <string>

namespace heis::pm {

int PMap::add_vertex(VK k, int deg, int b) {
    kind.push_back(k);
    rot.emplace_back(deg, -1);
    bpos.push_back(b);
    return nv() - 1;
}

int PMap::add_edge(int d, bool fr) {
    dots.push_back(d);
    frame.push_back(fr);
    dart_v.push_back(-1);
    dart_v.push_back(-1);
    dart_pos.push_back(-1);
    dart_pos.push_back(-1);
    return ne() - 1;
}

void PMap::attach(int dart, int v, int slot) {
    if (rot[v][slot] != -1 || dart_v[dart] != -1) throw internal_error("planar map: slot attached twice");
    rot[v][slot] = dart;
    dart_v[dart] = v;
    dart_pos[dart] = slot;
}

int PMap::ccw(int d) const {
    const auto& r = rot[dart_v[d]];
    return r[(dart_pos[d] + 1) % r.size()];
}

int PMap::cw(int d) const {
    const auto& r = rot[dart_v[d]];
    return r[(dart_pos[d] + r.size() - 1) % r.size()];
}

int PMap::straight(int d) const {
    int v = dart_v[d];
    if (kind[v] == VK::Cross) return rot[v][(dart_pos[d] + 2) % 4];
    if (kind[v] == VK::Joint) return rot[v][1 - dart_pos[d]];
    return -1;
}

int PMap::next_edge(int e) const {
    int o = straight(2 * e + 1);
    return o < 0 ? -1 : edge_of(o);
}

int PMap::prev_edge(int e) const {
    int o = straight(2 * e);
    return o < 0 ? -1 : edge_of(o);
}

int PMap::num_cross() const {
    int n = 0;
    for (auto k : kind) n += k == VK::Cross;
    return n;
}

std::vector<int> PMap::normalize() {
    std::vector<int> alias(ne());
    std::iota(alias.begin(), alias.end(), 0);
    std::vector<char> dead_e(ne(), 0), dead_v(nv(), 0);
    auto find = [&](int e) {
        while (alias[e] != e) e = alias[e] = alias[alias[e]];
        return e;
    };
    for (int v = 0; v < nv(); ++v) {
        if (kind[v] != VK::Joint) continue;
        int a = rot[v][0], b = rot[v][1];
        if (edge_of(a) == edge_of(b)) continue;
        if (is_head(a) == is_head(b)) throw internal_error("planar map: joint joins two strand heads or tails");
        int in_d = is_head(a) ? a : b, out_d = is_head(a) ? b : a;
        int e_in = edge_of(in_d), e_out = edge_of(out_d);
        int hd = 2 * e_out + 1, hv = dart_v[hd], hp = dart_pos[hd];
        dart_v[2 * e_in + 1] = hv;
        dart_pos[2 * e_in + 1] = hp;
        rot[hv][hp] = 2 * e_in + 1;
        dots[e_in] += dots[e_out];
        dead_e[e_out] = 1;
        alias[e_out] = e_in;
        dead_v[v] = 1;
    }
    std::vector<int> new_v(nv(), -1), new_e(ne(), -1);
    PMap out;
    for (int v = 0; v < nv(); ++v)
        if (!dead_v[v]) new_v[v] = out.add_vertex(kind[v], static_cast<int>(rot[v].size()), bpos[v]);
    for (int e = 0; e < ne(); ++e)
        if (!dead_e[e]) new_e[e] = out.add_edge(dots[e], frame[e]);
    for (int e = 0; e < ne(); ++e) {
        if (dead_e[e]) continue;
        for (int s = 0; s < 2; ++s) {
            int d = 2 * e + s;
            out.attach(2 * new_e[e] + s, new_v[dart_v[d]], dart_pos[d]);
        }
    }
    std::vector<int> emap(ne());
    for (int e = 0; e < ne(); ++e) emap[e] = new_e[find(e)];
    *this = std::move(out);
    return emap;
}

std::vector<int> PMap::restrict_to(const std::vector<char>& keep) {
    PMap out;
    std::vector<int> new_v(nv(), -1), dmap(nd(), -1);
    for (int v = 0; v < nv(); ++v)
        if (keep[v]) new_v[v] = out.add_vertex(kind[v], static_cast<int>(rot[v].size()), bpos[v]);
    for (int e = 0; e < ne(); ++e) {
        bool kt = keep[tail(e)], kh = keep[head(e)];
        if (kt != kh) throw internal_error("planar map: edge straddles a component cut");
        if (!kt) continue;
        int ne2 = out.add_edge(dots[e], frame[e]);
        for (int s = 0; s < 2; ++s) {
            int d = 2 * e + s;
            out.attach(2 * ne2 + s, new_v[dart_v[d]], dart_pos[d]);
            dmap[d] = 2 * ne2 + s;
        }
    }
    *this = std::move(out);
    return dmap;
}

std::vector<int> PMap::erase(const std::vector<char>& dead_v, const std::vector<char>& dead_e) {
    PMap out;
    std::vector<int> new_v(nv(), -1), new_e(ne(), -1);
    for (int v = 0; v < nv(); ++v)
        if (!dead_v[v]) new_v[v] = out.add_vertex(kind[v], static_cast<int>(rot[v].size()), bpos[v]);
    for (int e = 0; e < ne(); ++e) {
        if (dead_e[e]) continue;
        new_e[e] = out.add_edge(dots[e], frame[e]);
        for (int s = 0; s < 2; ++s) {
            int d = 2 * e + s;
            if (dart_v[d] < 0 || dead_v[dart_v[d]]) throw internal_error("planar map: live edge on an erased vertex");
            out.attach(2 * new_e[e] + s, new_v[dart_v[d]], dart_pos[d]);
        }
    }
    *this = std::move(out);
    return new_e;
}

bool PMap::framed() const {
    for (char f : frame)
        if (f) return true;
    return false;
}

void PMap::check() const {
    for (int v = 0; v < nv(); ++v) {
        size_t want = kind[v] == VK::Cross ? 4 : kind[v] == VK::Bound ? 3 : 2;
        if (rot[v].size() != want) throw internal_error("planar map: bad vertex degree");
        for (size_t p = 0; p < rot[v].size(); ++p) {
            int d = rot[v][p];
            if (d < 0 || dart_v[d] != v || dart_pos[d] != static_cast<int>(p))
                throw internal_error("planar map: rotation and dart tables disagree");
        }
        if (kind[v] == VK::Cross)
            for (int p = 0; p < 4; ++p)
                if (is_head(rot[v][p]) == is_head(rot[v][(p + 2) % 4]))
                    throw internal_error("planar map: crossing without a through orientation");
    }
    for (int d = 0; d < nd(); ++d)
        if (dart_v[d] < 0) throw internal_error("planar map: dangling dart " + std::to_string(d));
}

Faces faces(const PMap& m) {
    Faces f;
    f.of.assign(m.nd(), -1);
    for (int d = 0; d < m.nd(); ++d) {
        if (f.of[d] != -1) continue;
        int id = static_cast<int>(f.darts.size());
        f.darts.emplace_back();
        int x = d;
        do {
            f.of[x] = id;
            f.darts[id].push_back(x);
            x = m.face_next(x);
        } while (x != d);
    }
    return f;
}

int components(const PMap& m, std::vector<int>& comp) {
    std::vector<int> par(m.nv());
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int v) {
        while (par[v] != v) v = par[v] = par[par[v]];
        return v;
    };
    for (int e = 0; e < m.ne(); ++e) par[find(m.tail(e))] = find(m.head(e));
    comp.assign(m.nv(), -1);
    int n = 0;
    std::vector<int> id(m.nv(), -1);
    for (int v = 0; v < m.nv(); ++v) {
        int r = find(v);
        if (id[r] == -1) id[r] = n++;
        comp[v] = id[r];
    }
    return n;
}

} // namespace heis::pm
