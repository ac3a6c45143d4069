#include "engine.hpp"

#include "heis/errors.hpp"

namespace heis::pm {

std::vector<Term> Engine::build(const SliceWord& w) {
    PMap n;
    int kb = static_cast<int>(w.dom.size()), kt = static_cast<int>(w.cod.size());
    int BL = n.add_vertex(VK::Corner, 2), BR = n.add_vertex(VK::Corner, 2);
    int TR = n.add_vertex(VK::Corner, 2), TL = n.add_vertex(VK::Corner, 2);
    std::vector<int> bot(kb), top(kt);
    for (int i = 0; i < kb; ++i) bot[i] = n.add_vertex(VK::Bound, 3, i + 1);
    for (int j = 0; j < kt; ++j) top[j] = n.add_vertex(VK::Bound, 3, -(j + 1));

    // frame, counterclockwise; slots follow the rotation conventions of each vertex
    auto frame_edge = [&](int a, int sa, int b, int sb) {
        int e = n.add_edge(0, true);
        n.attach(2 * e, a, sa);
        n.attach(2 * e + 1, b, sb);
        return e;
    };
    int prev = BL, prev_slot = 0;
    for (int i = 0; i < kb; ++i) {
        frame_edge(prev, prev_slot, bot[i], 2);
        prev = bot[i];
        prev_slot = 0;
    }
    frame_edge(prev, prev_slot, BR, 1);
    int right = frame_edge(BR, 0, TR, 1);
    prev = TR;
    prev_slot = 0;
    for (int j = kt - 1; j >= 0; --j) {
        frame_edge(prev, prev_slot, top[j], 0);
        prev = top[j];
        prev_slot = 1;
    }
    frame_edge(prev, prev_slot, TL, 0);
    int left = frame_edge(TL, 1, BL, 1);

    // open dart per position: the unattached end of the strand edge there
    std::vector<int> open;
    std::vector<char> sign;
    auto fresh = [&](char s, int v, int slot) {
        int e = n.add_edge();
        if (s == '+') {
            n.attach(2 * e, v, slot);
            return 2 * e + 1;
        }
        n.attach(2 * e + 1, v, slot);
        return 2 * e;
    };
    for (int i = 0; i < kb; ++i) {
        open.push_back(fresh(w.dom[i], bot[i], 1));
        sign.push_back(w.dom[i]);
    }
    std::vector<std::vector<std::pair<int, int>>> levels;
    auto record = [&] {
        levels.emplace_back();
        for (size_t p = 0; p < open.size(); ++p) levels.back().push_back({edge_of(open[p]), sign[p]});
    };
    record();
    for (const Slice& sl : w.slices) {
        std::vector<int> nopen;
        std::vector<char> nsign;
        size_t p = 0;
        for (const Token& tk : sl) {
            SignSeq td = tk.dom(), tc = tk.cod();
            switch (tk.kind) {
            case Tok::ID_UP:
            case Tok::ID_DOWN:
                nopen.push_back(open[p]);
                break;
            case Tok::DOT_UP:
            case Tok::DOT_DOWN:
                n.dots[edge_of(open[p])] += tk.dots;
                nopen.push_back(open[p]);
                break;
            case Tok::CROSS_UU:
            case Tok::CROSS_DD:
            case Tok::CROSS_DU:
            case Tok::CROSS_UD: {
                int X = n.add_vertex(VK::Cross, 4);
                n.attach(open[p], X, 2);
                n.attach(open[p + 1], X, 3);
                nopen.push_back(fresh(tc[0], X, 1));
                nopen.push_back(fresh(tc[1], X, 0));
                break;
            }
            case Tok::CAP_CW:
            case Tok::CAP_CCW: {
                int J = n.add_vertex(VK::Joint, 2);
                n.attach(open[p], J, 0);
                n.attach(open[p + 1], J, 1);
                break;
            }
            case Tok::CUP_CW:
            case Tok::CUP_CCW: {
                int J = n.add_vertex(VK::Joint, 2);
                nopen.push_back(fresh(tc[0], J, 0));
                nopen.push_back(fresh(tc[1], J, 1));
                break;
            }
            }
            for (char s : tc) nsign.push_back(s);
            p += td.size();
        }
        open = std::move(nopen);
        sign = std::move(nsign);
        record();
    }
    for (int j = 0; j < kt; ++j) n.attach(open[j], top[j], 2);
    n.check();

    auto emap = n.normalize();
    Faces F = faces(n);
    std::vector<int> comp;
    int ncomp = components(n, comp);
    int main_comp = comp[n.dart_v[2 * emap[right]]];
    int main_outer = 2 * emap[right];
    int left_face = F.of[2 * emap[left]];
    std::vector<Placement> pl(ncomp);
    std::vector<char> done(ncomp, 0);
    done[main_comp] = 1;
    pl[main_comp].outer_face = F.of[main_outer];
    auto east = [&](int E, int s) { return F.of[s == '+' ? 2 * E + 1 : 2 * E]; };
    auto west = [&](int E, int s) { return F.of[s == '+' ? 2 * E : 2 * E + 1]; };
    for (auto& lv : levels)
        for (size_t p = 0; p < lv.size(); ++p) {
            int E = emap[lv[p].first], c = comp[n.tail(E)];
            if (done[c]) continue;
            done[c] = 1;
            pl[c].outer_face = west(E, lv[p].second);
            pl[c].host_comp = main_comp;
            pl[c].host_face = left_face;
            for (size_t q = p; q-- > 0;) {
                int E2 = emap[lv[q].first], c2 = comp[n.tail(E2)];
                int f2 = east(E2, lv[q].second);
                if (c2 == main_comp || f2 != pl[c2].outer_face) {
                    pl[c].host_comp = c2;
                    pl[c].host_face = f2;
                    break;
                }
            }
        }
    for (int c = 0; c < ncomp; ++c)
        if (!done[c]) throw internal_error("build: component missing from every level");
    return finish(n, main_comp, main_outer, pl, {}, PiPoly(1));
}

} // namespace heis::pm
