#pragma once

#include "heis/diagram.hpp"
#include "planar.hpp"

#include <map>
#include <random>

namespace heis::pm {

// crossing order of a canonical drawing: (strand, partner) -> index along
// strand; strands are named by in-endpoint id (bottom i -> i, top j -> k+j)
struct CanonData {
    std::map<std::pair<int, int>, int> pos;
};

} // namespace heis::pm

namespace heis {
struct CanonCache {
    std::map<BasisDiagram, pm::CanonData> shapes;
};
} // namespace heis

namespace heis::pm {

int endpoint_id(const Endpoint& e, int ndom);
Endpoint endpoint_of(int id, int ndom);

// Strand-level summary of a framed reduced diagram.
struct StrandInfo {
    std::vector<int> strand_of_edge; // -1 for frame edges
    std::vector<int> in_id;          // strand -> in-endpoint id
    std::vector<int> out_id;
    std::vector<int> last_edge;
    // crossing partners along each strand, in order
    std::vector<std::vector<int>> seq;
    bool closed_strand = false;
};

class Engine {
public:
    Engine(const Weight& w, const ReduceOptions& opt, CanonCache* cache);

    // framed reduction; returns basis terms
    Morphism reduce_word(const SliceWord& w);
    // closed diagram value
    PiPoly reduce_closed(std::vector<Term> terms);

    const Weight& weight() const { return w_; }

    // ---- used by the rule code ----
    struct End {
        bool bp;  // boundary point or new vertex port
        int idx;  // boundary index or new vertex index
        int slot; // port slot
    };
    struct Wire {
        End from, to;
        int dots = 0;
    };
    struct Content {
        int new_vertices = 0;
        std::vector<Wire> wires;
        int poly_corner = -1; // corner k lies between boundary k and k+1
        PiPoly poly;
        Q factor = 1;
    };
    std::vector<Term> surgery(const Term& t, const std::vector<int>& remove_v, const std::vector<int>& internal_e,
                              const std::vector<int>& boundary, const Content& c);

    // outside darts of the disk around a face (its closure), ccw
    static std::vector<int> disk_boundary(const PMap& m, const std::vector<int>& face_darts);

    // word -> framed terms with floating components already evaluated
    std::vector<Term> build(const SliceWord& w);

    // one rewriting step; false when t is in normal form
    bool step(Term& t, std::vector<Term>& out);

    void spend(const Term& t, const char* rule);
    int pick(int n);
    bool coin();

    StrandInfo strands(const PMap& m) const;
    const CanonData& canon(const BasisDiagram& shape);
    BasisDiagram extract_basis(const Term& t, const StrandInfo& si) const;

    PiPoly ring_value(const Term& t) const;
    PiPoly bubble(int t) const { return bubble_value(t, w_); }
    const PiPoly& c(int s) const { return c_[s]; }
    int d() const { return w_.d; }

    SignSeq dom, cod;

private:
    Weight w_;
    std::vector<PiPoly> c_;
    ReduceOptions opt_;
    long fuel_;
    std::mt19937_64 rng_;
    CanonCache* cache_;
    mutable std::map<int, PiPoly> cw_cache_;
    std::map<int, std::map<int, PiPoly>> lr_cache_;

    struct Placement {
        int host_comp = -1; // -1: the term's outer region
        int host_face = -1;
        int outer_face = -1;
    };
    std::vector<Term> finish(PMap& n, int main_comp, int main_outer, std::vector<Placement>& pl,
                             const std::vector<std::pair<std::pair<int, int>, PiPoly>>& polys, const PiPoly& coeff);

    const std::map<int, PiPoly>& slide_lr(int t);
    std::map<int, PiPoly> slide_rl(int t) const;
    std::vector<Term> slide_in(std::vector<Term> terms, const PiPoly& v, int host_dart);
    PiPoly cw_value(int s) const;
};

} // namespace heis::pm
