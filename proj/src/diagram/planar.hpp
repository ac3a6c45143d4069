#pragma once

// Combinatorial planar maps for immersed diagrams. Edge e owns darts 2e
// (leaving its tail) and 2e+1 (leaving its head); strand edges point along
// the strand orientation. rot[v] lists the darts at v counterclockwise.

#include "heis/pipoly.hpp"

#include <cstdint>
#include <vector>

namespace heis::pm {

enum class VK : std::uint8_t { Cross, Bound, Corner, Joint };

inline int rev(int d) { return d ^ 1; }
inline int edge_of(int d) { return d >> 1; }
inline bool is_head(int d) { return d & 1; }

struct PMap {
    std::vector<VK> kind;
    std::vector<std::vector<int>> rot;
    std::vector<int> dart_v;   // origin vertex, -1 while unattached
    std::vector<int> dart_pos; // index in rot[dart_v]
    std::vector<int> dots;
    std::vector<char> frame;
    // boundary vertices: +(i+1) bottom position i, -(j+1) top position j
    std::vector<int> bpos;

    int nv() const { return static_cast<int>(kind.size()); }
    int ne() const { return static_cast<int>(dots.size()); }
    int nd() const { return 2 * ne(); }

    int add_vertex(VK k, int deg, int b = 0);
    int add_edge(int dots = 0, bool frame = false);
    void attach(int dart, int v, int slot);

    int tail(int e) const { return dart_v[2 * e]; }
    int head(int e) const { return dart_v[2 * e + 1]; }
    int ccw(int d) const;
    int cw(int d) const;
    // next dart of the face on the left of d
    int face_next(int d) const { return cw(rev(d)); }
    // opposite dart through a crossing or joint, -1 elsewhere
    int straight(int d) const;
    // following strand edge, -1 at the boundary
    int next_edge(int e) const;
    int prev_edge(int e) const;
    int num_cross() const;

    // merges edges through every joint except a lone joint on a loop;
    // returns old edge -> new edge
    std::vector<int> normalize();
    // keeps only vertices with keep[v]; edges must not straddle. Returns
    // old dart -> new dart (-1 when dropped)
    std::vector<int> restrict_to(const std::vector<char>& keep_vertex);
    // drops vertices and edges; no live dart may sit on a dead vertex.
    // Returns old edge -> new edge (-1 when dropped)
    std::vector<int> erase(const std::vector<char>& dead_v, const std::vector<char>& dead_e);
    bool framed() const;

    void check() const;
};

struct Faces {
    std::vector<int> of;                // dart -> face id
    std::vector<std::vector<int>> darts; // face id -> cycle
};
Faces faces(const PMap& m);

// vertex -> component id; returns number of components
int components(const PMap& m, std::vector<int>& comp);

struct Term {
    PMap m;
    int outer = -1; // its left face is the rightmost (or outer) region
    PiPoly coeff;
};

} // namespace heis::pm
