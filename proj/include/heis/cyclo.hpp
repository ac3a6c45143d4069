#pragma once

#include "heis/affine.hpp"
#include "heis/weight.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace heis {

// Element of H_n^lambda. Keys index the PBW basis x^e w with every e_i < d;
// see HeckeTower::key for the enumeration.
struct CycloElement {
    int n = 0;
    SparseVec v;

    bool is_zero() const { return v.empty(); }
    bool operator==(const CycloElement& o) const { return n == o.n && v == o.v; }
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    CycloElement& operator*=(const Q& c);
};

CycloElement operator+(CycloElement a, const CycloElement& b);
CycloElement operator-(CycloElement a, const CycloElement& b);
CycloElement operator*(const Q& c, CycloElement a);

// Left-module basis label (j, a) of H_{m} over H_{m-1}: s_{m-1} ... s_j x_j^a,
// 1-based j in 1..m (j = m is x_m^a alone).
struct LeftLabel {
    int j;
    int a;
    auto operator<=>(const LeftLabel&) const = default;
};

// Arithmetic in the tower H_0^lambda ⊂ H_1^lambda ⊂ ... for a fixed weight.
// Holds per-rank multiplication caches; not shared between threads.
class HeckeTower {
public:
    explicit HeckeTower(Weight w, long max_dim = 2000);

    const Weight& weight() const { return w_; }
    int d() const { return w_.d; }
    long dim(int n) const;
    long max_dim() const { return max_dim_; }

    PbwKey key(int n, int idx) const;
    int index(const PbwKey& k) const;

    CycloElement zero(int n) const { return {n, {}}; }
    CycloElement scalar(int n, const Q& c) const;
    CycloElement one(int n) const { return scalar(n, Q(1)); }
    CycloElement x(int n, int i, int power = 1); // 1-based
    CycloElement s(int n, int i);                // 1-based
    CycloElement basis(int n, int idx) const;

    CycloElement mul(const CycloElement& a, const CycloElement& b);
    CycloElement reduce(const AffineElement& a);
    AffineElement to_affine(const CycloElement& a) const;
    // H_n ⊂ H_m as the span of the first n strands
    CycloElement include(const CycloElement& a, int m) const;
    // inverse of include on its image; throws when a is not in H_n
    CycloElement restrict_to(const CycloElement& a, int n) const;

    // tr_m : H_m -> H_{m-1}
    CycloElement trace(const CycloElement& z) const;
    // z = sum h_{j,a} s_{m-1}...s_j x_j^a with h in H_{m-1}
    std::map<LeftLabel, CycloElement> left_decompose(const CycloElement& z);
    CycloElement left_basis(int m, LeftLabel l);
    // x_j^a s_j ... s_{m-1}
    CycloElement right_basis(int m, LeftLabel l);
    // y_{n,k}
    CycloElement dual_dot(int n, int k);

    std::string str(const CycloElement& a) const;

    void check_dim(int n) const;

private:
    struct Level {
        int n = 0;
        long size = 0;
        long dpow = 1;
        std::vector<std::unordered_map<int, SparseVec>> rx; // rx[k][idx] = b_idx * x_k
        std::map<std::vector<int>, SparseVec> mono; // reductions of x^e with one exponent d
    };

    Level& level(int n);
    const SparseVec& right_x(Level& L, int idx, int k);
    SparseVec reduce_mono(Level& L, const std::vector<int>& e);
    SparseVec left_s(Level& L, int idx, int q);
    SparseVec right_perm(int n, const SparseVec& v, const Perm& p) const;
    SparseVec right_x_vec(Level& L, const SparseVec& v, int k);

    Weight w_;
    long max_dim_;
    std::vector<std::unique_ptr<Level>> levels_;
    std::map<std::pair<int, int>, CycloElement> dual_cache_;
};

} // namespace heis
