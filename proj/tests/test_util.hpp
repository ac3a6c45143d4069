#pragma once

#include "heis/cyclo.hpp"
#include "heis/linalg.hpp"

#include <random>

namespace heis::test {

inline Weight w0() { return Weight::parse("0:1"); }
inline Weight w01() { return Weight::parse("0:1,1:1"); }
inline Weight w00() { return Weight::parse("0:2"); }
inline Weight w012() { return Weight::parse("0:1,1:1,2:1"); }

inline CycloElement random_element(HeckeTower& H, int n, std::mt19937& rng, int terms = 4)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(H.dim(n)) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    CycloElement a = H.zero(n);
    for (int t = 0; t < terms; ++t)
        add_term(a.v, pick(rng), Q(coeff(rng)));
    return a;
}

// coordinates of target in terms of vecs (which must be independent)
inline std::vector<Q> solve_coords(const std::vector<SparseVec>& vecs, const SparseVec& target, bool& ok)
{
    Echelon e;
    for (const auto& v : vecs)
        e.insert(v);
    SparseVec combo;
    SparseVec r = e.reduce(target, combo);
    ok = r.empty();
    std::vector<Q> out(vecs.size());
    for (const auto& [i, c] : combo)
        out[i] = -c;
    return out;
}

} // namespace heis::test
