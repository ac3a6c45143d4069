#include "heis/centralizer.hpp"

#include "heis/errors.hpp"
#include "heis/linalg.hpp"

namespace heis {

std::vector<SparseVec> vectors_of(const std::vector<CycloElement>& elems)
{
    std::vector<SparseVec> out;
    out.reserve(elems.size());
    for (const auto& e : elems)
        out.push_back(e.v);
    return out;
}

std::vector<CycloElement> centralizer_basis(HeckeTower& H, int n, int k)
{
    if (n < 0 || k < 0)
        throw input_error("negative rank");
    int m = n + k;
    H.check_dim(m);
    int N = static_cast<int>(H.dim(m));
    std::vector<CycloElement> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back(H.x(m, i));
    for (int i = 1; i < n; ++i)
        gens.push_back(H.s(m, i));
    // rows indexed by (generator, output coordinate)
    std::map<std::pair<int, int>, SparseVec> rows;
    for (int j = 0; j < N; ++j) {
        CycloElement b = H.basis(m, j);
        for (size_t g = 0; g < gens.size(); ++g) {
            CycloElement c = H.mul(b, gens[g]) - H.mul(gens[g], b);
            for (const auto& [i, v] : c.v)
                rows[{static_cast<int>(g), i}][j] = v;
        }
    }
    std::vector<SparseVec> constraints;
    constraints.reserve(rows.size());
    for (auto& [key, r] : rows)
        constraints.push_back(std::move(r));
    std::vector<CycloElement> out;
    for (auto& v : nullspace(constraints, N))
        out.push_back({m, std::move(v)});
    return out;
}

std::vector<CycloElement> generated_subalgebra(HeckeTower& H, int m, const std::vector<CycloElement>& gens)
{
    Echelon span;
    std::vector<CycloElement> basis{H.one(m)};
    span.insert(basis[0].v);
    // close under right multiplication by generators
    for (size_t i = 0; i < basis.size(); ++i) {
        for (const auto& g : gens) {
            CycloElement p = H.mul(basis[i], g);
            if (span.insert(p.v))
                basis.push_back(p);
        }
    }
    return basis;
}

} // namespace heis
