#pragma once

#include "heis/cyclo.hpp"

#include <vector>

namespace heis {

// Basis of {a in H_{n+k}^lambda : a h = h a for all h in H_n^lambda}.
std::vector<CycloElement> centralizer_basis(HeckeTower& H, int n, int k);

// Unital subalgebra of H_m^lambda generated by gens, as a basis of its span.
std::vector<CycloElement> generated_subalgebra(HeckeTower& H, int m, const std::vector<CycloElement>& gens);

std::vector<SparseVec> vectors_of(const std::vector<CycloElement>& elems);

} // namespace heis
