#pragma once

#include "heis/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace heis {

// Dominant weight sum_i m_i * omega_{r_i}, stored as (residue, multiplicity).
struct Weight {
    std::vector<std::pair<int, int>> entries;
    int d = 0;
    // f_0..f_{d-1} with prod_i (x - r_i)^{m_i} = x^d + sum_j f_j x^j
    std::vector<Q> f;

    static Weight make(std::vector<std::pair<int, int>> entries);
    // "0:1,1:1"
    static Weight parse(const std::string& text);

    // sum_i i * lambda_i
    Q residue_sum() const;
    // mu_i = lambda_{i-j}
    Weight shifted(int j) const;
    std::string str() const;

    bool operator==(const Weight& o) const { return entries == o.entries; }
};

} // namespace heis
