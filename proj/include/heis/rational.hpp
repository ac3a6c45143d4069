#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace heis {

using Q = mpq_class;

std::string to_string(const Q& q);

// accepts "3", "-2", "5/7"; throws input_error otherwise
Q parse_rational(const std::string& text);

Q binomial(long n, long k);
Q factorial(long n);

// sparse vector over Q, no stored zeros
using SparseVec = std::map<int, Q>;

void axpy(SparseVec& y, const Q& a, const SparseVec& x);
void add_term(SparseVec& y, int key, const Q& c);

} // namespace heis
