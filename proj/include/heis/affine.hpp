#pragma once

#include "heis/perm.hpp"
#include "heis/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace heis {

// PBW monomial x^e w (x's to the left of the permutation)
struct PbwKey {
    std::vector<int> e;
    Perm w;
    auto operator<=>(const PbwKey&) const = default;
};

// Element of the degenerate affine Hecke algebra H_n in PBW normal form.
class AffineElement {
public:
    explicit AffineElement(int n = 0) : n_(n) {}

    static AffineElement scalar(int n, const Q& c);
    static AffineElement x(int n, int i); // 1-based
    static AffineElement s(int n, int i); // 1-based, s_i swaps i and i+1

    int rank() const { return n_; }
    const std::map<PbwKey, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PbwKey& k, const Q& c);

    AffineElement& operator+=(const AffineElement& o);
    AffineElement& operator-=(const AffineElement& o);
    AffineElement& operator*=(const Q& c);
    bool operator==(const AffineElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int n_;
    std::map<PbwKey, Q> terms_;
};

AffineElement operator+(AffineElement a, const AffineElement& b);
AffineElement operator-(AffineElement a, const AffineElement& b);
AffineElement operator*(const Q& c, AffineElement a);
AffineElement operator*(const AffineElement& a, const AffineElement& b);

// w x_k = x_{w(k)} w + sum_v c_v v (0-based k). Returns the correction terms.
std::vector<std::pair<Perm, Q>> perm_times_x_lower(const Perm& w, int k);

// s_q * x^e = x^{s e} s_q - (divided difference of x^e), 0-based q.
// Returns the divided difference as a map exponent-vector -> coefficient.
std::map<std::vector<int>, Q> divided_difference(const std::vector<int>& e, int q);

// Generator word such as "s1 x1" or "2*x1*s2 - s1"; see hecke_parse.cpp.
AffineElement affine_normal_form(const std::string& word, int n);

std::string monomial_str(const PbwKey& k);

} // namespace heis
