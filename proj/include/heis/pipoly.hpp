#pragma once

#include "heis/rational.hpp"
#include "heis/weight.hpp"

#include <map>
#include <string>
#include <vector>

namespace heis {

// Exponent vector: entry k-1 is the power of y_k. No trailing zeros.
using PiMono = std::vector<int>;

// Polynomial in the bubble variables y_1, y_2, ... where y_k is the
// counterclockwise bubble with d+k dots.
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(const Q& c); // NOLINT: constants convert implicitly
    static PiPoly var(int k);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    const std::map<PiMono, Q>& terms() const { return terms_; }
    void add(const PiMono& m, const Q& c);

    // y_k has degree k+1; zero polynomial has degree INT_MIN
    int degree() const;
    static int mono_degree(const PiMono& m);
    int max_var() const;

    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    PiPoly& operator*=(const PiPoly& o);
    PiPoly& operator*=(const Q& c);
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
    friend PiPoly operator*(PiPoly a, const Q& c) { return a *= c; }
    friend PiPoly operator*(const Q& c, PiPoly a) { return a *= c; }
    PiPoly operator-() const { return *this * Q(-1); }
    bool operator==(const PiPoly& o) const = default;
    bool operator<(const PiPoly& o) const { return terms_ < o.terms_; }

    // "3/2*y1^2*y3 - y2 + 1"; "0" for zero
    std::string str() const;
    static std::string mono_str(const PiMono& m);
    // accepts the str() format
    static PiPoly parse(const std::string& text);
    static PiMono parse_mono(const std::string& text);

private:
    std::map<PiMono, Q> terms_;
};

// Value of the counterclockwise bubble with t dots:
// 0 (t < d-1), 1 (t = d-1), sum_i i*lambda_i (t = d), y_{t-d} (t > d).
PiPoly bubble_value(int t, const Weight& w);

// c_s = (-1)^s det(bubble(d+j-i))_{i,j=1..s}, 0 <= s <= d
PiPoly structure_scalar(int s, const Weight& w);

} // namespace heis
