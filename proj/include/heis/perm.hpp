#pragma once

#include <string>
#include <vector>

namespace heis {

// One-line notation, 0-based: w[i] is the image of i.
struct Perm {
    std::vector<int> w;

    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    // transposition of i, i+1 (0-based i)
    static Perm simple(int n, int i);

    int rank() const { return static_cast<int>(w.size()); }
    int operator()(int i) const { return w[i]; }
    bool is_identity() const;
    Perm inverse() const;
    int length() const;
    // s_{i_1} ... s_{i_l} = *this with 0-based generator indices
    std::vector<int> reduced_word() const;
    Perm extended(int n) const;

    // lexicographic rank among all permutations of the same size
    long index() const;
    static Perm from_index(int n, long idx);

    auto operator<=>(const Perm&) const = default;
};

// (a * b)(i) = a(b(i))
Perm operator*(const Perm& a, const Perm& b);

} // namespace heis
