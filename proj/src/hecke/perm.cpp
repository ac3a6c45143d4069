#include "heis/perm.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <numeric>

namespace heis {

Perm::Perm(std::vector<int> images) : w(std::move(images))
{
    std::vector<char> seen(w.size(), 0);
    for (int v : w) {
        if (v < 0 || v >= rank() || seen[v])
            throw input_error("images do not form a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n)
{
    Perm p;
    p.w.resize(n);
    std::iota(p.w.begin(), p.w.end(), 0);
    return p;
}

Perm Perm::simple(int n, int i)
{
    if (i < 0 || i + 1 >= n)
        throw input_error("simple transposition index out of range");
    Perm p = identity(n);
    std::swap(p.w[i], p.w[i + 1]);
    return p;
}

bool Perm::is_identity() const
{
    for (int i = 0; i < rank(); ++i)
        if (w[i] != i)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    Perm p;
    p.w.resize(w.size());
    for (int i = 0; i < rank(); ++i)
        p.w[w[i]] = i;
    return p;
}

int Perm::length() const
{
    int l = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            if (w[i] > w[j])
                ++l;
    return l;
}

std::vector<int> Perm::reduced_word() const
{
    // bubble-sort the one-line word; each adjacent swap at (i, i+1)
    // peels a generator off the right: w = w' s_i
    std::vector<int> cur = w, word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < rank(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                word.push_back(i);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Perm Perm::extended(int n) const
{
    Perm p = identity(n);
    std::copy(w.begin(), w.end(), p.w.begin());
    return p;
}

long Perm::index() const
{
    long idx = 0;
    int n = rank();
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i])
                ++smaller;
        idx = idx * (n - i) + smaller;
    }
    return idx;
}

Perm Perm::from_index(int n, long idx)
{
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(idx % (n - i));
        idx /= (n - i);
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Perm p;
    p.w.resize(n);
    for (int i = 0; i < n; ++i) {
        p.w[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return p;
}

Perm operator*(const Perm& a, const Perm& b)
{
    if (a.rank() != b.rank())
        throw input_error("permutation rank mismatch");
    Perm p;
    p.w.resize(a.w.size());
    for (int i = 0; i < a.rank(); ++i)
        p.w[i] = a.w[b.w[i]];
    return p;
}

} // namespace heis
