#pragma once

#include "heis/rational.hpp"

#include <vector>

namespace heis {

// Incremental row echelon form over Q. Rows are keyed by their smallest
// index (the pivot) and scaled so the pivot entry is 1.
class Echelon {
public:
    // Reduces v in place against the stored rows; returns the residual.
    SparseVec reduce(SparseVec v) const;
    // Same, also returning the combination of inserted vectors used.
    SparseVec reduce(SparseVec v, SparseVec& combo) const;

    // Inserts v; returns false when v already lies in the span.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }

    // Back-substitutes so every row has zeros in all other pivot columns.
    void fully_reduce();
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    std::map<int, SparseVec> rows_;
    std::map<int, SparseVec> combos_;
    int inserted_ = 0;
};

// Basis of {v : <r, v> = 0 for every constraint row r}, over ncols unknowns.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& constraints, int ncols);

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b);
size_t span_rank(const std::vector<SparseVec>& a);

// Column-sparse matrix: cols[j] is the image of source basis vector j.
struct Matrix {
    int rows = 0;
    std::vector<SparseVec> cols;

    static Matrix zero(int rows, int cols);
    static Matrix identity(int n);
    int ncols() const { return static_cast<int>(cols.size()); }
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Q& c, const Matrix& a);

} // namespace heis
