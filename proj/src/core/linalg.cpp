#include "heis/linalg.hpp"

#include "heis/errors.hpp"

namespace heis {

namespace {

void eliminate(SparseVec& v, SparseVec* combo, const std::map<int, SparseVec>& rows,
               const std::map<int, SparseVec>& combos)
{
    auto it = v.begin();
    while (it != v.end()) {
        auto r = rows.find(it->first);
        if (r == rows.end()) {
            ++it;
            continue;
        }
        int key = it->first;
        Q c = it->second;
        axpy(v, -c, r->second);
        if (combo)
            axpy(*combo, -c, combos.at(key));
        it = v.upper_bound(key);
    }
}

} // namespace

SparseVec Echelon::reduce(SparseVec v) const
{
    eliminate(v, nullptr, rows_, combos_);
    return v;
}

SparseVec Echelon::reduce(SparseVec v, SparseVec& combo) const
{
    combo.clear();
    eliminate(v, &combo, rows_, combos_);
    return v;
}

bool Echelon::insert(const SparseVec& v)
{
    SparseVec combo;
    SparseVec r = reduce(v, combo);
    add_term(combo, inserted_++, Q(1));
    if (r.empty())
        return false;
    int pivot = r.begin()->first;
    Q inv = 1 / r.begin()->second;
    for (auto& [k, c] : r)
        c *= inv;
    for (auto& [k, c] : combo)
        c *= inv;
    rows_.emplace(pivot, std::move(r));
    combos_.emplace(pivot, std::move(combo));
    return true;
}

void Echelon::fully_reduce()
{
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        int pivot = it->first;
        for (auto& [p, row] : rows_) {
            if (p >= pivot)
                break;
            auto e = row.find(pivot);
            if (e == row.end())
                continue;
            Q c = e->second;
            axpy(row, -c, it->second);
            axpy(combos_[p], -c, combos_[pivot]);
        }
    }
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& constraints, int ncols)
{
    Echelon e;
    for (const auto& r : constraints)
        e.insert(r);
    e.fully_reduce();
    std::vector<SparseVec> out;
    for (int free = 0; free < ncols; ++free) {
        if (e.rows().count(free))
            continue;
        SparseVec v;
        v[free] = 1;
        for (const auto& [p, row] : e.rows()) {
            auto it = row.find(free);
            if (it != row.end())
                v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

size_t span_rank(const std::vector<SparseVec>& a)
{
    Echelon e;
    for (const auto& v : a)
        e.insert(v);
    return e.rank();
}

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b)
{
    Echelon ea;
    for (const auto& v : a)
        ea.insert(v);
    for (const auto& v : b)
        if (!ea.contains(v))
            return false;
    return span_rank(b) == ea.rank();
}

Matrix Matrix::zero(int rows, int cols)
{
    Matrix m;
    m.rows = rows;
    m.cols.assign(cols, {});
    return m;
}

Matrix Matrix::identity(int n)
{
    Matrix m = zero(n, n);
    for (int i = 0; i < n; ++i)
        m.cols[i][i] = 1;
    return m;
}

SparseVec Matrix::apply(const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [j, c] : v)
        axpy(out, c, cols.at(j));
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& c : cols)
        if (!c.empty())
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.ncols() != b.rows)
        throw internal_error("matrix shape mismatch in product");
    Matrix m = Matrix::zero(a.rows, b.ncols());
    for (int j = 0; j < b.ncols(); ++j)
        m.cols[j] = a.apply(b.cols[j]);
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.ncols() != b.ncols())
        throw internal_error("matrix shape mismatch in sum");
    Matrix m = a;
    for (int j = 0; j < b.ncols(); ++j)
        axpy(m.cols[j], Q(1), b.cols[j]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + Q(-1) * b;
}

Matrix operator*(const Q& c, const Matrix& a)
{
    Matrix m = Matrix::zero(a.rows, a.ncols());
    if (c == 0)
        return m;
    for (int j = 0; j < a.ncols(); ++j)
        for (const auto& [i, v] : a.cols[j])
            m.cols[j][i] = c * v;
    return m;
}

} // namespace heis
