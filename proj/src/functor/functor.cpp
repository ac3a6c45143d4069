#include "heis/functor.hpp"

#include "heis/errors.hpp"

namespace heis {

std::string BimoduleSpace::str() const
{
    std::string s = "(" + signs + ")@" + std::to_string(n) + " labels";
    for (int l : labels)
        s += " " + std::to_string(l);
    return s + " dim " + std::to_string(dim);
}

BimoduleSpace FunctorAction::space(const SignSeq& s, int n) const
{
    BimoduleSpace V;
    V.signs = s;
    V.n = n;
    int k = static_cast<int>(s.size());
    V.labels.assign(k + 1, n);
    for (int i = k - 1; i >= 0; --i)
        V.labels[i] = V.labels[i + 1] + (s[i] == '+' ? 1 : -1);
    for (int l : V.labels)
        if (l < 0)
            V.zero = true;
    V.label_count.assign(k, 0);
    if (V.zero) {
        V.dim = 0;
        return V;
    }
    int d = H_.d();
    V.first_dim = k == 0 ? H_.dim(n) : H_.dim(std::max(V.labels[0], V.labels[1]));
    V.dim = V.first_dim;
    for (int i = 1; i < k; ++i)
        if (s[i] == '-') {
            V.label_count[i] = V.labels[i + 1] * d;
            V.dim *= V.label_count[i];
        }
    if (V.dim > H_.max_dim() * 8)
        throw resource_error("bimodule space " + V.str() + " exceeds the dimension cap");
    return V;
}

namespace {

int factor_rank(const BimoduleSpace& V, int i)
{
    int k = static_cast<int>(V.signs.size());
    if (i == k)
        return V.n;
    return std::max(V.labels[i], V.labels[i + 1]);
}

} // namespace

FunctorAction::Pure FunctorAction::basis_tensor(const BimoduleSpace& V, long idx)
{
    int k = static_cast<int>(V.signs.size());
    int d = H_.d();
    Pure p(k + 1);
    long rem = idx / V.first_dim;
    p[0] = H_.basis(factor_rank(V, 0), static_cast<int>(idx % V.first_dim));
    for (int i = 1; i < k; ++i) {
        if (V.label_count[i] == 0) {
            p[i] = H_.one(factor_rank(V, i));
            continue;
        }
        int q = static_cast<int>(rem % V.label_count[i]);
        rem /= V.label_count[i];
        p[i] = H_.left_basis(V.labels[i + 1], {q / d + 1, q % d});
    }
    if (k > 0)
        p[k] = H_.one(V.n);
    return p;
}

SparseVec FunctorAction::normalize(const BimoduleSpace& V, const Pure& p)
{
    SparseVec out;
    if (V.zero)
        return out;
    int k = static_cast<int>(V.signs.size());
    int d = H_.d();
    if (k == 0)
        return p[0].v;
    // carries keyed by the label choices already made to the right
    std::map<std::vector<int>, CycloElement> carries;
    carries.emplace(std::vector<int>{}, p[k]);
    for (int i = k; i >= 1; --i) {
        std::map<std::vector<int>, CycloElement> next;
        int target = factor_rank(V, i - 1);
        auto push = [&](std::vector<int> suffix, const CycloElement& h) {
            CycloElement c = H_.mul(p[i - 1], H_.include(h, target));
            if (c.is_zero())
                return;
            auto [it, fresh] = next.emplace(std::move(suffix), c);
            if (!fresh)
                it->second += c;
        };
        bool labelled = i < k && V.label_count[i] > 0;
        for (const auto& [suffix, carry] : carries) {
            if (!labelled) {
                push(suffix, carry);
                continue;
            }
            for (const auto& [lab, h] : H_.left_decompose(carry)) {
                std::vector<int> s2{(lab.j - 1) * d + lab.a};
                s2.insert(s2.end(), suffix.begin(), suffix.end());
                push(std::move(s2), h);
            }
        }
        carries = std::move(next);
    }
    for (const auto& [suffix, carry] : carries) {
        // suffix lists labels for strands 1..k-1 that carry one, in order
        long stride = V.first_dim, off = 0;
        size_t used = 0;
        for (int i = 1; i < k; ++i) {
            if (V.label_count[i] == 0)
                continue;
            off += suffix.at(used++) * stride;
            stride *= V.label_count[i];
        }
        for (const auto& [idx, c] : carry.v)
            add_term(out, static_cast<int>(off + idx), c);
    }
    return out;
}

std::vector<std::pair<Q, FunctorAction::Pure>> FunctorAction::apply_token(const Token& t, const BimoduleSpace& V,
                                                                          int pos, const Pure& p0)
{
    const auto& L = V.labels;
    Pure p = p0;
    std::vector<std::pair<Q, Pure>> out;
    auto erase_pair = [&](const CycloElement& prod) {
        // remove factors pos, pos+1 and absorb prod into the next factor
        CycloElement& nxt = p[pos + 2];
        nxt = H_.mul(H_.include(prod, nxt.n), nxt);
        p.erase(p.begin() + pos, p.begin() + pos + 2);
    };
    switch (t.kind) {
    case Tok::ID_UP:
    case Tok::ID_DOWN:
        break;
    case Tok::DOT_UP: {
        int r = L[pos + 1];
        p[pos] = H_.mul(p[pos], H_.x(r + 1, r + 1, t.dots));
        break;
    }
    case Tok::DOT_DOWN: {
        int r = L[pos + 1];
        p[pos] = H_.mul(H_.x(r, r, t.dots), p[pos]);
        break;
    }
    case Tok::CROSS_UU: {
        int r = L[pos + 2];
        CycloElement a = H_.mul(p[pos], H_.include(p[pos + 1], r + 2));
        p[pos] = H_.mul(a, H_.s(r + 2, r + 1));
        p[pos + 1] = H_.one(r + 1);
        break;
    }
    case Tok::CROSS_DD: {
        int r = L[pos + 2];
        CycloElement b = H_.mul(H_.include(p[pos], r), p[pos + 1]);
        p[pos] = H_.one(r - 1);
        p[pos + 1] = H_.mul(H_.s(r, r - 1), b);
        break;
    }
    case Tok::CROSS_DU: {
        int r = L[pos + 2];
        CycloElement a = H_.mul(H_.include(p[pos], r + 1), H_.s(r + 1, r));
        p[pos] = H_.mul(a, H_.include(p[pos + 1], r + 1));
        p[pos + 1] = H_.one(r + 1);
        break;
    }
    case Tok::CROSS_UD: {
        int r = L[pos + 2];
        if (r == 0)
            return out;
        CycloElement z = H_.mul(p[pos], p[pos + 1]);
        for (const auto& [lab, h] : H_.left_decompose(z)) {
            if (lab.j == r + 1)
                continue;
            Pure q = p;
            q[pos] = h;
            q[pos + 1] = H_.left_basis(r, lab);
            out.emplace_back(Q(1), std::move(q));
        }
        return out;
    }
    case Tok::CAP_CW:
        erase_pair(H_.mul(p[pos], p[pos + 1]));
        break;
    case Tok::CAP_CCW:
        erase_pair(H_.trace(H_.mul(p[pos], p[pos + 1])));
        break;
    case Tok::CUP_CCW: {
        int r = L[pos];
        p.insert(p.begin() + pos, {H_.one(r + 1), H_.one(r + 1)});
        break;
    }
    case Tok::CUP_CW: {
        int r = L[pos];
        if (r == 0)
            return out;
        for (int i = 1; i <= r; ++i) {
            CycloElement up = H_.one(r), down = H_.one(r);
            for (int g = i; g <= r - 1; ++g) {
                up = H_.mul(up, H_.s(r, g));
                down = H_.mul(H_.s(r, g), down);
            }
            for (int a = 0; a < H_.d(); ++a) {
                Pure q = p;
                CycloElement left = H_.mul(H_.x(r, i, a), up);
                CycloElement right = H_.mul(down, H_.include(H_.dual_dot(i, a), r));
                q.insert(q.begin() + pos, {left, right});
                out.emplace_back(Q(1), std::move(q));
            }
        }
        return out;
    }
    }
    out.emplace_back(Q(1), std::move(p));
    return out;
}

LinearMap FunctorAction::identity(const SignSeq& s, int n) const
{
    BimoduleSpace V = space(s, n);
    return {V, V, Matrix::identity(static_cast<int>(V.dim))};
}

LinearMap FunctorAction::elementary(const Token& t, const SignSeq& s, int pos, int n)
{
    SignSeq dom = t.dom();
    if (pos < 0 || pos + dom.size() > s.size() || s.compare(pos, dom.size(), dom) != 0)
        throw input_error("token " + t.str() + " does not apply at position " + std::to_string(pos) +
                          " of (" + s + ")");
    SignSeq after = s.substr(0, pos) + t.cod() + s.substr(pos + dom.size());
    BimoduleSpace V = space(s, n), W = space(after, n);
    LinearMap f{V, W, Matrix::zero(static_cast<int>(W.dim), static_cast<int>(V.dim))};
    if (V.zero || W.zero)
        return f;
    for (long j = 0; j < V.dim; ++j) {
        Pure p = basis_tensor(V, j);
        for (const auto& [c, q] : apply_token(t, V, pos, p))
            axpy(f.m.cols[j], c, normalize(W, q));
    }
    return f;
}

LinearMap FunctorAction::evaluate(const SliceWord& w, int n)
{
    // elementary maps are only computed on the basis vectors the composite reaches
    BimoduleSpace V = space(w.dom, n);
    std::vector<SparseVec> cols(V.dim);
    for (long j = 0; j < V.dim; ++j)
        cols[j][static_cast<int>(j)] = 1;
    BimoduleSpace U = V;
    for (const auto& slice : w.slices) {
        int pos = 0;
        for (const auto& t : slice) {
            if (t.kind == Tok::ID_UP || t.kind == Tok::ID_DOWN) {
                pos += 1;
                continue;
            }
            SignSeq dom = t.dom();
            if (U.signs.compare(pos, dom.size(), dom) != 0)
                throw input_error("token " + t.str() + " does not apply at position " + std::to_string(pos) +
                                  " of (" + U.signs + ")");
            BimoduleSpace W = space(U.signs.substr(0, pos) + t.cod() + U.signs.substr(pos + dom.size()), n);
            auto& cache = columns_[t.str() + "|" + U.signs + "|" + std::to_string(pos) + "|" + std::to_string(n)];
            for (auto& col : cols) {
                SparseVec out;
                if (!U.zero && !W.zero)
                    for (const auto& [idx, c] : col) {
                        auto it = cache.find(idx);
                        if (it == cache.end()) {
                            SparseVec img;
                            for (const auto& [q, pure] : apply_token(t, U, pos, basis_tensor(U, idx)))
                                axpy(img, q, normalize(W, pure));
                            it = cache.emplace(idx, std::move(img)).first;
                        }
                        axpy(out, c, it->second);
                    }
                col = std::move(out);
            }
            U = W;
            pos += static_cast<int>(t.cod().size());
        }
    }
    Matrix m;
    m.rows = static_cast<int>(U.dim);
    m.cols = std::move(cols);
    return {V, U, m};
}

Matrix FunctorAction::left_action(const BimoduleSpace& V, const CycloElement& a)
{
    Matrix m = Matrix::zero(static_cast<int>(V.dim), static_cast<int>(V.dim));
    if (V.zero)
        return m;
    for (long j = 0; j < V.dim; ++j) {
        Pure p = basis_tensor(V, j);
        p[0] = H_.mul(H_.include(a, p[0].n), p[0]);
        m.cols[j] = normalize(V, p);
    }
    return m;
}

Matrix FunctorAction::right_action(const BimoduleSpace& V, const CycloElement& a)
{
    Matrix m = Matrix::zero(static_cast<int>(V.dim), static_cast<int>(V.dim));
    if (V.zero)
        return m;
    for (long j = 0; j < V.dim; ++j) {
        Pure p = basis_tensor(V, j);
        p.back() = H_.mul(p.back(), a);
        m.cols[j] = normalize(V, p);
    }
    return m;
}

Matrix FunctorAction::right_mult_last(const BimoduleSpace& V, const CycloElement& z)
{
    return right_action(V, z);
}

} // namespace heis

namespace heis {

const CycloElement& CentralSubstitution::image(int k)
{
    auto it = img_.find(k);
    if (it != img_.end())
        return it->second;
    return img_[k] = H_.trace(H_.x(n_ + 1, n_ + 1, H_.d() + k));
}

CycloElement CentralSubstitution::value(const PiPoly& p)
{
    CycloElement acc = H_.zero(n_);
    for (const auto& [mono, q] : p.terms()) {
        CycloElement t = H_.scalar(n_, q);
        for (size_t k = 0; k < mono.size(); ++k)
            for (int r = 0; r < mono[k]; ++r)
                t = H_.mul(t, image(static_cast<int>(k) + 1));
        acc += t;
    }
    return acc;
}

CentralSubstitution& FunctorAction::substitution(int n)
{
    auto it = subs_.find(n);
    if (it == subs_.end())
        it = subs_.emplace(n, CentralSubstitution(H_, n)).first;
    return it->second;
}

LinearMap FunctorAction::evaluate(const Morphism& m, int n)
{
    BimoduleSpace V = space(m.dom, n), W = space(m.cod, n);
    LinearMap f{V, W, Matrix::zero(static_cast<int>(W.dim), static_cast<int>(V.dim))};
    if (V.zero || W.zero)
        return f;
    CentralSubstitution& cs = substitution(n);
    for (const auto& [b, c] : m.terms) {
        auto key = std::pair{b, n};
        auto it = diagrams_.find(key);
        if (it == diagrams_.end())
            it = diagrams_.emplace(key, evaluate(to_word(b), n).m).first;
        f.m = f.m + it->second * right_mult_last(V, cs.value(c));
    }
    return f;
}

} // namespace heis
