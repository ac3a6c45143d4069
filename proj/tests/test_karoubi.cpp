#include "diagram_util.hpp"

#include "heis/errors.hpp"
#include "heis/karoubi.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace heis;
using namespace heis::test;

namespace {

// crossing of strands i, i+1 among n parallel strands of one orientation
Morphism crossing_at(Reducer& R, int n, int i, char orientation)
{
    std::string text;
    std::string id = orientation == '+' ? "U" : "D";
    for (int p = 0; p < n; ++p) {
        if (!text.empty())
            text += " * ";
        if (p == i) {
            text += orientation == '+' ? "XUU" : "XDD";
            ++p;
        } else {
            text += id;
        }
    }
    return R.reduce(text);
}

GroupElement identity_element(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return {{w, Q(1)}};
}

Morphism scaled(Morphism m, const Q& c) { return m * PiPoly(c); }

} // namespace

TEST_CASE("dot tuples")
{
    CHECK(dot_tuples(0, 2).size() == 1);
    CHECK(dot_tuples(1, 3).size() == 3);
    CHECK(dot_tuples(2, 2).size() == 3);
    CHECK(dot_tuples(2, 3).size() == 6);
    CHECK(DotTuple::make({0, 0, 1}, 2).stabilizer() == 2);
    CHECK(DotTuple::make({1, 1, 1}, 2).stabilizer() == 6);
    CHECK(DotTuple::make({0, 1}, 2).total() == 1);
    CHECK_THROWS_AS(DotTuple::make({1, 0}, 2), input_error);
    CHECK_THROWS_AS(DotTuple::make({2}, 2), input_error);
    auto t = dot_tuples(2, 3);
    CHECK(std::is_sorted(t.begin(), t.end()));
}

TEST_CASE("group algebra and Young symmetrizers")
{
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> shapes;
        if (n == 1)
            shapes = {{1}};
        if (n == 2)
            shapes = {{2}, {1, 1}};
        if (n == 3)
            shapes = {{3}, {2, 1}, {1, 1, 1}};
        if (n == 4)
            shapes = {{4}, {3, 1}, {2, 2}, {2, 1, 1}};
        for (const auto& mu : shapes) {
            GroupElement e = young_symmetrizer(mu);
            CHECK(group_mul(e, e) == e);
            for (const auto& nu : shapes)
                if (nu != mu && (nu == std::vector<int>{n} || mu == std::vector<int>{n}))
                    CHECK(group_mul(e, young_symmetrizer(nu)).empty());
        }
    }
    GroupElement one = identity_element(3);
    CHECK(group_mul(one, young_symmetrizer({2, 1})) == young_symmetrizer({2, 1}));
    CHECK(young_symmetrizer({2}) == GroupElement{{{0, 1}, Q(1, 2)}, {{1, 0}, Q(1, 2)}});
}

TEST_CASE("symmetrizers")
{
    for (const Weight& w : {w0(), w01()}) {
        Karoubi K(w);
        Reducer& R = K.reducer();
        CHECK(K.symmetrizer(1, '+').e == R.identity("+"));
        CHECK(K.symmetrizer(1, '-').e == R.identity("-"));
        Morphism half = scaled(R.identity("++") + R.reduce("XUU"), Q(1, 2));
        CHECK(K.symmetrizer(2, '+').e == half);
        for (char o : {'+', '-'})
            for (int n = 1; n <= 3; ++n) {
                KaroubiObject e = K.symmetrizer(n, o);
                CHECK(e.eps == SignSeq(n, o));
                CHECK(K.is_idempotent(e));
                for (int i = 0; i + 1 < n; ++i) {
                    Morphism x = crossing_at(R, n, i, o);
                    CHECK(K.compose(x, e.e) == e.e);
                    CHECK(K.compose(e.e, x) == e.e);
                }
            }
        // Young idempotents
        KaroubiObject anti = K.young({1, 1}, '+');
        CHECK(anti.e == scaled(R.identity("++") + R.reduce("XUU") * PiPoly(-1), Q(1, 2)));
        CHECK(K.compose(anti.e, K.symmetrizer(2, '+').e).is_zero());
        for (char o : {'+', '-'}) {
            KaroubiObject hook = K.young({2, 1}, o);
            CHECK(K.is_idempotent(hook));
            CHECK(K.compose(hook.e, K.symmetrizer(3, o).e).is_zero());
            CHECK(K.compose(K.symmetrizer(3, o).e, hook.e).is_zero());
        }
    }
    Karoubi small(w0(), 2);
    CHECK_THROWS_AS(small.symmetrizer(3, '+'), resource_error);
}

TEST_CASE("Karoubi morphisms and tensor products")
{
    Karoubi K(w01());
    KaroubiObject a = K.symmetrizer(2, '+'), b = K.symmetrizer(1, '-');
    KaroubiObject ab = K.tensor(a, b);
    CHECK(ab.eps == "++-");
    CHECK(K.is_idempotent(ab));
    KaroubiMorphism id{ab, ab, ab.e};
    CHECK(K.is_morphism(id));
    KaroubiMorphism raw{a, a, K.reducer().identity("++")};
    CHECK_FALSE(K.is_morphism(raw));
    CHECK(K.compose(id, id).f == ab.e);
}

TEST_CASE("regrouping is invertible")
{
    for (const Weight& w : {w0(), w01()}) {
        Karoubi K(w);
        for (char o : {'+', '-'})
            for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
                KaroubiMorphism f = K.regroup(n, m, o), g = K.regroup(m, n, o);
                CHECK(K.is_morphism(f));
                CHECK(K.compose(g, f).f == f.src.e);
                CHECK(K.compose(f, g).f == g.src.e);
            }
    }
}

TEST_CASE("interchange morphisms")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        Karoubi K(w);
        Reducer& R = K.reducer();
        KaroubiMorphism b0 = K.build_interchange(1, 1, DotTuple{}, Interchange::beta);
        CHECK(b0.f == R.reduce("XDU"));
        CHECK_THROWS_AS(K.build_interchange(1, 1, DotTuple::make({0, 0}, w.d), Interchange::alpha), input_error);
        CHECK_THROWS_AS(K.build_interchange(1, 2, DotTuple::make({0, 0}, w.d), Interchange::beta), input_error);

        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
            for (int l = 0; l <= std::min(n, m); ++l)
                for (const auto& b : dot_tuples(l, w.d)) {
                    KaroubiMorphism beta = K.build_interchange(n, m, b, Interchange::beta);
                    KaroubiMorphism alpha = K.build_interchange(n, m, b, Interchange::alpha);
                    CHECK(K.is_morphism(beta));
                    CHECK(K.is_morphism(alpha));
                    // alpha_b o beta_b = |S_b|(n-l)!(m-l)!/(n!m!) id plus lower degree
                    Q scale = Q(b.stabilizer()) * factorial(n - l) * factorial(m - l) / (factorial(n) * factorial(m));
                    Morphism ab = K.compose(alpha, beta).f;
                    Morphism err = ab + beta.src.e * PiPoly(-scale);
                    CHECK_MESSAGE((err.is_zero() || R.filtration_degree(err) < 0), b.str() << " (" << n << "," << m
                                                                                          << ")");
                    for (const auto& c : dot_tuples(l, w.d)) {
                        if (c == b)
                            continue;
                        Morphism cb = K.compose(K.build_interchange(n, m, c, Interchange::alpha), beta).f;
                        CHECK((cb.is_zero() || R.filtration_degree(cb) < b.total() - c.total()));
                    }
                }
    }
}

TEST_CASE("dual morphisms")
{
    for (const Weight& w : {w0(), w01(), w00(), w012()}) {
        Karoubi K(w);
        auto theta = K.theta_solve(1, 1);
        CHECK(theta.size() == static_cast<size_t>(1 + w.d));
        for (const auto& [c, th] : theta)
            for (const auto& [b, unused] : theta) {
                (void)unused;
                if (c.length() != b.length())
                    continue;
                Morphism p = K.compose(th, K.build_interchange(1, 1, b, Interchange::beta)).f;
                if (c == b)
                    CHECK(p == th.tgt.e);
                else
                    CHECK(p.is_zero());
            }
        // the top tuple needs no correction
        DotTuple top = DotTuple::make({w.d - 1}, w.d);
        CHECK(theta.at(top).f == K.build_interchange(1, 1, top, Interchange::alpha).f);
    }
}

TEST_CASE("decompositions of the identity")
{
    auto expect = [](int d, int k) { return static_cast<int>(binomial(d + k - 1, k).get_num().get_si()); };
    for (const Weight& w : {w0(), w01(), w00()}) {
        Karoubi K(w);
        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
            DecompositionReport r = K.decompose_identity(n, m);
            CHECK(r.orthogonal);
            CHECK(r.complete);
            size_t total = 0;
            for (int k = 0; k <= std::min(n, m); ++k) {
                CHECK(r.multiplicities[k] == expect(w.d, k));
                total += expect(w.d, k);
            }
            CHECK(r.idempotents.size() == total);
            auto j = to_json(r);
            CHECK(j.at("orthogonal").get<bool>());
            CHECK(j.at("complete").get<bool>());
            CHECK(j.at("params").at("n").get<int>() == n);
        }
    }
    Karoubi K(w01());
    auto r = K.decompose_identity(1, 1);
    CHECK(r.idempotents.size() == 3);
    CHECK(r.multiplicities == std::map<int, int>{{0, 1}, {1, 2}});
    Karoubi one(w0());
    CHECK(one.decompose_identity(1, 1).idempotents.size() == 2);
}
