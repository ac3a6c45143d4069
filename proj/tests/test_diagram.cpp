#include "diagram_util.hpp"

#include "heis/errors.hpp"
#include "heis/verify.hpp"

#include <doctest.h>

#include <random>

using namespace heis;
using namespace heis::test;

namespace {

std::vector<Weight> small_weights() { return {w0(), w01(), w00(), w012()}; }

// c_0, c_1, ... from the inverse series of the bubble values, no determinants
std::vector<PiPoly> inverse_series(const Weight& w, int upto)
{
    std::vector<PiPoly> c{PiPoly(1)};
    for (int m = 1; m <= upto; ++m) {
        PiPoly s;
        for (int t = 0; t < m; ++t)
            s += c[t] * bubble_value(w.d - 1 + m - t, w);
        c.push_back(-s);
    }
    return c;
}

Q power(const Q& a, int e)
{
    Q r = 1;
    for (int i = 0; i < e; ++i)
        r *= a;
    return r;
}

PiPoly residue(const Weight& w) { return PiPoly(w.residue_sum()); }

std::string dotted_pair(int a, int b) { return dots_up(a) + " * " + dots_up(b); }

} // namespace

TEST_CASE("slice word parsing")
{
    SliceWord a = parse_slice_word("U * D");
    CHECK(a.slices.size() == 1);
    CHECK(a.dom == "+-");
    CHECK(a.cod == "+-");
    SliceWord loop = parse_slice_word("CUPCCW ; CAPCCW");
    CHECK(loop.dom.empty());
    CHECK(loop.cod.empty());
    CHECK_THROWS_AS(parse_slice_word("CAPCW ; U"), input_error);
    CHECK_THROWS_AS(parse_slice_word("U * Q"), input_error);
    CHECK_THROWS_AS(parse_slice_word("PU^"), input_error);
    for (const char* t : {"XUU ; PU^2 * U", "CUPCW * D ; U * XDD", "XDU ; XUD", "PD^3"}) {
        SliceWord w = parse_slice_word(t);
        CHECK(parse_slice_word(w.str()) == w);
    }
}

TEST_CASE("structure scalars")
{
    for (const Weight& w : small_weights()) {
        CHECK(structure_scalar(0, w) == PiPoly(1));
        CHECK(structure_scalar(1, w) == -residue(w));
        if (w.d >= 2)
            CHECK(structure_scalar(2, w) == residue(w) * residue(w) - PiPoly::var(1));
        CHECK_THROWS_AS(structure_scalar(w.d + 1, w), input_error);
        CHECK_THROWS_AS(structure_scalar(-1, w), input_error);
        auto c = inverse_series(w, w.d);
        for (int s = 0; s <= w.d; ++s)
            CHECK(structure_scalar(s, w) == c[s]);
    }
}

TEST_CASE("determinant identity")
{
    // d = 4 so that c_0..c_4 all exist
    Weight w = Weight::parse("0:1,1:2,3:1");
    REQUIRE(w.d == 4);
    for (int m = 0; m <= 4; ++m) {
        PiPoly s;
        for (int t = 0; t <= m; ++t)
            s += structure_scalar(t, w) * bubble_value(w.d - 1 + m - t, w);
        CHECK(s == PiPoly(m == 0 ? 1 : 0));
    }
}

TEST_CASE("reduce examples")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        Morphism one = R.reduce(ccw_bubble(w.d - 1));
        CHECK(one == scalar_morphism(PiPoly(1)));
        CHECK(R.reduce(ccw_bubble(w.d)) == scalar_morphism(residue(w)));
        CHECK(R.reduce("CUPCCW * U ; D * XUU ; CAPCCW * U").is_zero());
        CHECK(R.reduce("XDU ; XUD") == R.identity("+-"));
        for (int j = 0; j + 1 < w.d; ++j)
            CHECK(R.reduce(ccw_bubble(j)).is_zero());
        for (int k = 1; k <= 2; ++k)
            CHECK(R.reduce(ccw_bubble(w.d + k)) == scalar_morphism(PiPoly::var(k)));
    }
}

TEST_CASE("reduction failures are reported")
{
    Reducer R(w01());
    ReduceOptions o;
    o.fuel = 1;
    CHECK_THROWS_AS(R.reduce("XUU ; XUU ; XUU ; XUU", o), reduction_failure);
}

TEST_CASE("compose and tensor examples")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        Morphism f = R.reduce("PU * U ; XUU ; U * PU^2");
        CHECK(R.compose(R.identity("++"), f) == f);
        CHECK(R.compose(f, R.identity("++")) == f);
        Morphism x = R.reduce("XUU");
        CHECK(R.compose(x, x) == R.identity("++"));
        Morphism cup = R.reduce("CUPCCW");
        Morphism dots = R.reduce("D * " + dots_up(w.d));
        Morphism cap = R.reduce("CAPCCW");
        CHECK(R.compose(cap, R.compose(dots, cup)) == scalar_morphism(residue(w)));
        CHECK_THROWS_AS(R.compose(cap, x), input_error);

        CHECK(R.tensor(R.identity("+"), R.identity("-")) == R.identity("+-"));
        CHECK(R.tensor(f, R.identity("")) == f);
        CHECK(R.tensor(R.identity(""), f) == f);
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                Morphism t = R.tensor(R.reduce(ccw_bubble(w.d + j)), R.reduce(ccw_bubble(w.d + k)));
                CHECK(t == scalar_morphism(PiPoly::var(j) * PiPoly::var(k)));
                CHECK(t == R.reduce(ccw_bubble(w.d + j) + " ; " + ccw_bubble(w.d + k)));
            }
    }
}

TEST_CASE("tensor is associative and satisfies the interchange law")
{
    std::mt19937_64 rng(7);
    for (const Weight& w : {w01(), w00()}) {
        Reducer R(w);
        for (int trial = 0; trial < 15; ++trial) {
            auto word = [&](const SignSeq& dom) { return parse_slice_word(random_word(rng, dom, 3, 3)); };
            SliceWord h = word("+"), k = word("-");
            SliceWord f = word(h.cod), g = word(k.cod);
            Morphism F = R.reduce(f), G = R.reduce(g), Hm = R.reduce(h), K = R.reduce(k);
            CHECK(R.compose(R.tensor(F, G), R.tensor(Hm, K)) == R.tensor(R.compose(F, Hm), R.compose(G, K)));
            CHECK(R.tensor(R.tensor(F, G), Hm) == R.tensor(F, R.tensor(G, Hm)));
            CHECK(R.tensor(F, G) == R.reduce(juxtapose(f, g)));
            CHECK(R.compose(F, Hm) == R.reduce(stack(h, f)));
        }
    }
}

TEST_CASE("basis enumeration")
{
    CHECK(basis_enumerate("+", "+", 0).size() == 1);
    CHECK(basis_enumerate("++", "++", 1).size() == 6);
    CHECK(basis_enumerate("", "-+", 2).size() == 3);
    CHECK(basis_enumerate("+", "-", 3).empty());
    CHECK(basis_enumerate("+-", "", 2).size() == 3);
    // k! C(k + budget, k)
    CHECK(basis_enumerate("+-+", "+-+", 2).size() == 6 * 10);
    CHECK(basis_enumerate("-+", "+-", 1).size() == 2 * 3);
    for (const auto& b : basis_enumerate("+-", "-+", 2))
        CHECK(b.total_dots() <= 2);
}

TEST_CASE("degrees")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        CHECK(R.filtration_degree(R.reduce("PU")) == 1);
        CHECK(R.filtration_degree(R.reduce("CUPCCW")) == 0);
        CHECK(R.filtration_degree(R.reduce("CAPCW")) == 0);
        CHECK(R.filtration_degree(R.reduce("XUU")) == 0);
        CHECK(R.filtration_degree(R.reduce("CUPCW")) == w.d - 1);
        CHECK(R.filtration_degree(R.reduce("CAPCCW")) == 1 - w.d);
        for (int t = 1; t <= 3; ++t)
            CHECK(R.filtration_degree(R.reduce(ccw_bubble(w.d + t))) == t + 1);
        // t = 1 is the scalar case
        for (int t = 2; t <= 4; ++t)
            CHECK(R.filtration_degree(R.reduce(ccw_bubble(w.d - 1 + t))) == t);
    }
}

TEST_CASE("right curls break degree subadditivity")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        Morphism cup = R.reduce("U * CUPCW"), cross = R.reduce("XUU * D"), cap = R.reduce("U * CAPCW");
        Morphism curl = R.compose(cap, R.compose(cross, cup));
        CHECK(R.filtration_degree(cup) + R.filtration_degree(cross) + R.filtration_degree(cap) == w.d - 1);
        CHECK(R.filtration_degree(curl) == w.d);
    }
}

TEST_CASE("degree is subadditive without leftward cups")
{
    std::mt19937_64 rng(11);
    for (const Weight& w : {w01(), w00(), w012()}) {
        Reducer R(w);
        int checked = 0;
        for (int trial = 0; trial < 400 && checked < 30; ++trial) {
            std::string gt = random_word(rng, trial % 2 ? "+-" : "++", 4, 4);
            SliceWord g = parse_slice_word(gt);
            std::string ft = random_word(rng, g.cod, 4, 4);
            if (gt.find("CUPCW") != std::string::npos || ft.find("CUPCW") != std::string::npos)
                continue;
            Morphism F = R.reduce(ft), G = R.reduce(g);
            Morphism FG = R.compose(F, G);
            if (F.is_zero() || G.is_zero() || FG.is_zero())
                continue;
            ++checked;
            CHECK(R.filtration_degree(FG) <= R.filtration_degree(F) + R.filtration_degree(G));
        }
        CHECK(checked == 30);
    }
}

TEST_CASE("reduction is idempotent and serializes")
{
    std::mt19937_64 rng(3);
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        for (const SignSeq& dom : {"", "+", "+-", "-+", "++-"}) {
            for (int trial = 0; trial < 8; ++trial) {
                std::string text = random_word(rng, dom, 6, 4);
                if (text.empty())
                    continue;
                Morphism m = R.reduce(text);
                CHECK(rereduce(R, m) == m);
                CHECK(morphism_from_json(to_json(m)) == m);
                CHECK(morphism_from_json(nlohmann::json::parse(to_json(m).dump())) == m);
            }
        }
    }
    CHECK_THROWS_AS(morphism_from_json(nlohmann::json::parse(
                        R"({"domain":"+","codomain":"-","terms":[{"matching":[["b0","t0"]],"dots":[0],"coeff":{"1":"1"}}]})")),
                    input_error);
}

TEST_CASE("circle duality")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        int d = w.d;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                // i dots, then the dual decoration j^vee = sum_{t>=j} c_{d-1-t} x^{t-j}
                std::vector<std::pair<PiPoly, std::string>> terms;
                for (int t = j; t < d; ++t)
                    terms.push_back({structure_scalar(d - 1 - t, w), ccw_bubble(i + t - j)});
                CHECK(reduce_sum(R, "", "", terms) == scalar_morphism(PiPoly(i == j ? 1 : 0)));
            }
    }
}

TEST_CASE("identity of (-,+) splits into orthogonal idempotents")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        int d = w.d;
        std::vector<Morphism> parts{R.reduce("XUD ; XDU")};
        for (int j = 0; j < d; ++j) {
            std::vector<std::pair<PiPoly, std::string>> terms;
            for (int i = j; i < d; ++i)
                terms.push_back({structure_scalar(d - 1 - i, w),
                                 "D * " + dots_up(i - j) + " ; CAPCCW ; CUPCCW ; D * " + dots_up(j)});
            parts.push_back(reduce_sum(R, "-+", "-+", terms));
        }
        Morphism sum = Morphism::zero("-+", "-+");
        for (size_t a = 0; a < parts.size(); ++a) {
            sum += parts[a];
            for (size_t b = 0; b < parts.size(); ++b) {
                Morphism ab = R.compose(parts[a], parts[b]);
                if (a == b)
                    CHECK(ab == parts[a]);
                else
                    CHECK(ab.is_zero());
            }
        }
        CHECK(sum == R.identity("-+"));
    }
}

TEST_CASE("dot slide family")
{
    for (const Weight& w : {w0(), w01(), w012()}) {
        Reducer R(w);
        for (int t = 1; t <= 4; ++t) {
            std::vector<std::pair<PiPoly, std::string>> corr;
            for (int a = 0; a < t; ++a)
                corr.push_back({PiPoly(1), dotted_pair(a, t - 1 - a)});
            Morphism c = reduce_sum(R, "++", "++", corr);
            CHECK(reduce_sum(R, "++", "++",
                             {{PiPoly(1), dotted_pair(t, 0) + " ; XUU"}, {PiPoly(-1), "XUU ; " + dotted_pair(0, t)}}) ==
                  c);
            CHECK(reduce_sum(R, "++", "++",
                             {{PiPoly(1), "XUU ; " + dotted_pair(t, 0)}, {PiPoly(-1), dotted_pair(0, t) + " ; XUU"}}) ==
                  c);
        }
    }
}

TEST_CASE("clockwise bubbles reduce to counterclockwise ones")
{
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        HeckeTower H(w);
        FunctorAction F(H);
        for (int k = 0; k <= 3; ++k) {
            Morphism m = R.reduce(cw_bubble(k));
            CHECK(m.terms.size() <= 1);
            for (const auto& [b, c] : m.terms)
                CHECK(b.strands.empty());
            for (int n = 0; n <= 2; ++n)
                CHECK(F.evaluate(m, n).m == F.evaluate(parse_slice_word(cw_bubble(k)), n).m);
        }
    }
}

TEST_CASE("clockwise against counterclockwise bubbles")
{
    // sum_{a+b=t-1} ccw(a) cw(b) = ccw(d+t) + sum_{j<d} c_{d-j} ccw(t+j)
    for (const Weight& w : small_weights()) {
        Reducer R(w);
        int d = w.d;
        for (int t = 1; t <= 4; ++t) {
            std::vector<std::pair<PiPoly, std::string>> lhs, rhs{{PiPoly(1), ccw_bubble(d + t)}};
            for (int a = 0; a < t; ++a)
                lhs.push_back({PiPoly(1), ccw_bubble(a) + " ; " + cw_bubble(t - 1 - a)});
            for (int j = 0; j < d; ++j)
                rhs.push_back({structure_scalar(d - j, w), ccw_bubble(t + j)});
            CHECK(reduce_sum(R, "", "", lhs) == reduce_sum(R, "", "", rhs));
        }
    }
}

TEST_CASE("dimension check for End(+^m)")
{
    for (const Weight& w : {w0(), w01()}) {
        for (int m = 0; m <= 2; ++m)
            for (int D = 0; D <= 3; ++D) {
                SignSeq s(m, '+');
                long diagrams = 0;
                for (const auto& b : basis_enumerate(s, s, D)) {
                    int rest = D - degree(b, w);
                    // bubble monomials of degree <= rest: partitions into parts >= 2
                    std::vector<long> p(rest + 1, 0);
                    if (rest >= 0) {
                        p[0] = 1;
                        for (int part = 2; part <= rest; ++part)
                            for (int x = part; x <= rest; ++x)
                                p[x] += p[x - part];
                    }
                    for (long v : p)
                        diagrams += v;
                }
                // H_m (x) Pi: m! permutations, x-exponents of total j, bubbles of degree <= D - j
                long expected = 0, fact = m == 2 ? 2 : 1;
                for (int j = 0; j <= D; ++j) {
                    long vecs = m == 0 ? (j == 0) : m == 1 ? 1 : j + 1;
                    int rest = D - j;
                    std::vector<long> p(rest + 1, 0);
                    p[0] = 1;
                    for (int part = 2; part <= rest; ++part)
                        for (int x = part; x <= rest; ++x)
                            p[x] += p[x - part];
                    long mon = 0;
                    for (long v : p)
                        mon += v;
                    expected += fact * vecs * mon;
                }
                CHECK(diagrams == expected);
            }
    }
}

TEST_CASE("dot shift")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        for (int j : {1, -2}) {
            Weight mu = w.shifted(j);
            Reducer R(w), S(mu);
            CHECK(dot_shift_image(R.reduce("PU"), j, w) ==
                  reduce_sum(S, "+", "+", {{PiPoly(1), "PU"}, {PiPoly(Q(-j)), "U"}}));
            CHECK(dot_shift_image(R.reduce("XUU"), j, w) == S.reduce("XUU"));
            CHECK(dot_shift_image(R.reduce("CUPCW"), j, w) == S.reduce("CUPCW"));

            // (x - j)^d closed into a bubble, evaluated over mu
            std::vector<std::pair<PiPoly, std::string>> terms;
            for (int k = 0; k <= w.d; ++k)
                terms.push_back({PiPoly(binomial(w.d, k) * power(Q(-j), w.d - k)), ccw_bubble(k)});
            CHECK(reduce_sum(S, "", "", terms) == scalar_morphism(residue(w)));

            std::mt19937_64 rng(j + 10);
            for (int trial = 0; trial < 10; ++trial) {
                SliceWord g = parse_slice_word(random_word(rng, "+-", 4, 4));
                SliceWord f = parse_slice_word(random_word(rng, g.cod, 4, 4));
                SliceWord h = parse_slice_word(random_word(rng, "+", 3, 3));
                Morphism F = R.reduce(f), G = R.reduce(g), Hm = R.reduce(h);
                CHECK(dot_shift_image(R.compose(F, G), j, w) ==
                      S.compose(dot_shift_image(F, j, w), dot_shift_image(G, j, w)));
                CHECK(dot_shift_image(R.tensor(F, Hm), j, w) ==
                      S.tensor(dot_shift_image(F, j, w), dot_shift_image(Hm, j, w)));
            }
        }
    }
}

TEST_CASE("triple points with a cyclic triangle")
{
    // the two sides of the third Reidemeister move on (+,-,+)
    std::string lhs = "U * XUD ; XUU * D ; U * XDU";
    std::string rhs = "XDU * U ; D * XUU ; XUD * U";
    for (const Weight& w : {w0(), w01(), w00(), w012()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        Reducer R(w);
        Morphism a = R.reduce(lhs), b = R.reduce(rhs);
        for (int n = 0; n <= 1; ++n) {
            CHECK(F.evaluate(a, n).m == F.evaluate(parse_slice_word(lhs), n).m);
            CHECK(F.evaluate(b, n).m == F.evaluate(parse_slice_word(rhs), n).m);
        }
        bool same = F.evaluate(parse_slice_word(lhs), 1).m == F.evaluate(parse_slice_word(rhs), 1).m;
        CHECK(same == (w.d == 1));
        CHECK((a == b) == (w.d == 1));
    }
}
