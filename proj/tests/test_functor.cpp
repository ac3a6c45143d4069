#include "diagram_util.hpp"

#include "heis/centralizer.hpp"
#include "heis/errors.hpp"
#include "heis/functor.hpp"
#include "heis/verify.hpp"

#include <doctest.h>

#include <random>

using namespace heis;
using namespace heis::test;

namespace {

std::vector<CycloElement> generators(HeckeTower& H, int n)
{
    std::vector<CycloElement> g;
    for (int i = 1; i <= n; ++i)
        g.push_back(H.x(n, i));
    for (int i = 1; i < n; ++i)
        g.push_back(H.s(n, i));
    return g;
}

// M commutes with the outer left and right actions
bool is_bimodule_map(FunctorAction& F, const LinearMap& f)
{
    HeckeTower& H = F.hecke();
    if (f.src.zero || f.tgt.zero)
        return true;
    for (const auto& a : generators(H, f.src.labels[0]))
        if (f.m * F.left_action(f.src, a) != F.left_action(f.tgt, a) * f.m)
            return false;
    for (const auto& a : generators(H, f.src.n))
        if (f.m * F.right_action(f.src, a) != F.right_action(f.tgt, a) * f.m)
            return false;
    return true;
}

int pbw_degree(HeckeTower& H, const CycloElement& a)
{
    int deg = -1;
    for (const auto& [idx, q] : a.v) {
        int e = 0;
        for (int x : H.key(a.n, idx).e)
            e += x;
        deg = std::max(deg, e);
    }
    return deg;
}

} // namespace

TEST_CASE("bimodule spaces")
{
    HeckeTower H(w01());
    FunctorAction F(H);
    CHECK(F.space("+", 0).dim == 2);
    CHECK(F.space("-+", 1).dim == 8);
    CHECK(F.space("-", 0).zero);
    CHECK(F.space("-", 0).dim == 0);
    CHECK(F.space("", 2).dim == 8);
    CHECK(F.space("+", 1).dim == 8);
    CHECK(F.space("-", 2).dim == 8);
    CHECK(F.space("--", 1).zero);
    for (int n = 0; n <= 2; ++n)
        CHECK(F.space("", n).dim == H.dim(n));
    HeckeTower small(w01(), 4);
    FunctorAction G(small);
    CHECK_THROWS_AS(G.evaluate(parse_slice_word("U * U"), 1), resource_error);
}

TEST_CASE("elementary maps")
{
    HeckeTower H(w01());
    FunctorAction F(H);
    LinearMap dot = F.elementary({Tok::DOT_UP}, "+", 0, 0);
    CHECK(dot.m.rows == 2);
    REQUIRE(dot.m.ncols() == 2);
    CHECK(dot.m.cols[0] == SparseVec{{1, 1}});
    CHECK(dot.m.cols[1] == SparseVec{{1, 1}});

    LinearMap unit = F.elementary({Tok::CUP_CCW}, "", 0, 0);
    REQUIRE(unit.m.ncols() == 1);
    CHECK(unit.m.cols[0] == SparseVec{{0, 1}});

    LinearMap trace = F.elementary({Tok::CAP_CCW}, "-+", 0, 0);
    CHECK(trace.m.rows == 1);
    REQUIRE(trace.m.ncols() == 2);
    CHECK(trace.m.cols[0].empty());
    CHECK(trace.m.cols[1] == SparseVec{{0, 1}});

    CHECK_THROWS_AS(F.elementary({Tok::CAP_CW}, "-+", 0, 0), input_error);
    CHECK_THROWS_AS(F.elementary({Tok::DOT_UP}, "+", 1, 0), input_error);
}

TEST_CASE("evaluation examples")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int n = 0; n <= 2; ++n) {
            LinearMap one = F.evaluate(parse_slice_word(ccw_bubble(w.d - 1)), n);
            CHECK(one.m == Matrix::identity(static_cast<int>(H.dim(n))));
            LinearMap curl = F.evaluate(parse_slice_word("CUPCCW * U ; D * XUU ; CAPCCW * U"), n);
            CHECK(curl.m.is_zero());
        }
    }
    HeckeTower H(w01());
    FunctorAction F(H);
    LinearMap dot = F.evaluate(parse_slice_word("PU"), 1);
    for (int j = 0; j < H.dim(2); ++j)
        CHECK(dot.m.cols[j] == H.mul(H.basis(2, j), H.x(2, 2)).v);
    // negative regions give maps between zero spaces
    LinearMap z = F.evaluate(parse_slice_word("PD"), 0);
    CHECK(z.src.zero);
    CHECK(z.m.ncols() == 0);
}

TEST_CASE("evaluated words are bimodule maps")
{
    std::mt19937_64 rng(5);
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (const SignSeq& dom : {"+", "-", "+-", "-+", "++"})
            for (int trial = 0; trial < 4; ++trial) {
                std::string text = random_word(rng, dom, 5, 3);
                if (text.empty())
                    continue;
                for (int n = 0; n <= 2; ++n) {
                    LinearMap f = F.evaluate(parse_slice_word(text), n);
                    CHECK_MESSAGE(is_bimodule_map(F, f), text << " at n=" << n);
                }
            }
    }
}

TEST_CASE("functoriality on random composable pairs")
{
    std::mt19937_64 rng(9);
    for (const Weight& w : {w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        std::vector<SignSeq> doms{"+", "-", "+-", "-+", "++", ""};
        int pairs = 0;
        for (int trial = 0; pairs < 100 && trial < 1000; ++trial) {
            std::string a = random_word(rng, doms[trial % doms.size()], 4, 4);
            if (a.empty())
                continue;
            SliceWord wa = parse_slice_word(a);
            std::string b = random_word(rng, wa.cod, 4, 4);
            if (b.empty())
                continue;
            SliceWord wb = parse_slice_word(b);
            ++pairs;
            for (int n = 0; n <= 1; ++n)
                CHECK(F.evaluate(stack(wa, wb), n).m == F.evaluate(wb, n).m * F.evaluate(wa, n).m);
        }
        CHECK(pairs == 100);
    }
}

TEST_CASE("central substitution")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int n = 0; n <= 2; ++n) {
            CentralSubstitution& cs = F.substitution(n);
            for (int k = 1; k <= 3; ++k) {
                const CycloElement& z = cs.image(k);
                CHECK(z == H.trace(H.x(n + 1, n + 1, w.d + k)));
                for (const auto& g : generators(H, n))
                    CHECK(H.mul(z, g) == H.mul(g, z));
                // the same element from the closed diagram
                LinearMap b = F.evaluate(parse_slice_word(ccw_bubble(w.d + k)), n);
                CHECK(b.m.apply(H.one(n).v) == z.v);
                // right multiplication on the last factor equals the left one
                for (const SignSeq& s : {"+", "-+", "+-"}) {
                    BimoduleSpace V = F.space(s, n);
                    if (V.zero)
                        continue;
                    Matrix R = F.right_mult_last(V, z);
                    CHECK(R == F.right_action(V, z));
                }
            }
            CHECK(cs.value(PiPoly::var(1) * PiPoly::var(2) + PiPoly(3)) ==
                  H.mul(cs.image(1), cs.image(2)) + H.scalar(n, 3));
        }
    }
}

TEST_CASE("zigzags are identities")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int n = 0; n <= 2; ++n) {
            for (const char* z : {"CUPCW * U ; U * CAPCCW", "U * CUPCCW ; CAPCW * U"})
                CHECK(F.evaluate(parse_slice_word(z), n).m == F.identity("+", n).m);
            for (const char* z : {"CUPCCW * D ; D * CAPCW", "D * CUPCW ; CAPCCW * D"})
                CHECK(F.evaluate(parse_slice_word(z), n).m == F.identity("-", n).m);
        }
    }
}

TEST_CASE("local relation suite")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int n = 0; n <= 2; ++n)
            for (const auto& r : verify_local_relations(F, n)) {
                CHECK_MESSAGE(r.pass, r.relation_id << " n=" << n << " " << w.str());
                CHECK(r.lhs_hash == r.rhs_hash);
            }
    }
    HeckeTower H(w012());
    FunctorAction F(H);
    for (int n = 0; n <= 1; ++n)
        for (const auto& r : verify_local_relations(F, n))
            CHECK_MESSAGE(r.pass, r.relation_id << " n=" << n);
}

TEST_CASE("negative controls break the relation suite")
{
    for (const Weight& w : {w0(), w01()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        auto failures = [&](Perturbation p) {
            int bad = 0;
            for (int n = 0; n <= 2; ++n)
                for (const auto& r : verify_local_relations(F, n, p))
                    bad += !r.pass;
            return bad;
        };
        CHECK(failures({}) == 0);
        CHECK(failures({Q(1), Q(0)}) > 0);
        CHECK(failures({Q(0), Q(1)}) > 0);
    }
}

TEST_CASE("reduction agrees with the functor")
{
    std::mt19937_64 rng(21);
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        Reducer R(w);
        for (const SignSeq& dom : {"", "+", "+-", "-+"})
            for (int trial = 0; trial < 8; ++trial) {
                std::string text = random_word(rng, dom, 6, 4);
                if (text.empty())
                    continue;
                SliceWord sw = parse_slice_word(text);
                Morphism m = R.reduce(sw);
                for (int n = 0; n <= 2; ++n)
                    CHECK_MESSAGE(F.evaluate(sw, n).m == F.evaluate(m, n).m, text << " n=" << n);
            }
    }
}

TEST_CASE("power sums")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int n = 0; n <= 2; ++n)
            for (int t = 3; t <= 4; ++t) {
                CheckRecord r = power_sum_leading(F, t, n);
                CHECK_MESSAGE(r.pass, r.detail << " t=" << t << " n=" << n << " " << w.str());
            }
    }
    CHECK_THROWS_AS(
        [] {
            HeckeTower H(w0());
            FunctorAction F(H);
            power_sum_leading(F, 2, 1);
        }(),
        input_error);

    // the uncorrected leading term p_{t-2} leaves a difference of degree t-2
    HeckeTower H(w01());
    FunctorAction F(H);
    int t = 3, n = 1;
    Morphism m = Reducer(w01()).reduce(ccw_bubble(H.d() - 1 + t));
    CycloElement z{n, F.evaluate(m, n).m.apply(H.one(n).v)};
    CHECK(pbw_degree(H, z - H.x(n, 1, t - 2)) == t - 2);
    CHECK(pbw_degree(H, z - Q(t - 1) * H.x(n, 1, t - 2)) <= t - 3);
    // bubble with 4 dots at n = 2
    CycloElement z2{2, F.evaluate(parse_slice_word(ccw_bubble(4)), 2).m.apply(H.one(2).v)};
    CHECK(z2 == H.scalar(2, 3) + Q(2) * H.x(2, 1) + Q(2) * H.x(2, 2));
}

TEST_CASE("centralizer fullness")
{
    for (const Weight& w : {w0(), w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {0, 2}, {1, 1}, {2, 1}, {1, 2}}) {
            FullnessReport r = centralizer_fullness_check(F, n, k);
            CHECK_MESSAGE(r.pass(), "n=" << n << " k=" << k << " " << w.str());
            CHECK(r.commutant_dim == r.image_dim);
            CHECK(r.commutant_dim == r.generated_dim);
        }
    }
    HeckeTower H(w01());
    FunctorAction F(H);
    // the commutant of scalars is the whole algebra, and End((2)_2) is the center
    CHECK(centralizer_fullness_check(F, 0, 2).commutant_dim == static_cast<size_t>(H.dim(2)));
    CHECK(centralizer_fullness_check(F, 2, 0).commutant_dim == 5);
}

TEST_CASE("psi_m spot faithfulness")
{
    std::mt19937_64 rng(13);
    for (const Weight& w : {w01(), w00()}) {
        HeckeTower H(w);
        FunctorAction F(H);
        for (int m = 1; m <= 2; ++m) {
            SignSeq s(m, '+');
            auto basis = basis_enumerate(s, s, 2);
            for (int trial = 0; trial < 10; ++trial) {
                Morphism f = Morphism::zero(s, s);
                for (int t = 0; t < 3; ++t) {
                    PiPoly c(Q(static_cast<long>(rng() % 5) - 2));
                    if (rng() % 2)
                        c *= PiPoly::var(1 + static_cast<int>(rng() % 2));
                    f.add(basis[rng() % basis.size()], c);
                }
                if (f.is_zero())
                    continue;
                bool nonzero = false;
                for (int n = 0; n <= 3 && !nonzero; ++n)
                    nonzero = !F.evaluate(f, n).m.is_zero();
                CHECK_MESSAGE(nonzero, f.str());
            }
        }
    }
}
