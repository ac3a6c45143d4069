#include "heis/verify.hpp"

#include "heis/centralizer.hpp"
#include "heis/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

namespace heis {

nlohmann::json to_json(const CheckRecord& r)
{
    nlohmann::json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["relation_id"] = r.relation_id;
    j["pass"] = r.pass;
    j["lhs_hash"] = r.lhs_hash;
    j["rhs_hash"] = r.rhs_hash;
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

std::string matrix_hash(const Matrix& m)
{
    std::string text = std::to_string(m.rows) + "x" + std::to_string(m.ncols()) + ";";
    for (int j = 0; j < m.ncols(); ++j)
        for (const auto& [i, q] : m.cols[j])
            text += std::to_string(j) + "," + std::to_string(i) + "=" + to_string(q) + ";";
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

BasisDiagram diagram(const SignSeq& dom, const SignSeq& cod, std::vector<std::pair<std::string, std::string>> strands,
                     std::vector<int> dots)
{
    BasisDiagram b;
    b.dom = dom;
    b.cod = cod;
    std::vector<std::pair<std::pair<Endpoint, Endpoint>, int>> tmp;
    for (size_t i = 0; i < strands.size(); ++i)
        tmp.push_back({{Endpoint::parse(strands[i].first), Endpoint::parse(strands[i].second)}, dots[i]});
    std::sort(tmp.begin(), tmp.end());
    for (auto& [s, k] : tmp) {
        b.strands.push_back(s);
        b.dots.push_back(k);
    }
    return b;
}

struct Runner {
    FunctorAction& F;
    int n;
    nlohmann::json params;
    std::vector<CheckRecord> out;

    Matrix word(const std::string& text) { return F.evaluate(parse_slice_word(text), n).m; }

    void check(const std::string& id, const std::function<std::pair<Matrix, Matrix>()>& sides)
    {
        CheckRecord r;
        r.suite = "relations";
        r.params = params;
        r.relation_id = id;
        auto t0 = Clock::now();
        try {
            auto [lhs, rhs] = sides();
            r.lhs_hash = matrix_hash(lhs);
            r.rhs_hash = matrix_hash(rhs);
            r.pass = lhs == rhs;
        } catch (const resource_error& e) {
            r.detail = e.what();
        }
        r.elapsed_ms = ms_since(t0);
        out.push_back(std::move(r));
    }
};

} // namespace

std::vector<CheckRecord> verify_local_relations(FunctorAction& F, int n, const Perturbation& pert)
{
    const Weight& w = F.hecke().weight();
    int d = w.d;
    Runner R{F, n, {{"weight", w.str()}, {"n", n}}, {}};
    auto c = [&](int s) {
        PiPoly v = structure_scalar(s, w);
        if (s == 1)
            v += PiPoly(pert.c1);
        return v;
    };

    R.check("braid", [&] {
        return std::pair{R.word("XUU * U ; U * XUU ; XUU * U"), R.word("U * XUU ; XUU * U ; U * XUU")};
    });
    R.check("s_squared", [&] { return std::pair{R.word("XUU ; XUU"), R.word("U * U")}; });
    R.check("dot_slide_bottom_left", [&] {
        return std::pair{R.word("PU * U ; XUU") - R.word("XUU ; U * PU"), R.word("U * U")};
    });
    R.check("dot_slide_top_left", [&] {
        return std::pair{R.word("XUU ; PU * U") - R.word("U * PU ; XUU"), R.word("U * U")};
    });
    R.check("up_down_double_crossing", [&] { return std::pair{R.word("XDU ; XUD"), R.word("U * D")}; });
    R.check("down_up_double_crossing", [&] {
        // D*U = XUD;XDU + sum_j cup(j dots) o cap(j-dual dots)
        Morphism rhs = Morphism::zero("-+", "-+");
        rhs.add(diagram("-+", "-+", {{"b1", "t1"}, {"t0", "b0"}}, {0, 0}), PiPoly(1));
        for (int j = 0; j < d; ++j)
            for (int i = j; i < d; ++i)
                rhs.add(diagram("-+", "-+", {{"b1", "b0"}, {"t0", "t1"}}, {i - j, j}), -c(d - 1 - i));
        return std::pair{R.word("XUD ; XDU"), F.evaluate(rhs, n).m};
    });
    for (int j = 0; j <= d; ++j)
        R.check("ccw_bubble_" + std::to_string(j), [&] {
            std::string word = j == 0 ? "CUPCCW ; CAPCCW" : "CUPCCW ; D * PU^" + std::to_string(j) + " ; CAPCCW";
            Matrix lhs = R.word(word);
            Q v = j < d - 1 ? Q(0) : j == d - 1 ? Q(1) : w.residue_sum() + pert.bubble_d;
            return std::pair{lhs, v * Matrix::identity(lhs.rows)};
        });
    R.check("left_curl", [&] {
        Matrix lhs = R.word("CUPCCW * U ; D * XUU ; CAPCCW * U");
        return std::pair{lhs, Matrix::zero(lhs.rows, lhs.ncols())};
    });
    R.check("right_curl", [&] {
        Morphism rhs = Morphism::zero("+", "+");
        for (int j = 0; j <= d; ++j)
            rhs.add(diagram("+", "+", {{"b0", "t0"}}, {j}), c(d - j));
        return std::pair{R.word("U * CUPCW ; XUU * D ; U * CAPCW"), F.evaluate(rhs, n).m};
    });
    R.check("zigzag_up_left", [&] { return std::pair{R.word("CUPCW * U ; U * CAPCCW"), R.word("U")}; });
    R.check("zigzag_up_right", [&] { return std::pair{R.word("U * CUPCCW ; CAPCW * U"), R.word("U")}; });
    R.check("zigzag_down_left", [&] { return std::pair{R.word("CUPCCW * D ; D * CAPCW"), R.word("D")}; });
    R.check("zigzag_down_right", [&] { return std::pair{R.word("D * CUPCW ; CAPCCW * D"), R.word("D")}; });
    R.check("rotated_crossing_du", [&] {
        return std::pair{R.word("XDU"), R.word("CUPCCW * U * D ; D * XUU * D ; D * U * CAPCW")};
    });
    R.check("rotated_crossing_ud", [&] {
        return std::pair{R.word("XUD"), R.word("D * U * CUPCW ; D * XUU * D ; CAPCCW * U * D")};
    });
    R.check("rotated_crossing_dd", [&] {
        return std::pair{R.word("XDD"), R.word("CUPCCW * D * D ; D * CUPCCW * U * D * D ; D * D * XUU * D * D ; "
                                               "D * D * U * CAPCW * D ; D * D * CAPCW")};
    });
    return std::move(R.out);
}

CheckRecord power_sum_leading(FunctorAction& F, int t, int n)
{
    if (t < 3)
        throw input_error("power_sum_leading needs t >= 3");
    HeckeTower& H = F.hecke();
    int d = H.d();
    CheckRecord r;
    r.suite = "power_sums";
    r.params = {{"weight", H.weight().str()}, {"n", n}, {"t", t}};
    r.relation_id = "ccw_bubble_" + std::to_string(d - 1 + t);
    auto t0 = Clock::now();
    Matrix M = F.evaluate(parse_slice_word("CUPCCW ; D * PU^" + std::to_string(d - 1 + t) + " ; CAPCCW"), n).m;
    CycloElement one = H.one(n);
    CycloElement z{n, M.apply(one.v)};
    CycloElement p = H.zero(n);
    for (int i = 1; i <= n; ++i)
        p += H.x(n, i, t - 2);
    // leading coefficient from the bubble slide: the b = 0 term carries t-1
    p *= Q(t - 1);
    CycloElement diff = z - p;
    int deg = -1;
    for (const auto& [idx, q] : diff.v) {
        PbwKey k = H.key(n, idx);
        int e = 0;
        for (int a : k.e)
            e += a;
        deg = std::max(deg, e);
    }
    r.lhs_hash = matrix_hash(M);
    r.rhs_hash = matrix_hash(F.right_action(F.space("", n), p));
    // the evaluated bubble must itself act as multiplication by z
    bool mult = M == F.right_action(F.space("", n), z);
    r.pass = mult && deg <= t - 3;
    r.detail = "difference degree " + std::to_string(deg);
    r.elapsed_ms = ms_since(t0);
    return r;
}

FullnessReport centralizer_fullness_check(FunctorAction& F, int n, int k)
{
    HeckeTower& H = F.hecke();
    int m = n + k, d = H.d();
    FullnessReport rep;
    rep.n = n;
    rep.k = k;
    auto commutant = centralizer_basis(H, n, k);
    rep.commutant_dim = commutant.size();

    SignSeq ups(k, '+');
    auto slice = [&](int pos, const std::string& tok, int width) {
        std::string s;
        for (int i = 0; i < k;) {
            if (!s.empty())
                s += " * ";
            if (i == pos) {
                s += tok;
                i += width;
            } else {
                s += "U";
                ++i;
            }
        }
        return s;
    };
    BimoduleSpace V = F.space(ups, n);
    CycloElement one = H.one(m);
    auto element = [&](const Matrix& M) { return CycloElement{m, M.apply(one.v)}; };
    std::vector<CycloElement> gens;
    if (k > 0) {
        for (int i = 0; i + 1 < k; ++i)
            gens.push_back(element(F.evaluate(parse_slice_word(slice(i, "XUU", 2)), n).m));
        for (int i = 0; i < k; ++i)
            gens.push_back(element(F.evaluate(parse_slice_word(slice(i, "PU", 1)), n).m));
    }
    // y_j has leading term p_{j-1}; j <= n+1 reaches every power sum needed
    CentralSubstitution& cs = F.substitution(n);
    for (int j = 1; j <= n * d + 2; ++j)
        gens.push_back(element(F.right_mult_last(V, cs.value(PiPoly::var(j)))));
    auto image = generated_subalgebra(H, m, gens);
    rep.image_dim = image.size();

    std::vector<CycloElement> hk;
    for (int i = 1; i < k; ++i)
        hk.push_back(H.s(m, n + i));
    for (int i = 1; i <= k; ++i)
        hk.push_back(H.x(m, n + i));
    for (const auto& z : centralizer_basis(H, n, 0))
        hk.push_back(H.include(z, m));
    auto generated = generated_subalgebra(H, m, hk);
    rep.generated_dim = generated.size();

    rep.image_equal = same_span(vectors_of(image), vectors_of(commutant));
    rep.generated_equal = same_span(vectors_of(generated), vectors_of(commutant));
    return rep;
}

} // namespace heis

namespace heis {

std::string random_word(std::mt19937_64& rng, const SignSeq& dom, int len, int max_width)
{
    SignSeq sig = dom;
    std::string out;
    auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); };
    auto id = [](char c) { return std::string(c == '+' ? "U" : "D"); };
    for (int made = 0, tries = 0; made < len && tries < 50 * len; ++tries) {
        int w = static_cast<int>(sig.size());
        int kind = pick(4);
        std::vector<std::string> toks;
        SignSeq next;
        if (kind == 0 && w >= 2) {
            int p = pick(w - 1);
            for (int q = 0; q < w; ++q) {
                if (q == p) {
                    std::string a = sig.substr(p, 2);
                    toks.push_back(a == "++" ? "XUU" : a == "--" ? "XDD" : a == "+-" ? "XDU" : "XUD");
                    next += sig[p + 1];
                    next += sig[p];
                    ++q;
                } else {
                    toks.push_back(id(sig[q]));
                    next += sig[q];
                }
            }
        } else if (kind == 1 && w >= 2) {
            int p = pick(w - 1);
            if (sig[p] == sig[p + 1])
                continue;
            for (int q = 0; q < w; ++q) {
                if (q == p) {
                    toks.push_back(sig[p] == '+' ? "CAPCW" : "CAPCCW");
                    ++q;
                } else {
                    toks.push_back(id(sig[q]));
                    next += sig[q];
                }
            }
        } else if (kind == 2 && w + 2 <= max_width) {
            int at = pick(w + 1);
            bool ccw = rng() & 1;
            for (int q = 0; q <= w; ++q) {
                if (q == at) {
                    toks.push_back(ccw ? "CUPCCW" : "CUPCW");
                    next += ccw ? "-+" : "+-";
                }
                if (q < w) {
                    toks.push_back(id(sig[q]));
                    next += sig[q];
                }
            }
        } else if (kind == 3 && w > 0) {
            int p = pick(w);
            for (int q = 0; q < w; ++q) {
                if (q == p)
                    toks.push_back(std::string(sig[q] == '+' ? "PU^" : "PD^") + std::to_string(1 + pick(2)));
                else
                    toks.push_back(id(sig[q]));
                next += sig[q];
            }
        } else {
            continue;
        }
        std::string s;
        for (const auto& t : toks)
            s += (s.empty() ? "" : " * ") + t;
        out += (out.empty() ? "" : " ; ") + s;
        sig = next;
        ++made;
    }
    return out;
}

std::vector<WordFamily> default_families()
{
    return {{"closed", {""}},
            {"one_strand", {"+", "-"}},
            {"two_strands", {"+-", "-+", "++", "--"}},
            {"three_strands", {"++-", "+-+", "-+-", "+--"}}};
}

std::vector<CheckRecord> soundness_suite(FunctorAction& F, Reducer& R, const SoundnessOptions& opt,
                                         const std::vector<WordFamily>& families)
{
    std::vector<CheckRecord> out;
    std::mt19937_64 rng(opt.seed);
    const Weight& w = F.hecke().weight();
    for (const auto& fam : families) {
        for (int i = 0; i < opt.words_per_family;) {
            const SignSeq& dom = fam.domains[rng() % fam.domains.size()];
            std::string text = random_word(rng, dom, 1 + static_cast<int>(rng() % opt.max_len), opt.max_width);
            if (text.empty())
                continue;
            CheckRecord r;
            r.suite = "soundness";
            r.params = {{"weight", w.str()}, {"family", fam.name}, {"word", text}};
            r.relation_id = fam.name + "#" + std::to_string(i);
            ++i;
            auto t0 = Clock::now();
            SliceWord sw = parse_slice_word(text);
            ReduceOptions base;
            base.fuel = opt.fuel;
            try {
                Morphism m = R.reduce(sw, base);
                bool confluent = true;
                for (int s = 0; s < opt.randomized_runs && confluent; ++s) {
                    ReduceOptions o = base;
                    o.randomize = true;
                    o.seed = opt.seed * 1000003 + static_cast<std::uint64_t>(i) * 31 + s;
                    confluent = R.reduce(sw, o) == m;
                }
                bool oracle = true;
                int reached = -1;
                for (int n = 0; n <= opt.max_rank && oracle; ++n) {
                    try {
                        Matrix lhs = F.evaluate(sw, n).m;
                        Matrix rhs = F.evaluate(m, n).m;
                        oracle = lhs == rhs;
                        r.lhs_hash = matrix_hash(lhs);
                        r.rhs_hash = matrix_hash(rhs);
                        reached = n;
                        if (!oracle)
                            r.detail = "oracle mismatch at n=" + std::to_string(n);
                    } catch (const resource_error&) {
                        break;
                    }
                }
                if (reached < 0) {
                    oracle = false;
                    r.detail = "no rank fits the dimension cap";
                }
                if (!confluent)
                    r.detail = "randomized rule order gave a different normal form";
                r.pass = confluent && oracle;
                r.params["max_rank_checked"] = reached;
                r.params["terms"] = m.terms.size();
            } catch (const reduction_failure& e) {
                r.detail = std::string("reduction failure: ") + e.what();
            }
            r.elapsed_ms = ms_since(t0);
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace heis
