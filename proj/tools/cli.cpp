#include "cli.hpp"

#include "heis/errors.hpp"
#include "heis/karoubi.hpp"
#include "heis/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace heis::cli {

std::string format_morphism(const Morphism& m, bool json)
{
    if (json)
        return to_json(m).dump();
    if (m.is_zero())
        return "0";
    std::string s;
    for (const auto& [b, c] : m.terms) {
        if (!s.empty())
            s += "\n";
        std::string match, dots;
        for (size_t i = 0; i < b.strands.size(); ++i) {
            match += (i ? " " : "") + b.strands[i].first.str() + "->" + b.strands[i].second.str();
            dots += (i ? "," : "") + std::to_string(b.dots[i]);
        }
        s += (match.empty() ? std::string("(empty)") : match) + "  dots [" + dots + "]  coeff " + c.str();
    }
    return s;
}

std::vector<std::string> basis_labels(FunctorAction& F, const BimoduleSpace& V)
{
    std::vector<std::string> out;
    HeckeTower& H = F.hecke();
    for (long j = 0; j < V.dim; ++j) {
        auto p = F.basis_tensor(V, j);
        std::string s = H.str(p[0]);
        for (size_t i = 1; i + 1 < p.size(); ++i)
            if (V.label_count[i] > 0)
                s += " (x) " + H.str(p[i]);
        out.push_back(s);
    }
    return out;
}

std::string format_matrix(FunctorAction& F, const LinearMap& f, bool json)
{
    const Matrix& M = f.m;
    auto entry = [&](int i, int j) {
        auto it = M.cols[j].find(i);
        return it == M.cols[j].end() ? std::string("0") : to_string(it->second);
    };
    auto src = basis_labels(F, f.src), tgt = basis_labels(F, f.tgt);
    if (json) {
        nlohmann::json j;
        j["src_basis"] = src;
        j["tgt_basis"] = tgt;
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < M.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < M.ncols(); ++c)
                row.push_back(entry(i, c));
            rows.push_back(row);
        }
        j["matrix"] = rows;
        return j.dump();
    }
    std::string s;
    auto join = [](const std::vector<std::string>& v) {
        std::string r;
        for (size_t i = 0; i < v.size(); ++i)
            r += (i ? ", " : "") + v[i];
        return r;
    };
    if (!src.empty() || !tgt.empty())
        s += "src: " + join(src) + "\ntgt: " + join(tgt) + "\n";
    s += "[";
    for (int i = 0; i < M.rows && M.ncols() > 0; ++i) {
        s += i ? ",[" : "[";
        for (int c = 0; c < M.ncols(); ++c)
            s += (c ? "," : "") + entry(i, c);
        s += "]";
    }
    return s + "]";
}

nlohmann::json hecke_to_json(const HeckeTower& H, const CycloElement& a)
{
    nlohmann::json j;
    j["n"] = a.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& [idx, c] : a.v) {
        PbwKey k = H.key(a.n, idx);
        j["terms"].push_back({{"x", k.e}, {"w", k.w.w}, {"coeff", to_string(c)}});
    }
    return j;
}

CycloElement hecke_from_json(HeckeTower& H, const nlohmann::json& j)
{
    try {
        int n = j.at("n").get<int>();
        CycloElement a = H.zero(n);
        for (const auto& t : j.at("terms")) {
            PbwKey k{t.at("x").get<std::vector<int>>(), Perm(t.at("w").get<std::vector<int>>())};
            if (static_cast<int>(k.e.size()) != n || k.w.rank() != n)
                throw input_error("Hecke term of the wrong rank");
            for (int e : k.e)
                if (e < 0 || e >= H.d())
                    throw input_error("Hecke exponent outside 0..d-1");
            add_term(a.v, H.index(k), parse_rational(t.at("coeff").get<std::string>()));
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad Hecke JSON: ") + e.what());
    }
}

namespace {

// monomials in y_1, y_2, ... (y_k of degree k+1) of degree at most t
long pi_monomials(int t)
{
    if (t < 0)
        return 0;
    // exact[s]: partitions of s into parts >= 2
    std::vector<long> exact(t + 1, 0);
    exact[0] = 1;
    for (int part = 2; part <= t; ++part)
        for (int s = part; s <= t; ++s)
            exact[s] += exact[s - part];
    long total = 0;
    for (long e : exact)
        total += e;
    return total;
}

} // namespace

long basis_count(const SignSeq& dom, const SignSeq& cod, int max_degree, const Weight& w)
{
    int strands = static_cast<int>(dom.size() + cod.size()) / 2;
    long count = 0;
    for (const auto& b : basis_enumerate(dom, cod, max_degree + (w.d - 1) * strands)) {
        int deg = degree(b, w);
        if (deg <= max_degree)
            count += pi_monomials(max_degree - deg);
    }
    return count;
}

long hecke_pi_count(int m, int max_degree, const Weight&)
{
    long perms = 1;
    for (int i = 2; i <= m; ++i)
        perms *= i;
    long count = 0;
    for (int j = 0; j <= max_degree; ++j) {
        // exponent vectors in N^m with sum j
        Q c = m == 0 ? Q(j == 0 ? 1 : 0) : binomial(j + m - 1, m - 1);
        count += perms * c.get_num().get_si() * pi_monomials(max_degree - j);
    }
    return count;
}

namespace {

struct Common {
    std::string weight;
    std::string format;
    long max_dim = 2000;
    long fuel = 1000000;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* sc, Common& c)
{
    sc->add_option("--weight", c.weight, "weight as residue:multiplicity[,...]")->required();
    sc->add_option("--format", c.format, "output mode, json by default for decompose and verify")->check(CLI::IsMember({"human", "json"}));
    sc->add_option("--max-dim", c.max_dim, "dimension cap per Hecke algebra");
    sc->add_option("--fuel", c.fuel, "rewrite step budget per reduction");
    sc->add_option("--seed", c.seed, "seed for randomized suites");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Diagrammatic calculus for the categorified Heisenberg action on cyclotomic Hecke algebras"};
    app.require_subcommand(1);
    Common c;

    auto* red = app.add_subcommand("reduce", "reduce a slice word to basis diagrams");
    std::string expr;
    int matrix_n = -1;
    add_common(red, c);
    red->add_option("--expr", expr, "slice word")->required();
    red->add_option("--matrix-n", matrix_n, "also print F_n of the word");

    auto* hk = app.add_subcommand("hecke", "arithmetic in H_n^lambda");
    int rank = 0, k_opt = 0;
    std::string op = "normal", lhs, rhs;
    add_common(hk, c);
    hk->add_option("--n", rank, "rank")->required();
    hk->add_option("--op", op, "operation")->check(CLI::IsMember({"normal", "mul", "trace", "dual-dot"}));
    hk->add_option("--lhs", lhs, "element, e.g. \"2*x1*s1 - s1\"");
    hk->add_option("--rhs", rhs, "second factor for mul");
    hk->add_option("--k", k_opt, "dot index for dual-dot");

    auto* dec = app.add_subcommand("decompose", "decompose the identity of Q_-^(n) Q_+^(m)");
    int dn = 1, dm = 1, cap = 5;
    add_common(dec, c);
    dec->add_option("--n", dn, "down symmetrizer size")->required();
    dec->add_option("--m", dm, "up symmetrizer size")->required();
    dec->add_option("--cap", cap, "largest symmetrizer allowed");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "relations";
    int max_rank = 2, count = 200;
    std::string pb = "0", pc = "0";
    add_common(ver, c);
    ver->add_option("--suite", suite, "suite")
        ->check(CLI::IsMember({"relations", "power-sums", "centralizer", "soundness", "all"}));
    ver->add_option("--max-rank", max_rank, "largest n");
    ver->add_option("--count", count, "random words per family (soundness)");
    ver->add_option("--perturb-bubble", pb, "added to the d-dot bubble value (negative control)");
    ver->add_option("--perturb-c1", pc, "added to c_1 (negative control)");

    auto* bc = app.add_subcommand("basis-count", "count basis diagrams times bubble monomials up to a degree");
    std::string dom, cod;
    int max_degree = 3;
    add_common(bc, c);
    bc->add_option("--dom", dom, "domain signs");
    bc->add_option("--cod", cod, "codomain signs");
    bc->add_option("--max-degree", max_degree, "degree bound");

    std::vector<std::string> storage{"heis"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (c.format.empty())
        c.format = dec->parsed() || ver->parsed() ? "json" : "human";
    bool json = c.format == "json";
    try {
        Weight w = Weight::parse(c.weight);
        ReduceOptions ro;
        ro.fuel = c.fuel;

        if (red->parsed()) {
            Reducer R(w);
            SliceWord sw = parse_slice_word(expr);
            Morphism m = R.reduce(sw, ro);
            out << format_morphism(m, json) << "\n";
            if (matrix_n >= 0) {
                HeckeTower H(w, c.max_dim);
                FunctorAction F(H);
                out << format_matrix(F, F.evaluate(sw, matrix_n), json) << "\n";
            }
            return 0;
        }

        if (hk->parsed()) {
            HeckeTower H(w, c.max_dim);
            auto parse = [&](const std::string& s, int n) {
                if (s.empty())
                    throw input_error("missing Hecke expression");
                return H.reduce(affine_normal_form(s, n));
            };
            CycloElement r;
            if (op == "normal")
                r = parse(lhs, rank);
            else if (op == "mul")
                r = H.mul(parse(lhs, rank), parse(rhs, rank));
            else if (op == "trace") {
                if (rank < 1)
                    throw input_error("trace needs n >= 1");
                r = H.trace(parse(lhs, rank));
            } else {
                if (k_opt < 0 || k_opt >= H.d())
                    throw input_error("dual-dot index outside 0..d-1");
                r = H.dual_dot(rank, k_opt);
            }
            out << (json ? hecke_to_json(H, r).dump() : H.str(r)) << "\n";
            return 0;
        }

        if (dec->parsed()) {
            Karoubi K(w, cap, ro);
            if (dn < 1 || dm < 1)
                throw input_error("decompose needs n, m >= 1");
            auto rep = K.decompose_identity(dn, dm);
            bool ok = rep.orthogonal && rep.complete;
            for (int k = 0; k <= std::min(dn, dm); ++k) {
                auto it = rep.multiplicities.find(k);
                int got = it == rep.multiplicities.end() ? 0 : it->second;
                if (Q(got) != binomial(w.d + k - 1, k))
                    ok = false;
            }
            if (json) {
                out << to_json(rep).dump() << "\n";
            } else {
                out << "orthogonal " << (rep.orthogonal ? "yes" : "no") << ", complete " << (rep.complete ? "yes" : "no")
                    << "\n";
                for (const auto& [k, m] : rep.multiplicities)
                    out << "k=" << k << ": " << m << "\n";
            }
            return ok ? 0 : 1;
        }

        if (ver->parsed()) {
            HeckeTower H(w, c.max_dim);
            FunctorAction F(H);
            Perturbation p{parse_rational(pb), parse_rational(pc)};
            std::vector<CheckRecord> recs;
            auto take = [&](std::vector<CheckRecord> v) {
                for (auto& r : v) {
                    if (json)
                        out << to_json(r).dump() << "\n";
                    else
                        out << (r.pass ? "PASS " : "FAIL ") << r.suite << " " << r.relation_id << " "
                            << r.params.dump() << (r.detail.empty() ? "" : " " + r.detail) << "\n";
                    out.flush();
                    recs.push_back(std::move(r));
                }
            };
            bool all = suite == "all";
            if (all || suite == "relations")
                for (int n = 0; n <= max_rank; ++n)
                    take(verify_local_relations(F, n, p));
            if (all || suite == "power-sums")
                for (int n = 0; n <= max_rank; ++n)
                    for (int t = 3; t <= 4; ++t)
                        take({power_sum_leading(F, t, n)});
            if (all || suite == "centralizer")
                for (int n = 0; n <= max_rank; ++n)
                    for (int k = 0; n + k <= max_rank + 1; ++k) {
                        auto t0 = std::chrono::steady_clock::now();
                        FullnessReport fr = centralizer_fullness_check(F, n, k);
                        CheckRecord r;
                        r.suite = "centralizer";
                        r.params = {{"weight", w.str()}, {"n", n}, {"k", k}};
                        r.relation_id = "fullness";
                        r.pass = fr.pass();
                        r.detail = "commutant " + std::to_string(fr.commutant_dim) + ", image " +
                                   std::to_string(fr.image_dim) + ", generated " + std::to_string(fr.generated_dim);
                        r.elapsed_ms =
                            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                        take({r});
                    }
            if (suite == "soundness") {
                Reducer R(w);
                SoundnessOptions so;
                so.words_per_family = count;
                so.max_rank = max_rank;
                so.seed = c.seed;
                so.fuel = c.fuel;
                take(soundness_suite(F, R, so));
            }
            for (const auto& r : recs)
                if (!r.pass)
                    return 1;
            return 0;
        }

        if (bc->parsed()) {
            long diagrams = basis_count(dom, cod, max_degree, w);
            bool endo_up = dom == cod && dom.find('-') == std::string::npos;
            long hecke = endo_up ? hecke_pi_count(static_cast<int>(dom.size()), max_degree, w) : -1;
            if (json) {
                nlohmann::json j{{"dom", dom}, {"cod", cod}, {"max_degree", max_degree}, {"diagrams", diagrams}};
                if (endo_up)
                    j["hecke_pi"] = hecke;
                out << j.dump() << "\n";
            } else {
                out << diagrams << (endo_up ? " (H_m x Pi: " + std::to_string(hecke) + ")" : "") << "\n";
            }
            return endo_up && hecke != diagrams ? 1 : 0;
        }
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const reduction_failure& e) {
        err << "reduction failure: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace heis::cli
