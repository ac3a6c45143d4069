#pragma once

#include "heis/diagram.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace heis {

struct KaroubiObject {
    SignSeq eps;
    Morphism e;
};

struct KaroubiMorphism {
    KaroubiObject src, tgt;
    Morphism f;
};

// b_1 <= ... <= b_l with entries in 0..d-1
struct DotTuple {
    std::vector<int> b;

    static DotTuple make(std::vector<int> b, int d);
    int length() const { return static_cast<int>(b.size()); }
    int total() const;
    // product of the factorials of the multiplicities
    long stabilizer() const;
    std::string str() const;
    auto operator<=>(const DotTuple&) const = default;
};

// all of B_l, lexicographic
std::vector<DotTuple> dot_tuples(int l, int d);

// rational group algebra of S_n; permutations in one-line form, 0-based,
// with (v w)(i) = v(w(i))
using GroupElement = std::map<std::vector<int>, Q>;

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement young_symmetrizer(const std::vector<int>& shape);

// w on n parallel strands: up strands run b_i -> t_{w(i)}, down strands t_i -> b_{w(i)}
Morphism permutation_diagram(const std::vector<int>& w, char orientation);
Morphism group_image(const GroupElement& g, int n, char orientation);

enum class Interchange { alpha, beta };

struct DecompositionReport {
    int n = 0, m = 0;
    std::string weight;
    int d = 0;
    std::vector<std::pair<DotTuple, Morphism>> idempotents;
    bool orthogonal = false, complete = false;
    std::map<int, int> multiplicities;
};

nlohmann::json to_json(const DecompositionReport& r);

class Karoubi {
public:
    explicit Karoubi(const Weight& w, int cap = 5, ReduceOptions opt = {});

    Reducer& reducer() { return R_; }
    const Weight& weight() const { return R_.weight(); }

    KaroubiObject symmetrizer(int n, char orientation);
    KaroubiObject young(const std::vector<int>& shape, char orientation);
    KaroubiObject tensor(const KaroubiObject& a, const KaroubiObject& b);
    KaroubiObject identity_object(const KaroubiObject& x) const { return x; }

    bool is_idempotent(const KaroubiObject& x);
    bool is_morphism(const KaroubiMorphism& f);
    Morphism compose(const Morphism& f, const Morphism& g) { return R_.compose(f, g, opt_); }
    KaroubiMorphism compose(const KaroubiMorphism& f, const KaroubiMorphism& g);

    // alpha_{b^vee}: Q_-^(n) Q_+^(m) -> Q_+^(m-l) Q_-^(n-l); beta_b the other way
    KaroubiMorphism build_interchange(int n, int m, const DotTuple& b, Interchange dir);
    // Q_s^(n) Q_s^(m) -> Q_s^(m) Q_s^(n) crossing the blocks
    KaroubiMorphism regroup(int n, int m, char orientation);

    // theta_c o beta_b = delta_{c,b} id for every pair, exactly
    std::map<DotTuple, KaroubiMorphism> theta_solve(int n, int m);
    DecompositionReport decompose_identity(int n, int m);

private:
    void check_cap(int n) const;
    Morphism reduce_sum(const SignSeq& dom, const SignSeq& cod, const std::vector<std::pair<Q, std::string>>& ws);
    // solve order: total dots descending, then lexicographic
    std::vector<DotTuple> solve_order(int n, int m) const;

    Reducer R_;
    int cap_;
    ReduceOptions opt_;
    std::map<std::pair<int, char>, KaroubiObject> sym_;
};

} // namespace heis
