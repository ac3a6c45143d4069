#pragma once

#include "heis/pipoly.hpp"
#include "heis/weight.hpp"
#include "heis/word.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace heis {

// bottom endpoints are numbered left to right, then top endpoints
struct Endpoint {
    bool top = false;
    int pos = 0;

    std::string str() const; // "b0", "t2"
    static Endpoint parse(const std::string& s);
    auto operator<=>(const Endpoint&) const = default;
};

struct BasisDiagram {
    SignSeq dom, cod;
    // (in-endpoint, out-endpoint), sorted by in-endpoint
    std::vector<std::pair<Endpoint, Endpoint>> strands;
    std::vector<int> dots; // per strand, next to the out-endpoint

    int total_dots() const;
    std::string str() const;
    auto operator<=>(const BasisDiagram&) const = default;
};

struct Morphism {
    SignSeq dom, cod;
    std::map<BasisDiagram, PiPoly> terms;

    static Morphism zero(const SignSeq& dom, const SignSeq& cod);
    void add(const BasisDiagram& b, const PiPoly& c);
    bool is_zero() const { return terms.empty(); }
    // coefficient of the unique diagram of an empty hom-space
    PiPoly scalar() const;
    Morphism& operator+=(const Morphism& o);
    Morphism& operator*=(const PiPoly& c);
    friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
    friend Morphism operator*(Morphism a, const PiPoly& c) { return a *= c; }
    bool operator==(const Morphism&) const = default;
    std::string str() const;
};

nlohmann::json to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j);

struct ReduceOptions {
    long fuel = 1000000;
    bool randomize = false;
    std::uint64_t seed = 0;
};

struct CanonCache;

// Rewrites diagrams over a fixed weight. One instance per thread; the
// instance caches canonical drawings.
class Reducer {
public:
    explicit Reducer(const Weight& w);
    ~Reducer();
    Reducer(Reducer&&) noexcept;
    Reducer& operator=(Reducer&&) noexcept;

    const Weight& weight() const { return w_; }

    Morphism reduce(const SliceWord& w, const ReduceOptions& opt = {});
    Morphism reduce(const std::string& text, const ReduceOptions& opt = {});
    // f after g
    Morphism compose(const Morphism& f, const Morphism& g, const ReduceOptions& opt = {});
    Morphism tensor(const Morphism& f, const Morphism& g, const ReduceOptions& opt = {});
    Morphism identity(const SignSeq& s) const;

    int filtration_degree(const Morphism& m) const;

private:
    Weight w_;
    std::unique_ptr<CanonCache> cache_;
};

// canonical drawing of b; bubbles for mono are appended on the right
SliceWord to_word(const BasisDiagram& b);
SliceWord to_word(const BasisDiagram& b, const PiMono& mono, const Weight& w);
// a Morphism as a sum of words with rational coefficients
std::vector<std::pair<Q, SliceWord>> to_words(const Morphism& m, const Weight& w);

// sum of dots plus (d-1) per clockwise cup minus (d-1) per counterclockwise cap
int degree(const BasisDiagram& b, const Weight& w);

std::vector<BasisDiagram> basis_enumerate(const SignSeq& dom, const SignSeq& cod, int dot_budget);

// every dot becomes dot - j; the result lives over w.shifted(j)
Morphism dot_shift_image(const Morphism& m, int j, const Weight& w);

inline PiPoly structure_scalars(int s, const Weight& w) { return structure_scalar(s, w); }

} // namespace heis
