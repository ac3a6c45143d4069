#pragma once

#include "heis/cyclo.hpp"
#include "heis/diagram.hpp"
#include "heis/linalg.hpp"
#include "heis/word.hpp"

#include <map>
#include <unordered_map>
#include <string>
#include <vector>

namespace heis {

// F_n(Q_eps): the tensor chain of induction/restriction bimodules, realized on
// the basis (PBW basis of the first factor) x (left-module basis labels of
// every later restriction factor). Induction factors are free of rank one
// over their left algebra and contribute no label.
struct BimoduleSpace {
    SignSeq signs;
    int n = 0;
    std::vector<int> labels; // labels[i] = region left of strand i; labels[k] = n
    bool zero = false;
    long first_dim = 0;
    std::vector<int> label_count; // per strand; 0 for strands without a label
    long dim = 0;

    std::string str() const;
};

struct LinearMap {
    BimoduleSpace src, tgt;
    Matrix m;
};

// Images of the bubble variables in Z(H_n^lambda): y_k -> tr_{n+1}(x_{n+1}^{d+k}).
class CentralSubstitution {
public:
    CentralSubstitution(HeckeTower& H, int n) : H_(H), n_(n) {}

    int n() const { return n_; }
    const CycloElement& image(int k);
    CycloElement value(const PiPoly& p);

private:
    HeckeTower& H_;
    int n_;
    std::map<int, CycloElement> img_;
};

class FunctorAction {
public:
    explicit FunctorAction(HeckeTower& H) : H_(H) {}

    HeckeTower& hecke() { return H_; }

    BimoduleSpace space(const SignSeq& s, int n) const;
    LinearMap identity(const SignSeq& s, int n) const;
    // single token at strand position pos of the domain sign sequence s
    LinearMap elementary(const Token& t, const SignSeq& s, int pos, int n);
    LinearMap evaluate(const SliceWord& w, int n);
    // basis diagrams through their canonical words, coefficients through substitution
    LinearMap evaluate(const Morphism& m, int n);
    CentralSubstitution& substitution(int n);

    // outer actions: left by an element of H_{labels[0]}, right by one of H_n
    Matrix left_action(const BimoduleSpace& V, const CycloElement& a);
    Matrix right_action(const BimoduleSpace& V, const CycloElement& a);
    // right multiplication on the last factor (used for central substitutions)
    Matrix right_mult_last(const BimoduleSpace& V, const CycloElement& z);

    // pure tensors: one algebra element per strand, plus a trailing H_n factor
    using Pure = std::vector<CycloElement>;
    Pure basis_tensor(const BimoduleSpace& V, long idx);
    SparseVec normalize(const BimoduleSpace& V, const Pure& p);

private:
    std::vector<std::pair<Q, Pure>> apply_token(const Token& t, const BimoduleSpace& V, int pos, const Pure& p);
    HeckeTower& H_;
    std::map<int, CentralSubstitution> subs_;
    // image columns of a token at a position of a sign sequence, per rank
    std::unordered_map<std::string, std::unordered_map<int, SparseVec>> columns_;
    std::map<std::pair<BasisDiagram, int>, Matrix> diagrams_;
};

} // namespace heis
