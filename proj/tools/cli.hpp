#pragma once

#include "heis/functor.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace heis::cli {

std::string format_morphism(const Morphism& m, bool json);
std::vector<std::string> basis_labels(FunctorAction& F, const BimoduleSpace& V);
std::string format_matrix(FunctorAction& F, const LinearMap& f, bool json);

// {"n": 2, "terms": [{"x": [1, 0], "w": [1, 0], "coeff": "3/2"}]}
nlohmann::json hecke_to_json(const HeckeTower& H, const CycloElement& a);
CycloElement hecke_from_json(HeckeTower& H, const nlohmann::json& j);

// pairs (basis diagram, bubble monomial) of degree <= max_degree
long basis_count(const SignSeq& dom, const SignSeq& cod, int max_degree, const Weight& w);
// PBW pairs (x^a w, bubble monomial) of H_m (x) Pi with degree <= max_degree
long hecke_pi_count(int m, int max_degree, const Weight& w);

// exit codes: 0 ok, 1 a check failed, 2 bad input or resource cap
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heis::cli
