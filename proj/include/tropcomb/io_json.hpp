#ifndef TROPCOMB_IO_JSON_HPP
#define TROPCOMB_IO_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tropcomb/fan.hpp"
#include "tropcomb/groebner.hpp"
#include "tropcomb/hypersimplex.hpp"
#include "tropcomb/ideal.hpp"
#include "tropcomb/laurent.hpp"
#include "tropcomb/laurent_matrix.hpp"
#include "tropcomb/lp.hpp"
#include "tropcomb/pluecker.hpp"
#include "tropcomb/refinement.hpp"
#include "tropcomb/subdivision.hpp"
#include "tropcomb/trees.hpp"

namespace tropcomb {

using Json = nlohmann::json;

// Rationals travel as canonical strings ("p" or "p/q"); integer JSON numbers
// are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const Json& j);

// {vars: [...], terms: [{coeff, exps}]}; vars may be omitted where the ring
// is implied (ideal generators).
Json polynomial_to_json(const Polynomial& f, const std::vector<std::string>& vars);
Polynomial polynomial_from_json(const Json& j, int expected_nvars = -1);

struct ParsedIdeal {
    Ideal ideal;
    std::vector<std::string> vars;
};
// {ring: {vars: [...]}, generators: [poly...]}
Json ideal_to_json(const Ideal& I, const std::vector<std::string>& vars);
ParsedIdeal ideal_from_json(const Json& j);

// {dim, equalities: [[rat]], inequalities: [[rat]]}
Json cone_to_json(const ConeH& c);
ConeH cone_from_json(const Json& j);

Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json support_report_to_json(const SupportReport& r);

Json lp_to_json(const LinearProgram& p);
LinearProgram lp_from_json(const Json& j);
Json lp_solution_to_json(const LpSolution& s, const LinearProgram& p);

// {r, n, values: [{subset: [..], value: rat}]}
Json lift_to_json(const LiftFunction& lift);
LiftFunction lift_from_json(const Json& j);

// {r, n, cells: [[subset...]]}
Json subdivision_to_json(const MatroidSubdivision& s);
MatroidSubdivision subdivision_from_json(const Json& j);

// [{exp, coeff}]
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {r, n, entries: [[laurent...]]}
Json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Json& j);

// {leaves, edges: [{u, v, length}]}
Json tree_to_json(const PhyloTree& t);
PhyloTree tree_from_json(const Json& j);

Json certificate_to_json(const RefinementCertificate& c, const PlueckerRing& ring);

} // namespace tropcomb

#endif
