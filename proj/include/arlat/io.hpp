#pragma once

#include "arlat/lattice.hpp"
#include "arlat/report.hpp"
#include "arlat/schemes.hpp"

namespace arlat {

// {"t": int, "d": int, "coeffs": [[[exponents], "num/den"], ...]},
// graded-lex order, rationals as decimal strings
json form_to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const json& j);

// {"t": int, "points": [{"coords": [...], "order": n}], "hypersurfaces":
// [form...], "lci_witness": [degrees]?}
json scheme_to_json(const SchemeSpec& s);
SchemeSpec scheme_from_json(const json& j);

// {"ambient_dim": N, "metric": "identity" | "l2_forms" | [["num/den"...]...],
// "basis": [[ints]]}; l2_forms carries "t" and "d"; basis is HNF-reduced
json lattice_to_json(const MetrizedLattice& l);
MetrizedLattice lattice_from_json(const json& j);

}  // namespace arlat
