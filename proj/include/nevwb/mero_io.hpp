#pragma once

#include "nevwb/mero.hpp"
#include "nevwb/poly_io.hpp"

namespace nevwb {

// {"scalar": <gauss>, "factors": [{"poly": <poly>, "mult": k}], "exp": <poly>}
// Polynomials are univariate documents or infix text in z. Shorthands accepted on input:
//   "z^2 + 1"                      the polynomial itself
//   {"h": <poly>, "ell": k}        h^k
//   {"unit": <poly>}               e^Q
json mero_to_json(const MeroFn& f);
MeroFn mero_from_json(const json& j);

// {"sum": [<mero>, ...]} or any single MeroFn form.
MeroSum mero_sum_from_json(const json& j);

}  // namespace nevwb
