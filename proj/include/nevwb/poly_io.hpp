#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nevwb/laurent.hpp"
#include "nevwb/roots.hpp"
#include "nevwb/sparse_poly.hpp"

namespace nevwb {

using json = nlohmann::json;

json gauss_to_json(const GaussRat& c);  // {"re": "p/q", "im": "r/s"}
GaussRat gauss_from_json(const json& j);

// {"vars": n, "terms": [{"exp": [...], "re": "p/q", "im": "r/s"}]}
// Also accepted on input: {"vars": n, "text": "x0^2 + 1/2*x1", "names": [...]}.
json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j);

json laurent_to_json(const LaurentBivar& p);
LaurentBivar laurent_from_json(const json& j);

json roots_to_json(const AlgebraicRoots& r);

// Infix polynomial text. Variables are names[k]; defaults x0..x{n-1}.
// Grammar: + - * / ^, parentheses, rationals, the imaginary unit i.
SparsePoly parse_poly(const std::string& text, std::size_t nvars, const std::vector<std::string>& names = {});

}  // namespace nevwb
