#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nevwb/sparse_poly.hpp"

namespace nevwb {

// Exact division; nullopt when q does not divide p.
std::optional<SparsePoly> try_divide(const SparsePoly& p, const SparsePoly& q);
// Exact division; throws InternalContradiction on a nonzero remainder.
SparsePoly divide_exact(const SparsePoly& p, const SparsePoly& q);

SparsePoly pseudo_remainder(const SparsePoly& a, const SparsePoly& b, std::size_t v);

using PolyMatrix = std::vector<std::vector<SparsePoly>>;
// Fraction-free (Bareiss) determinant over Q(i)[vars].
SparsePoly determinant(PolyMatrix m);

// Sylvester matrix of f and g in variable v, rows of f first.
PolyMatrix sylvester_matrix(const SparsePoly& f, const SparsePoly& g, std::size_t v);
SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, std::size_t v);

// Normalized gcd over Q(i) (lex-leading coefficient 1). gcd(0,0) = 0.
SparsePoly gcd(const SparsePoly& f, const SparsePoly& g);
// gcd primitive with respect to main_var, via subresultant PRS in main_var.
SparsePoly gcd_poly(const SparsePoly& f, const SparsePoly& g, std::size_t main_var);
SparsePoly content_in(const SparsePoly& p, std::size_t v);
SparsePoly primitive_part_in(const SparsePoly& p, std::size_t v);

struct SqfFactor {
    SparsePoly factor;
    int multiplicity;
};
struct SqfDecomposition {
    GaussRat unit;
    std::vector<SqfFactor> factors;  // sorted by multiplicity
    SparsePoly expand() const;
};
SqfDecomposition squarefree_decompose(const SparsePoly& f);
bool is_squarefree(const SparsePoly& f);
SparsePoly radical(const SparsePoly& f);  // product of the squarefree factors, monic

// Refine a list of nonzero polynomials into a pairwise coprime, squarefree base.
// exponents[i][j] = multiplicity of base[j] in inputs[i].
struct CoprimeBase {
    std::vector<SparsePoly> base;
    std::vector<std::vector<int>> exponents;
};
CoprimeBase coprime_base(const std::vector<SparsePoly>& inputs);

}  // namespace nevwb
