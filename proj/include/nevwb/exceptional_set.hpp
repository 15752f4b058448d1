#pragma once

#include <array>
#include <string>
#include <vector>

#include "nevwb/laurent.hpp"
#include "nevwb/mero.hpp"
#include "nevwb/poly_io.hpp"
#include "nevwb/roots.hpp"

namespace nevwb {

struct NormalizedPair {
    int n1 = 0, n2 = 1;
    int a = 0, b = 1;
    // transform record: original (m1, m2) = reduced_by * sign * (swapped ? (n2, n1) : (n1, n2))
    int reduced_by = 1;
    bool sign_flipped = false;
    bool swapped = false;

    std::array<int, 2> original() const;
};

NormalizedPair normalize_pair(int n1, int n2);

// Variable 0 of B is Lambda, variable 1 is T.
struct SubstitutionResult {
    NormalizedPair pair;
    int M1 = 0, M2 = 0;
    SparsePoly G1{2};  // G(1, X, Y) with X -> variable 0, Y -> variable 1
    SparsePoly B{2};
    LaurentBivar B_Lambda;  // Lambda^M2 B, Laurent in Lambda

    // T^M1 Lambda^M2 B(Lambda, T) == G1(Lambda^a T^n2, Lambda^b T^-n1)
    bool round_trip() const;
};

// Hypotheses on G: three variables, homogeneous, nonconstant, squarefree, no monomial factor,
// G(1,0,0), G(0,1,0), G(0,0,1) all nonzero. Throws InvalidInput naming the failed hypothesis.
void validate_curve_poly(const SparsePoly& G);

SubstitutionResult substitute(const SparsePoly& G, const NormalizedPair& pair);

// An algebraic number: a root of the squarefree polynomial `poly` isolated by `root`.
struct AlgebraicValue {
    SparsePoly poly{1};
    RootEnclosure root;

    bool exact() const { return root.exact.has_value(); }
    AlgebraicValue inverse() const;
    bool same_as(const AlgebraicValue& o) const;
    // does the constant c equal this number (exactly when c is a Gaussian rational)?
    bool matches(const GaussRat& c) const;
    bool matches_numeric(cplx c, double tol = 1e-9) const;
    std::string to_string() const;
};

struct BetaLoci {
    SparsePoly alpha_poly{1}, gamma_poly{1}, leading_poly{1};  // radicals with Lambda^k stripped; monic
    std::vector<AlgebraicValue> alphas, gammas, leading;
};

BetaLoci beta_loci(const SubstitutionResult& sub);

struct CurveProvenance {
    std::array<int, 3> chart{0, 1, 2};  // (dehomogenizing variable, X variable, Y variable)
    int n1 = 0, n2 = 0;
    std::string locus;  // coordinate | resultant | lambda-zero | leading-coefficient | top-form
    std::size_t root_index = 0;
};

struct CurveSpec {
    enum class Kind { CoordinateLine, Line, MonomialRelation };
    Kind kind = Kind::CoordinateLine;
    // CoordinateLine: exponents = unit vector of the vanishing coordinate.
    // Otherwise x^{v+} = beta * x^{v-} with v = exponents, sum zero, v- supported on a single variable
    // (the lower-indexed one for lines).
    std::array<int, 3> exponents{0, 0, 0};
    AlgebraicValue beta;
    std::vector<CurveProvenance> provenance;

    bool same_curve(const CurveSpec& o) const;
    std::string to_string() const;
    // exact equation when beta is a Gaussian rational
    std::optional<SparsePoly> equation() const;
};

std::vector<CurveSpec> delta_lines(const SparsePoly& G);

struct ExceptionalSet {
    std::vector<CurveSpec> curves;
    SparsePoly source_poly{3};
    int bound = 0;
};

ExceptionalSet build_W(const SparsePoly& G, int ell2);

struct WMatch {
    std::size_t index;
    bool exact;  // false when the constant ratio was compared numerically
};
std::vector<WMatch> member_of_W(const ExceptionalSet& W, const std::vector<MeroFn>& g);

json curve_to_json(const CurveSpec& c);
json exset_to_json(const ExceptionalSet& W);
json substitution_to_json(const SubstitutionResult& s);
json loci_to_json(const BetaLoci& l);

}  // namespace nevwb
