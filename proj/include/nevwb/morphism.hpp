#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nevwb/poly_io.hpp"
#include "nevwb/roots.hpp"

namespace nevwb {

using cplx = std::complex<double>;

// A point of P^2 with a certified coordinate enclosure; coordinates are normalized so that
// x[chart] == 1.
struct ProjPoint {
    std::array<cplx, 3> x{};
    double radius = 0.0;
    int chart = 0;
    std::optional<std::array<GaussRat, 3>> exact;

    std::string to_string() const;
};

// value of p at the point, with a bound on |p(true point) - value|
struct BoundedValue {
    cplx value;
    double bound = 0.0;
    bool exact = false;
    bool certainly_nonzero() const { return exact ? value != cplx(0.0) : std::abs(value) > bound; }
};
BoundedValue eval_at(const SparsePoly& p, const ProjPoint& P);

// Common points of two plane curves in P^2. Throws NonProperIntersection on a common component.
std::vector<ProjPoint> intersection_points(const SparsePoly& F, const SparsePoly& G);

struct PowerMorphism {
    std::array<SparsePoly, 3> F{SparsePoly(3), SparsePoly(3), SparsePoly(3)};
    std::array<int, 3> d{}, a{};
    int lcm = 1;

    // F_i nonzero homogeneous in 3 variables; with check_finite, also no point where all three vanish
    static PowerMorphism make(const SparsePoly& F1, const SparsePoly& F2, const SparsePoly& F3, bool check_finite = true);
    // the components F_i^{a_i}
    std::array<SparsePoly, 3> components() const;
    // P(F_1^{a_1}, F_2^{a_2}, F_3^{a_3})
    SparsePoly pullback(const SparsePoly& P) const;
};

SparsePoly jacobian_det(const PowerMorphism& m, bool reduced);

struct EulerReport {
    bool euler = true;        // sum_j x_j dF_i/dx_j == d_i F_i for each i
    bool determinant = true;  // x0 * G == det(d_i F_i | dF_i/dx1 | dF_i/dx2)
    bool holds() const { return euler && determinant; }
};
EulerReport euler_identity_check(const PowerMorphism& m);

enum class Decision { Yes, No, Undecided };
const char* decision_name(Decision d);

struct GeneralPositionViolation {
    std::size_t i, j, k;  // curve k passes through a point of curve i and curve j
    ProjPoint point;
    bool certified = false;  // exact zero; otherwise |C_k(P)| is within the enclosure bound
};
struct GeneralPositionReport {
    std::size_t points_checked = 0;
    std::vector<GeneralPositionViolation> violations;
    bool in_general_position() const { return violations.empty(); }
};
GeneralPositionReport general_position_check(const std::vector<SparsePoly>& curves);

struct TransversalityEntry {
    ProjPoint point;
    BoundedValue minor;
    Decision transversal = Decision::Undecided;
};
struct TransversalityReport {
    std::vector<TransversalityEntry> points;
    bool transversal() const;
};
TransversalityReport transversality_check(const SparsePoly& F1, const SparsePoly& F2);

struct PushforwardResult {
    SparsePoly A{3};  // in y0, y1, y2
    bool exponent_reduced = false;  // the eliminant was a proper power (or had repeated factors)
    int eliminant_degree = 0;
    int vanishing_order = 0;  // largest k with Z^k dividing A o pi
};
PushforwardResult pushforward_curve(const PowerMorphism& m, const SparsePoly& Z);

// largest k with Z^k | P (P nonzero)
int vanishing_order(const SparsePoly& P, const SparsePoly& Z);

json morphism_to_json(const PowerMorphism& m);
json point_to_json(const ProjPoint& p);

}  // namespace nevwb
