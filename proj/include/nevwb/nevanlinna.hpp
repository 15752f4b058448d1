#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "nevwb/mero.hpp"

namespace nevwb {

constexpr int kUntruncated = std::numeric_limits<int>::max();

enum class Target { Zero, Pole };

struct QuadOptions {
    double abs_tol = 1e-8;    // target error; larger estimates are flagged
    double fail_tol = 1e-4;   // relative error beyond which NonConvergence is thrown
    unsigned max_panels = 20000;  // refinement budget
};

struct QuadValue {
    double value = 0.0;
    double error = 0.0;
    bool flagged = false;
};

// (1/2pi) * integral over [0, 2pi] of g(theta); breakpoints are extra panel boundaries.
QuadValue circle_mean(const std::function<double(double)>& g, const QuadOptions& opt = {},
                      const std::vector<double>& breakpoints = {});
// Panel boundaries resolving the bumps of log|f| near divisor points close to the circle.
std::vector<double> feature_angles(const Divisor& d, double r);

struct RadiusGrid {
    double r_min = 1.0;
    double r_max = 1.0;
    std::vector<double> points;  // log-spaced, strictly increasing
    int quadrature_order = 31;
};

RadiusGrid make_grid(double r_min, double r_max, std::size_t count);
// Moves every point lying within rel_tol of a modulus outward by rel_step until clear.
RadiusGrid perturb_grid(RadiusGrid g, const std::vector<double>& moduli, double rel_tol = 1e-9, double rel_step = 1e-6);
bool grid_clear_of(const RadiusGrid& g, const std::vector<double>& moduli, double rel_tol = 1e-9);
double geometric_midpoint(const RadiusGrid& g);

// Counting functions from an explicit divisor (positive mult = zero, negative = pole).
double counting_from_divisor(const Divisor& d, Target t, double r, int trunc = kUntruncated, double rel_tol = 1e-9);

double counting_N(const MeroFn& f, Target t, double r, int trunc = kUntruncated);
QuadValue proximity_m(const MeroFn& f, double r, const QuadOptions& opt = {});
QuadValue proximity_m(const MeroSum& f, double r, const QuadOptions& opt = {});
// m(inf, r) + N(inf, r)
QuadValue characteristic_T(const MeroFn& f, double r, const QuadOptions& opt = {});
// Cartan characteristic of an entire tuple without common zeros: mean log max |f_j| - log max |f_j(0)|.
QuadValue characteristic_T(const std::vector<MeroSum>& tuple, double r, const QuadOptions& opt = {});
QuadValue characteristic_T(const std::vector<MeroFn>& tuple, double r, const QuadOptions& opt = {});
// mean of log|f| over the circle of radius r
QuadValue circle_mean_log_abs(const MeroSum& f, double r, const QuadOptions& opt = {});

// log|c| for the leading Laurent coefficient of f at 0; T_f - T_{1/f} equals this value.
double jensen_constant(const MeroFn& f);

// Common zeros counted with min multiplicity. Exact for factored forms.
double gcd_counting(const MeroFn& f, const MeroFn& g, double r);
// Numeric matching of divisor points; ambiguous overlaps throw NumericDomain.
double gcd_counting(const Divisor& f, const Divisor& g, double r, double match_tol = 1e-7);

struct ZeroFinderOptions {
    double newton_tol = 1e-13;
    double min_box = 1e-9;  // relative to max(1, R)
    int max_edge_depth = 40;
};

// Zeros of an entire sum in the closed disk |z| <= R via the argument principle on a quadtree.
Divisor entire_zeros(const MeroSum& f, double R, const ZeroFinderOptions& opt = {});
// Zeros (positive) and poles (negative) in |z| <= R; single-group sums use exact factor roots.
Divisor divisor_in_disk(const MeroSum& f, double R, const ZeroFinderOptions& opt = {});
// D * f with D the common denominator: an entire sum.
MeroSum clear_denominators(const MeroSum& f);

std::vector<double> divisor_moduli(const Divisor& d);

// Evaluates fn at every grid point, in parallel; order of results follows the grid.
std::vector<double> evaluate_on_grid(const RadiusGrid& g, const std::function<double(double)>& fn);

}  // namespace nevwb
