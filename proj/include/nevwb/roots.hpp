#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nevwb/error.hpp"
#include "nevwb/sparse_poly.hpp"

namespace nevwb {

struct RootEnclosure {
    std::complex<double> center;
    double radius = 0.0;
    int multiplicity = 1;
    std::optional<GaussRat> exact;  // set when the root is a Gaussian rational, checked exactly
    std::size_t factor_index = 0;   // which squarefree factor of the defining polynomial

    bool contains(std::complex<double> z, double slack = 0.0) const {
        return std::abs(z - center) <= radius + slack;
    }
};

struct AlgebraicRoots {
    SparsePoly defining_poly{1};
    std::vector<RootEnclosure> roots;

    int total_multiplicity() const {
        int s = 0;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
};

class RootError : public Error {
public:
    RootError(const std::string& msg, AlgebraicRoots best)
        : Error(ErrorKind::NonConvergence, msg), best_(std::move(best)) {}
    const AlgebraicRoots& best() const { return best_; }

private:
    AlgebraicRoots best_;
};

// Radii are certified inclusion radii; tol is relative to max(1, |center|).
AlgebraicRoots roots_certified(const SparsePoly& f, double tol = 1e-10);

// Convert a polynomial that only uses variable v into a univariate polynomial.
SparsePoly to_univariate(const SparsePoly& p, std::size_t v);
SparsePoly from_univariate_in(const SparsePoly& u, std::size_t nvars, std::size_t v);

struct LinearForms {
    AlgebraicRoots deltas;  // roots of h(delta, 1)
    int y_multiplicity = 0;
};
// h homogeneous in variables x_var, y_var: h = c * Y^k * prod (X - delta_i Y)
LinearForms factor_linear_forms(const SparsePoly& h, std::size_t x_var, std::size_t y_var, double tol = 1e-10);

// Gaussian-rational recognition of z (denominators up to max_den); nullopt if none is close.
std::optional<GaussRat> rationalize(std::complex<double> z, double radius, long max_den = 1000000);

// Does the algebraic number (root of p in the enclosure) equal the root of q in the other enclosure?
bool same_algebraic_number(const SparsePoly& p, const RootEnclosure& a, const SparsePoly& q, const RootEnclosure& b);

}  // namespace nevwb
