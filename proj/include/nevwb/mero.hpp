#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "nevwb/roots.hpp"
#include "nevwb/sparse_poly.hpp"

namespace nevwb {

using cplx = std::complex<double>;

// Univariate polynomial helpers in the variable z.
SparsePoly zpoly(const std::string& text);
SparsePoly zconst(const GaussRat& c);
SparsePoly zvar();

// Reduced quotient num/den of univariate polynomials; den monic.
class RationalFn {
public:
    RationalFn() : num_(SparsePoly(1)), den_(zconst(GaussRat(1))) {}
    RationalFn(SparsePoly num, SparsePoly den = zconst(GaussRat(1)));

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RationalFn derivative() const;
    cplx eval(cplx z) const { return num_.eval(std::vector<cplx>{z}) / den_.eval(std::vector<cplx>{z}); }
    std::string to_string() const;

private:
    SparsePoly num_, den_;
};

struct MeroFactor {
    SparsePoly poly;  // univariate, monic, squarefree, nonconstant
    int mult = 0;     // negative for poles
};

struct DivisorPoint {
    cplx z;
    int mult = 1;
    double radius = 0.0;
    std::optional<GaussRat> exact;
};
using Divisor = std::vector<DivisorPoint>;

// scalar * prod poly_k(z)^mult_k * exp(Q(z)). scalar == 0 encodes the zero function.
class MeroFn {
public:
    MeroFn();  // the constant 1
    static MeroFn constant(const GaussRat& c);
    static MeroFn from_poly(const SparsePoly& p);
    static MeroFn exp_of(const SparsePoly& Q);
    static MeroFn make(const GaussRat& scalar, const std::vector<MeroFactor>& factors, const SparsePoly& Q);
    static MeroFn from_rational(const RationalFn& r, const SparsePoly& Q);

    const GaussRat& scalar() const { return scalar_; }
    const std::vector<MeroFactor>& factors() const { return factors_; }
    const SparsePoly& exp_part() const { return exp_; }

    bool is_zero() const { return scalar_.is_zero(); }
    bool is_entire() const;
    // no factors and no nonconstant exponential part
    bool is_constant_function() const;
    // value when constant and exactly representable (exp part zero)
    std::optional<GaussRat> exact_constant() const;

    friend MeroFn operator*(const MeroFn& a, const MeroFn& b);
    friend MeroFn operator/(const MeroFn& a, const MeroFn& b);
    friend bool operator==(const MeroFn& a, const MeroFn& b);
    MeroFn pow(int k) const;

    RationalFn rational_part() const;  // scalar * prod p^m
    RationalFn log_derivative() const;

    cplx eval(cplx z) const;
    double log_abs(cplx z) const;  // -inf at zeros
    // log|c| for the leading Laurent coefficient c at z = 0
    double log_abs_leading_coefficient() const;
    int order_at_zero() const;

    Divisor zeros(double tol = 1e-10) const;
    Divisor poles(double tol = 1e-10) const;  // negative multiplicities

    std::string to_string() const;

private:
    void canonicalize(std::vector<MeroFactor> raw);
    GaussRat scalar_{1};
    std::vector<MeroFactor> factors_;
    SparsePoly exp_{1};
};

// Scaled complex value: e^{log_scale} * v.
struct ScaledValue {
    double log_scale = -INFINITY;
    cplx v = 0;
    double log_abs() const { return v == cplx(0) ? -INFINITY : log_scale + std::log(std::abs(v)); }
};

// Finite sum  sum_k R_k(z) exp(Q_k(z)), grouped by distinct Q.
class MeroSum {
public:
    using Key = SparsePoly::TermMap;  // terms of Q
    MeroSum() = default;
    MeroSum(const MeroFn& f);
    static MeroSum constant(const GaussRat& c);

    bool is_zero() const { return groups_.empty(); }
    std::size_t num_groups() const { return groups_.size(); }
    const std::map<Key, RationalFn>& groups() const { return groups_; }
    static SparsePoly key_poly(const Key& k);

    friend MeroSum operator+(const MeroSum& a, const MeroSum& b);
    friend MeroSum operator-(const MeroSum& a, const MeroSum& b);
    friend MeroSum operator*(const MeroSum& a, const MeroSum& b);
    MeroSum operator-() const;
    friend bool operator==(const MeroSum& a, const MeroSum& b) { return a.groups_ == b.groups_; }

    MeroSum derivative() const;
    std::optional<MeroFn> as_mero() const;  // single group (or zero)
    SparsePoly common_denominator() const;
    bool is_entire() const { return common_denominator().is_constant(); }

    ScaledValue eval_scaled(cplx z) const;
    cplx eval(cplx z) const;
    double log_abs(cplx z) const { return eval_scaled(z).log_abs(); }

    std::string to_string() const;

private:
    void add_group(const Key& q, const RationalFn& r);
    std::map<Key, RationalFn> groups_;
};

// F(g) for a polynomial F in g.size() variables.
MeroSum compose(const SparsePoly& F, const std::vector<MeroFn>& g);

// Divide out common zeros/poles so that the components are entire without common zeros.
std::vector<MeroFn> reduced_tuple(const std::vector<MeroFn>& g);

// Divisor helpers
Divisor divisor_merge(const Divisor& d, double tol = 1e-9);

}  // namespace nevwb
