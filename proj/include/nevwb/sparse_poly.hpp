#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "nevwb/gauss_rat.hpp"

namespace nevwb {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q(i). Terms are kept in lex order
// with variable 0 most significant, so the last entry is the lex-leading term.
class SparsePoly {
public:
    using TermMap = std::map<Exponent, GaussRat>;

    explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, const GaussRat& c);
    static SparsePoly variable(std::size_t nvars, std::size_t i);
    static SparsePoly var_power(std::size_t nvars, std::size_t i, int k);
    static SparsePoly monomial(const Exponent& e, const GaussRat& c);

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_term() const;
    GaussRat coeff(const Exponent& e) const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t v) const;
    int min_degree_in(std::size_t v) const;
    bool uses_var(std::size_t v) const { return degree_in(v) > 0; }
    bool is_homogeneous() const;

    const Exponent& leading_exp() const;
    const GaussRat& leading_coeff() const;

    void add_term(const Exponent& e, const GaussRat& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly& operator*=(const GaussRat& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const GaussRat& c) { return a *= c; }
    friend SparsePoly operator*(const GaussRat& c, SparsePoly a) { return a *= c; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly pow(int k) const;
    SparsePoly derivative(std::size_t v) const;
    SparsePoly monic() const;  // lex-leading coefficient 1

    GaussRat eval(const std::vector<GaussRat>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    // substitute a value for one variable; the variable stays (with exponent 0)
    SparsePoly partial_eval(std::size_t v, const GaussRat& val) const;
    // images[j] replaces variable j; all images share one variable count
    SparsePoly compose(const std::vector<SparsePoly>& images) const;

    // coefficient of v^k for k = 0..deg_v, each with v-exponent 0
    std::vector<SparsePoly> coeffs_in(std::size_t v) const;
    static SparsePoly from_coeffs_in(std::size_t v, const std::vector<SparsePoly>& c);
    SparsePoly lc_in(std::size_t v) const;

    // old variable j becomes variable placement[j] of a ring with nvars variables
    SparsePoly relabel(std::size_t nvars, const std::vector<std::size_t>& placement) const;
    SparsePoly homogeneous_part(int deg) const;
    // divide by the largest monomial dividing every term; returns that monomial's exponent
    Exponent strip_monomial_content(SparsePoly& out) const;

    std::vector<GaussRat> univariate_coeffs() const;  // requires num_vars()==1
    static SparsePoly from_univariate(const std::vector<GaussRat>& c);

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

std::vector<std::string> default_var_names(std::size_t n, const std::string& stem = "x");

}  // namespace nevwb
