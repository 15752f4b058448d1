#pragma once

#include <array>
#include <map>
#include <string>

#include "nevwb/sparse_poly.hpp"

namespace nevwb {

// Laurent polynomial in (Lambda, T); exponent pair is {Lambda, T}.
class LaurentBivar {
public:
    using Key = std::array<int, 2>;
    using TermMap = std::map<Key, GaussRat>;

    LaurentBivar() = default;
    static LaurentBivar monomial(int lam, int t, const GaussRat& c);
    // p in two variables: variable 0 -> Lambda, variable 1 -> T
    static LaurentBivar from_poly(const SparsePoly& p);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int lam, int t, const GaussRat& c);

    int min_exp(int which) const;
    int max_exp(int which) const;
    bool is_polynomial() const { return is_zero() || (min_exp(0) >= 0 && min_exp(1) >= 0); }
    SparsePoly to_poly() const;  // requires is_polynomial()
    LaurentBivar shifted(int lam, int t) const;

    LaurentBivar& operator+=(const LaurentBivar& o);
    LaurentBivar& operator-=(const LaurentBivar& o);
    friend LaurentBivar operator+(LaurentBivar a, const LaurentBivar& b) { return a += b; }
    friend LaurentBivar operator-(LaurentBivar a, const LaurentBivar& b) { return a -= b; }
    friend LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b);
    friend bool operator==(const LaurentBivar& a, const LaurentBivar& b) { return a.terms_ == b.terms_; }

    LaurentBivar pow(int k) const;  // k >= 0; monomials may take negative k
    std::string to_string() const;

private:
    TermMap terms_;
};

// Substitute Laurent monomials for the variables of p: variable j -> images[j].
LaurentBivar substitute_monomials(const SparsePoly& p, const std::vector<LaurentBivar>& images);

}  // namespace nevwb
