#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nevwb/mero.hpp"
#include "nevwb/poly_io.hpp"
#include "nevwb/sparse_poly.hpp"

namespace nevwb {

// Variable layout of a DiffPoly: x0..xn, w1..wn, lambda, lambdainv, lambdap, s.
struct DiffSymbolRing {
    int n = 1;

    std::size_t x(int i) const { return static_cast<std::size_t>(i); }
    std::size_t w(int j) const { return static_cast<std::size_t>(n + j); }  // j = 1..n
    std::size_t lambda() const { return static_cast<std::size_t>(2 * n + 1); }
    std::size_t lambdainv() const { return static_cast<std::size_t>(2 * n + 2); }
    std::size_t lambdap() const { return static_cast<std::size_t>(2 * n + 3); }
    std::size_t s() const { return static_cast<std::size_t>(2 * n + 4); }
    std::size_t total() const { return static_cast<std::size_t>(2 * n + 5); }
    std::vector<std::string> symbol_names() const;  // w1..wn, lambda, lambdainv, lambdap, s
    std::vector<std::string> all_names() const;
};

class DiffPoly {
public:
    DiffPoly(DiffSymbolRing ring, SparsePoly base);
    // constant-coefficient polynomial in x0..xn
    static DiffPoly from_constant_poly(const SparsePoly& F);
    // text over the names x0..xn, w1..wn, lambda, lambdainv, lambdap, s
    static DiffPoly parse(const std::string& text, int n);

    const DiffSymbolRing& ring() const { return ring_; }
    const SparsePoly& base() const { return base_; }
    int degree() const;  // total degree in x
    bool has_constant_coefficients() const;

    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const GaussRat& c, const DiffPoly& a);
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.base_ == b.base_; }

    std::string to_string() const { return base_.to_string(ring_.all_names()); }

private:
    void normalize();  // lambda * lambdainv = 1
    DiffSymbolRing ring_;
    SparsePoly base_;
};

json diffpoly_to_json(const DiffPoly& p);
DiffPoly diffpoly_from_json(const json& j);

DiffPoly apply_Du(const DiffPoly& F);
bool check_product_rule(const DiffPoly& F, const DiffPoly& G);

struct CoprimalityReport {
    enum class Status { Coprime, MonomialRelation };
    Status status = Status::Coprime;
    std::vector<int> relation;                      // (m1..mn) when status is MonomialRelation
    SparsePoly common_factor{1};                    // gcd(F, D_u F) when not coprime
    std::vector<std::vector<int>> candidate_relations;  // from pairs of terms of F
};

// Optional binding: w_j -> constant (u_j = c_j e^{w_j z}); unbound symbols stay formal.
CoprimalityReport coprime_with_Du(const SparsePoly& F,
                                  const std::vector<std::optional<GaussRat>>& w_binding = {});

struct NumericCheck {
    double max_residual = 0.0;      // max |lhs - rhs| / max(1, |lhs|)
    double max_abs_residual = 0.0;  // max |lhs - rhs|
    std::size_t used_samples = 0;
    std::vector<std::string> warnings;
};

// F(u)' against D_u(F)(u) with w_j bound to u_j'/u_j; u[0] must be the constant 1.
NumericCheck verify_Du_numeric(const SparsePoly& F, const std::vector<MeroFn>& u, const std::vector<cplx>& samples);
// G(g)' against d (g0'/g0) G(g) + D_u(G)(g), u = g/g0.
NumericCheck verify_Dug_numeric(const SparsePoly& G, const std::vector<MeroFn>& g, const std::vector<cplx>& samples);

}  // namespace nevwb
