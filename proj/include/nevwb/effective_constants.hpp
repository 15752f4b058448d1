#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nevwb/poly_io.hpp"

namespace nevwb {

// C(top, k) with C(top, k) = 0 for top < k (including negative top).
mpz_class binom(long top, long k);

struct ConstantsProfile {
    long n = 0, d = 0, m = 0;
    mpz_class M, M_prime, c_mnd, L;
    std::optional<mpq_class> eps;
    std::optional<long> b;
    std::optional<mpz_class> w, u;
    bool dims_extrapolated = false;
    std::optional<mpq_class> c3;
    bool c3_supplied = false;
    std::optional<mpz_class> N_threshold;
};

ConstantsProfile constants(long n, long d, long m);

// M' m n / M
mpq_class findm_first(const ConstantsProfile& p);
// (1/M)(m/(n+1) C(m+n,n) - c - M' m)
mpq_class findm_second(const ConstantsProfile& p);
bool findm_holds(const ConstantsProfile& p, const mpq_class& eps);

long choose_m(const mpq_class& eps, long n, long d, long max_m = 1000000);

// Exponent vectors of coefficient monomials in free generators; must contain the zero vector.
struct MonomialFamily {
    std::vector<std::vector<long>> exponents;

    std::size_t generators() const { return exponents.empty() ? 0 : exponents.front().size(); }
    void validate() const;
    static MonomialFamily from_json(const json& j);
    json to_json() const;
};

// Growth of |tS| for the family S. Exact enumeration while |tS| stays within max_points; beyond that
// the count is read off the polynomial of degree rank(S) through the last enumerated values, which must
// reproduce the final few enumerated counts.
class SumsetGrowth {
public:
    explicit SumsetGrowth(MonomialFamily fam, std::size_t max_points = 400000);

    mpz_class count(long t);
    bool extrapolated(long t) const;
    int rank() const { return rank_; }
    // start of the interpolation window, once extrapolation was needed
    std::optional<long> stable_from() const { return stable_from_; }

private:
    void step();
    bool try_stabilize();
    mpz_class poly_at(long t) const;

    MonomialFamily fam_;
    std::size_t max_points_;
    int rank_ = 0;
    std::vector<mpz_class> counts_;  // counts_[t] = |tS|
    std::set<std::vector<long>> all_;
    std::vector<std::vector<long>> frontier_;
    std::optional<long> stable_from_;
    std::vector<mpz_class> newton_;  // forward differences at stable_from_
};

// Exact count by enumeration only.
mpz_class dim_Vt_enumerate(const MonomialFamily& fam, long t);
mpz_class dim_Vt(const MonomialFamily& fam, long t);

struct BChoice {
    long b = 1;
    mpz_class w, u;
    bool extrapolated = false;
};
// Smallest b >= 1 with w/u - 1 <= eps/(4 m n), w = d_{Mb}, u = d_{Mb-M}.
BChoice choose_b(const mpq_class& eps, long m, long n, long d, const MonomialFamily& fam, long max_b = 10000000);

// Least integer strictly greater than 4((n+1) m L + c3/M)/eps.
mpz_class choose_N(const mpq_class& eps, long n, long m, const mpz_class& L, const mpz_class& M, const mpq_class& c3);

// Full profile: choose_m, constants, optional choose_b for fam, choose_N with c3 (0 when not supplied).
ConstantsProfile full_profile(const mpq_class& eps, long n, long d, const std::optional<MonomialFamily>& fam,
                              const std::optional<mpq_class>& c3);

json profile_to_json(const ConstantsProfile& p);
std::string profile_to_text(const ConstantsProfile& p);

mpq_class parse_rational(const std::string& s);

}  // namespace nevwb
