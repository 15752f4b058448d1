#include "nevwb/effective_constants.hpp"

#include <sstream>

#include "nevwb/error.hpp"

namespace nevwb {

mpz_class binom(long top, long k) {
    if (k < 0 || top < k) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(top).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

namespace {

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class floor_q(const mpq_class& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

int rank_of(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    std::vector<std::vector<mpq_class>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == rank || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ConstantsProfile constants(long n, long d, long m) {
    if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
    if (d < 1) throw Error(ErrorKind::InvalidInput, "d must be at least 1");
    if (m < 2 * d) throw Error(ErrorKind::InvalidInput, "m must satisfy m >= 2d (m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")");
    ConstantsProfile p;
    p.n = n;
    p.d = d;
    p.m = m;
    p.M = 2 * binom(m + n - d, n) - binom(m + n - 2 * d, n);
    p.M_prime = binom(m + n, n) - p.M;
    p.c_mnd = 2 * binom(m + n - d, n + 1) - binom(m + n - 2 * d, n + 1);
    p.L = ceil_div(p.M * (p.M - 1), 2 * p.c_mnd);
    return p;
}

mpq_class findm_first(const ConstantsProfile& p) {
    mpq_class r(p.M_prime * p.m * p.n, p.M);
    r.canonicalize();
    return r;
}

mpq_class findm_second(const ConstantsProfile& p) {
    mpq_class inner = mpq_class(p.m * binom(p.m + p.n, p.n), p.n + 1);
    inner.canonicalize();
    inner -= p.c_mnd + p.M_prime * p.m;
    return inner / mpq_class(p.M);
}

bool findm_holds(const ConstantsProfile& p, const mpq_class& eps) {
    return findm_first(p) <= eps / 4 && findm_second(p) <= eps / (4 * (p.n + 1));
}

long choose_m(const mpq_class& eps, long n, long d, long max_m) {
    if (eps <= 0) throw Error(ErrorKind::InvalidInput, "eps must be positive");
    for (long m = 2 * d; m <= max_m; ++m)
        if (findm_holds(constants(n, d, m), eps)) return m;
    throw Error(ErrorKind::NonConvergence, "no m <= " + std::to_string(max_m) + " satisfies both conditions");
}

void MonomialFamily::validate() const {
    if (exponents.empty()) throw Error(ErrorKind::InvalidInput, "monomial family is empty");
    std::size_t k = exponents.front().size();
    bool has_unit = false;
    for (const auto& e : exponents) {
        if (e.size() != k) throw Error(ErrorKind::InvalidInput, "exponent vectors have different lengths");
        bool zero = true;
        for (long x : e) zero = zero && x == 0;
        has_unit = has_unit || zero;
    }
    if (!has_unit) throw Error(ErrorKind::InvalidInput, "monomial family must contain the unit (zero exponent vector)");
}

MonomialFamily MonomialFamily::from_json(const json& j) {
    MonomialFamily f;
    try {
        const json& e = j.is_array() ? j : j.at("exponents");
        for (const auto& row : e) f.exponents.push_back(row.get<std::vector<long>>());
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("monomial family: ") + ex.what());
    }
    f.validate();
    return f;
}

json MonomialFamily::to_json() const { return json{{"exponents", exponents}}; }

SumsetGrowth::SumsetGrowth(MonomialFamily fam, std::size_t max_points) : fam_(std::move(fam)), max_points_(max_points) {
    fam_.validate();
    rank_ = rank_of(fam_.exponents);
    std::vector<long> zero(fam_.generators(), 0);
    all_.insert(zero);
    frontier_.push_back(zero);
    counts_.push_back(1);
}

void SumsetGrowth::step() {
    std::vector<std::vector<long>> next;
    for (const auto& p : frontier_)
        for (const auto& s : fam_.exponents) {
            std::vector<long> q = p;
            for (std::size_t i = 0; i < q.size(); ++i) q[i] += s[i];
            if (all_.insert(q).second) next.push_back(std::move(q));
        }
    frontier_ = std::move(next);
    counts_.push_back(static_cast<unsigned long>(all_.size()));
}

bool SumsetGrowth::try_stabilize() {
    constexpr long kCheck = 4;
    long T = static_cast<long>(counts_.size()) - 1;
    long s = T - rank_ - kCheck;
    if (s < 0) return false;
    std::vector<mpz_class> diff(counts_.begin() + s, counts_.begin() + s + rank_ + 1);
    std::vector<mpz_class> newton;
    for (int j = 0; j <= rank_; ++j) {
        newton.push_back(diff[0]);
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    newton_ = newton;
    stable_from_ = s;
    for (long t = s + rank_ + 1; t <= T; ++t)
        if (poly_at(t) != counts_[t]) {
            stable_from_.reset();
            newton_.clear();
            return false;
        }
    return true;
}

mpz_class SumsetGrowth::poly_at(long t) const {
    long x = t - *stable_from_;
    mpz_class v = 0;
    for (std::size_t j = 0; j < newton_.size(); ++j) v += newton_[j] * binom(x, static_cast<long>(j));
    return v;
}

mpz_class SumsetGrowth::count(long t) {
    if (t < 0) throw Error(ErrorKind::InvalidInput, "t must be non-negative");
    while (static_cast<long>(counts_.size()) <= t) {
        if (all_.size() > max_points_) {
            if (!stable_from_ && !try_stabilize())
                throw Error(ErrorKind::NonConvergence, "sumset growth did not stabilize within " +
                                                           std::to_string(max_points_) + " points (t=" +
                                                           std::to_string(counts_.size() - 1) + ")");
            return poly_at(t);
        }
        step();
    }
    return counts_[t];
}

bool SumsetGrowth::extrapolated(long t) const { return t >= static_cast<long>(counts_.size()); }

mpz_class dim_Vt_enumerate(const MonomialFamily& fam, long t) {
    fam.validate();
    std::set<std::vector<long>> cur{std::vector<long>(fam.generators(), 0)};
    for (long k = 0; k < t; ++k) {
        std::set<std::vector<long>> next;
        for (const auto& p : cur)
            for (const auto& s : fam.exponents) {
                std::vector<long> q = p;
                for (std::size_t i = 0; i < q.size(); ++i) q[i] += s[i];
                next.insert(std::move(q));
            }
        cur = std::move(next);
    }
    return static_cast<unsigned long>(cur.size());
}

mpz_class dim_Vt(const MonomialFamily& fam, long t) {
    SumsetGrowth g(fam);
    return g.count(t);
}

BChoice choose_b(const mpq_class& eps, long m, long n, long d, const MonomialFamily& fam, long max_b) {
    if (eps <= 0) throw Error(ErrorKind::InvalidInput, "eps must be positive");
    ConstantsProfile p = constants(n, d, m);
    long M = p.M.get_si();
    mpq_class bound = eps / (4 * m * n);
    SumsetGrowth g(fam);
    for (long b = 1; b <= max_b; ++b) {
        BChoice c;
        c.b = b;
        c.w = g.count(M * b);
        c.u = g.count(M * b - M);
        c.extrapolated = g.extrapolated(M * b);
        if (mpq_class(c.w, c.u) - 1 <= bound) return c;
    }
    throw Error(ErrorKind::NonConvergence, "no b <= " + std::to_string(max_b) + " satisfies w/u - 1 <= eps/(4mn)");
}

mpz_class choose_N(const mpq_class& eps, long n, long m, const mpz_class& L, const mpz_class& M, const mpq_class& c3) {
    if (eps <= 0 || n <= 0 || m <= 0 || L <= 0 || M <= 0 || c3 < 0)
        throw Error(ErrorKind::InvalidInput, "choose_N requires positive inputs (c3 >= 0)");
    mpq_class x = 4 * (mpq_class((n + 1) * m) * L + c3 / mpq_class(M)) / eps;
    return floor_q(x) + 1;
}

ConstantsProfile full_profile(const mpq_class& eps, long n, long d, const std::optional<MonomialFamily>& fam,
                              const std::optional<mpq_class>& c3) {
    long m = choose_m(eps, n, d);
    ConstantsProfile p = constants(n, d, m);
    p.eps = eps;
    if (fam) {
        BChoice b = choose_b(eps, m, n, d, *fam);
        p.b = b.b;
        p.w = b.w;
        p.u = b.u;
        p.dims_extrapolated = b.extrapolated;
    }
    p.c3 = c3.value_or(0);
    p.c3_supplied = c3.has_value();
    p.N_threshold = choose_N(eps, n, m, p.L, p.M, *p.c3);
    return p;
}

json profile_to_json(const ConstantsProfile& p) {
    json j{{"n", p.n}, {"d", p.d}, {"m", p.m}, {"M", p.M.get_str()}, {"M_prime", p.M_prime.get_str()},
           {"c_mnd", p.c_mnd.get_str()}, {"L", p.L.get_str()}};
    if (p.eps) j["eps"] = p.eps->get_str();
    if (p.b) {
        j["b"] = *p.b;
        j["w"] = p.w->get_str();
        j["u"] = p.u->get_str();
        j["dims_extrapolated"] = p.dims_extrapolated;
    }
    if (p.c3) {
        j["c3"] = p.c3->get_str();
        j["c3_supplied"] = p.c3_supplied;
    }
    if (p.N_threshold) j["N"] = p.N_threshold->get_str();
    return j;
}

std::string profile_to_text(const ConstantsProfile& p) {
    std::ostringstream os;
    os << "n = " << p.n << "\nd = " << p.d << "\n";
    if (p.eps) os << "eps = " << p.eps->get_str() << "\n";
    os << "m = " << p.m << "\nM = " << p.M << "\nM' = " << p.M_prime << "\nc_mnd = " << p.c_mnd << "\nL = " << p.L << "\n";
    if (p.b) {
        os << "b = " << *p.b << "\nw = " << *p.w << "\nu = " << *p.u << "\n";
        if (p.dims_extrapolated) os << "dims: extrapolated from stabilized sumset growth\n";
    }
    if (p.c3) os << "c3 = " << p.c3->get_str() << (p.c3_supplied ? " (supplied)" : " (default, not supplied)") << "\n";
    if (p.N_threshold) os << "N = " << *p.N_threshold << "\n";
    return os.str();
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace nevwb
