#include "nevwb/mero.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"
#include "nevwb/poly_io.hpp"

namespace nevwb {

SparsePoly zpoly(const std::string& text) { return parse_poly(text, 1, {"z"}); }
SparsePoly zconst(const GaussRat& c) { return SparsePoly::constant(1, c); }
SparsePoly zvar() { return SparsePoly::variable(1, 0); }

namespace {

bool poly_less(const SparsePoly& a, const SparsePoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.terms() < b.terms();
}

}  // namespace

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.num_vars() != 1 || den_.num_vars() != 1)
        throw Error(ErrorKind::InvalidInput, "rational functions are univariate");
    if (den_.is_zero()) throw Error(ErrorKind::InvalidInput, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = zconst(GaussRat(1));
        return;
    }
    SparsePoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    GaussRat lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative(0) * den_ - num_ * den_.derivative(0), den_ * den_);
}

std::string RationalFn::to_string() const {
    if (den_.is_constant()) return num_.to_string({"z"});
    return "(" + num_.to_string({"z"}) + ")/(" + den_.to_string({"z"}) + ")";
}

// ---------------------------------------------------------------- MeroFn

MeroFn::MeroFn() = default;

MeroFn MeroFn::constant(const GaussRat& c) {
    MeroFn f;
    f.scalar_ = c;
    return f;
}

MeroFn MeroFn::from_poly(const SparsePoly& p) { return make(GaussRat(1), {{p, 1}}, SparsePoly(1)); }

MeroFn MeroFn::exp_of(const SparsePoly& Q) { return make(GaussRat(1), {}, Q); }

MeroFn MeroFn::make(const GaussRat& scalar, const std::vector<MeroFactor>& factors, const SparsePoly& Q) {
    if (Q.num_vars() != 1) throw Error(ErrorKind::InvalidInput, "exponential part must be univariate");
    MeroFn f;
    f.scalar_ = scalar;
    f.exp_ = Q;
    f.canonicalize(factors);
    return f;
}

MeroFn MeroFn::from_rational(const RationalFn& r, const SparsePoly& Q) {
    if (r.is_zero()) return constant(GaussRat(0));
    return make(GaussRat(1), {{r.num(), 1}, {r.den(), -1}}, Q);
}

void MeroFn::canonicalize(std::vector<MeroFactor> raw) {
    factors_.clear();
    if (scalar_.is_zero()) {
        exp_ = SparsePoly(1);
        return;
    }
    std::vector<SparsePoly> polys;
    std::vector<int> mults;
    for (auto& fm : raw) {
        if (fm.poly.num_vars() != 1) throw Error(ErrorKind::InvalidInput, "factor polynomials must be univariate");
        if (fm.mult == 0) continue;
        if (fm.poly.is_zero()) {
            if (fm.mult < 0) throw Error(ErrorKind::InvalidInput, "division by the zero function");
            scalar_ = GaussRat(0);
            exp_ = SparsePoly(1);
            return;
        }
        if (fm.poly.is_constant()) {
            scalar_ *= nevwb::pow(fm.poly.constant_term(), fm.mult);
            continue;
        }
        polys.push_back(fm.poly);
        mults.push_back(fm.mult);
    }
    if (polys.empty()) return;
    // fast path: already canonical
    bool canonical = true;
    for (std::size_t i = 0; i < polys.size() && canonical; ++i) {
        if (!polys[i].leading_coeff().is_one()) canonical = false;
        for (std::size_t j = 0; j < i && canonical; ++j)
            if (polys[i] == polys[j] || !gcd(polys[i], polys[j]).is_constant()) canonical = false;
        if (canonical && !is_squarefree(polys[i])) canonical = false;
    }
    if (canonical) {
        for (std::size_t i = 0; i < polys.size(); ++i) factors_.push_back({polys[i], mults[i]});
    } else {
        std::vector<SparsePoly> monic;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            auto d = squarefree_decompose(polys[i]);
            scalar_ *= nevwb::pow(d.unit, mults[i]);
            SparsePoly prod = zconst(GaussRat(1));
            for (auto& f : d.factors) prod *= f.factor.pow(f.multiplicity);
            monic.push_back(prod);
        }
        auto cb = coprime_base(monic);
        for (std::size_t j = 0; j < cb.base.size(); ++j) {
            int total = 0;
            for (std::size_t i = 0; i < monic.size(); ++i) total += mults[i] * cb.exponents[i][j];
            // refinement of monic inputs yields monic base elements
            if (total != 0) factors_.push_back({cb.base[j].monic(), total});
        }
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const MeroFactor& a, const MeroFactor& b) { return poly_less(a.poly, b.poly); });
}

bool MeroFn::is_entire() const {
    for (const auto& f : factors_)
        if (f.mult < 0) return false;
    return true;
}

bool MeroFn::is_constant_function() const {
    if (is_zero()) return true;
    return factors_.empty() && exp_.total_degree() <= 0;
}

std::optional<GaussRat> MeroFn::exact_constant() const {
    if (is_zero()) return GaussRat(0);
    if (!factors_.empty() || !exp_.is_zero()) return std::nullopt;
    return scalar_;
}

MeroFn operator*(const MeroFn& a, const MeroFn& b) {
    if (a.is_zero() || b.is_zero()) return MeroFn::constant(GaussRat(0));
    std::vector<MeroFactor> raw = a.factors_;
    raw.insert(raw.end(), b.factors_.begin(), b.factors_.end());
    return MeroFn::make(a.scalar_ * b.scalar_, raw, a.exp_ + b.exp_);
}

MeroFn operator/(const MeroFn& a, const MeroFn& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero function");
    return a * b.pow(-1);
}

bool operator==(const MeroFn& a, const MeroFn& b) {
    if (a.scalar_ != b.scalar_ || a.exp_ != b.exp_) return false;
    if (a.factors_.size() == b.factors_.size()) {
        bool same = true;
        for (std::size_t i = 0; i < a.factors_.size() && same; ++i)
            same = a.factors_[i].poly == b.factors_[i].poly && a.factors_[i].mult == b.factors_[i].mult;
        if (same) return true;
    }
    // factorizations are coprime but not unique; compare expanded quotients
    return a.rational_part() == b.rational_part();
}

MeroFn MeroFn::pow(int k) const {
    if (is_zero()) {
        if (k < 0) throw Error(ErrorKind::InvalidInput, "negative power of the zero function");
        return k == 0 ? MeroFn() : *this;
    }
    MeroFn r;
    r.scalar_ = nevwb::pow(scalar_, k);
    r.exp_ = exp_ * GaussRat(k);
    if (k != 0)
        for (const auto& f : factors_) r.factors_.push_back({f.poly, f.mult * k});
    return r;
}

RationalFn MeroFn::rational_part() const {
    SparsePoly num = zconst(scalar_), den = zconst(GaussRat(1));
    for (const auto& f : factors_) {
        if (f.mult > 0)
            num *= f.poly.pow(f.mult);
        else
            den *= f.poly.pow(-f.mult);
    }
    return RationalFn(num, den);
}

RationalFn MeroFn::log_derivative() const {
    if (is_zero()) throw Error(ErrorKind::InvalidInput, "log derivative of the zero function");
    SparsePoly den = zconst(GaussRat(1));
    for (const auto& f : factors_) den *= f.poly;
    SparsePoly num = exp_.derivative(0) * den;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        SparsePoly t = factors_[k].poly.derivative(0) * GaussRat(factors_[k].mult);
        for (std::size_t j = 0; j < factors_.size(); ++j)
            if (j != k) t *= factors_[j].poly;
        num += t;
    }
    return RationalFn(num, den);
}

cplx MeroFn::eval(cplx z) const {
    if (is_zero()) return 0;
    cplx v = scalar_.to_complex();
    for (const auto& f : factors_) v *= std::pow(f.poly.eval(std::vector<cplx>{z}), f.mult);
    return v * std::exp(exp_.eval(std::vector<cplx>{z}));
}

double MeroFn::log_abs(cplx z) const {
    if (is_zero()) return -INFINITY;
    double s = std::log(scalar_.abs());
    for (const auto& f : factors_) s += f.mult * std::log(std::abs(f.poly.eval(std::vector<cplx>{z})));
    return s + exp_.eval(std::vector<cplx>{z}).real();
}

int MeroFn::order_at_zero() const {
    for (const auto& f : factors_)
        if (f.poly.constant_term().is_zero()) return f.mult;
    return 0;
}

double MeroFn::log_abs_leading_coefficient() const {
    if (is_zero()) return -INFINITY;
    double s = std::log(scalar_.abs());
    for (const auto& f : factors_) {
        GaussRat c0 = f.poly.constant_term();
        if (c0.is_zero()) c0 = f.poly.coeff({1});
        s += f.mult * std::log(c0.abs());
    }
    return s + exp_.constant_term().to_complex().real();
}

namespace {

Divisor divisor_of(const std::vector<MeroFactor>& fs, int sign, double tol) {
    Divisor d;
    for (const auto& f : fs) {
        if (f.mult * sign <= 0) continue;
        auto r = roots_certified(f.poly, tol);
        for (const auto& x : r.roots) d.push_back({x.center, f.mult * x.multiplicity, x.radius, x.exact});
    }
    return d;
}

}  // namespace

Divisor MeroFn::zeros(double tol) const {
    if (is_zero()) throw Error(ErrorKind::InvalidInput, "divisor of the zero function");
    return divisor_of(factors_, 1, tol);
}

Divisor MeroFn::poles(double tol) const {
    if (is_zero()) throw Error(ErrorKind::InvalidInput, "divisor of the zero function");
    return divisor_of(factors_, -1, tol);
}

std::string MeroFn::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << scalar_.to_string();
    for (const auto& f : factors_) {
        os << "*(" << f.poly.to_string({"z"}) << ")";
        if (f.mult != 1) os << "^" << f.mult;
    }
    if (!exp_.is_zero()) os << "*exp(" << exp_.to_string({"z"}) << ")";
    return os.str();
}

// ---------------------------------------------------------------- MeroSum

MeroSum::MeroSum(const MeroFn& f) {
    if (!f.is_zero()) add_group(f.exp_part().terms(), f.rational_part());
}

MeroSum MeroSum::constant(const GaussRat& c) { return MeroSum(MeroFn::constant(c)); }

SparsePoly MeroSum::key_poly(const Key& k) {
    SparsePoly p(1);
    for (const auto& [e, c] : k) p.add_term(e, c);
    return p;
}

void MeroSum::add_group(const Key& q, const RationalFn& r) {
    if (r.is_zero()) return;
    auto it = groups_.find(q);
    if (it == groups_.end()) {
        groups_.emplace(q, r);
        return;
    }
    it->second = it->second + r;
    if (it->second.is_zero()) groups_.erase(it);
}

MeroSum operator+(const MeroSum& a, const MeroSum& b) {
    MeroSum r = a;
    for (const auto& [k, v] : b.groups_) r.add_group(k, v);
    return r;
}

MeroSum MeroSum::operator-() const {
    MeroSum r;
    for (const auto& [k, v] : groups_) r.groups_.emplace(k, -v);
    return r;
}

MeroSum operator-(const MeroSum& a, const MeroSum& b) { return a + (-b); }

MeroSum operator*(const MeroSum& a, const MeroSum& b) {
    MeroSum r;
    for (const auto& [ka, va] : a.groups_)
        for (const auto& [kb, vb] : b.groups_)
            r.add_group((MeroSum::key_poly(ka) + MeroSum::key_poly(kb)).terms(), va * vb);
    return r;
}

MeroSum MeroSum::derivative() const {
    MeroSum r;
    for (const auto& [k, v] : groups_) {
        SparsePoly dq = key_poly(k).derivative(0);
        r.add_group(k, v.derivative() + v * RationalFn(dq));
    }
    return r;
}

std::optional<MeroFn> MeroSum::as_mero() const {
    if (groups_.empty()) return MeroFn::constant(GaussRat(0));
    if (groups_.size() > 1) return std::nullopt;
    const auto& [k, v] = *groups_.begin();
    return MeroFn::from_rational(v, key_poly(k));
}

SparsePoly MeroSum::common_denominator() const {
    SparsePoly d = zconst(GaussRat(1));
    for (const auto& [k, v] : groups_) {
        if (v.den().is_constant()) continue;
        SparsePoly g = gcd(d, v.den());
        d = d * divide_exact(v.den(), g);
    }
    return d.monic();
}

ScaledValue MeroSum::eval_scaled(cplx z) const {
    ScaledValue out;
    if (groups_.empty()) return out;
    std::vector<std::pair<double, double>> parts;  // (log modulus, phase)
    double mx = -INFINITY;
    for (const auto& [k, v] : groups_) {
        cplx q = key_poly(k).eval(std::vector<cplx>{z});
        cplx r = v.eval(z);
        double lm = r == cplx(0) ? -INFINITY : q.real() + std::log(std::abs(r));
        parts.push_back({lm, q.imag() + std::arg(r)});
        mx = std::max(mx, lm);
    }
    if (mx == -INFINITY) return out;
    cplx s = 0;
    for (const auto& [lm, ph] : parts)
        if (lm > -INFINITY) s += std::polar(std::exp(lm - mx), ph);
    out.log_scale = mx;
    out.v = s;
    return out;
}

cplx MeroSum::eval(cplx z) const {
    ScaledValue s = eval_scaled(z);
    if (s.v == cplx(0)) return 0;
    return s.v * std::exp(s.log_scale);
}

std::string MeroSum::to_string() const {
    if (groups_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : groups_) {
        if (!first) os << " + ";
        first = false;
        os << v.to_string();
        SparsePoly q = key_poly(k);
        if (!q.is_zero()) os << "*exp(" << q.to_string({"z"}) << ")";
    }
    return os.str();
}

MeroSum compose(const SparsePoly& F, const std::vector<MeroFn>& g) {
    if (F.num_vars() != g.size()) throw Error(ErrorKind::InvalidInput, "compose: polynomial arity does not match tuple");
    std::vector<std::vector<MeroFn>> cache(g.size());
    MeroSum out;
    for (const auto& [e, c] : F.terms()) {
        MeroFn t = MeroFn::constant(c);
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (!e[j]) continue;
            auto& pw = cache[j];
            if (pw.empty()) pw.push_back(MeroFn());
            while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * g[j]);
            t = t * pw[e[j]];
        }
        out = out + MeroSum(t);
    }
    return out;
}

std::vector<MeroFn> reduced_tuple(const std::vector<MeroFn>& g) {
    std::vector<SparsePoly> polys;
    for (const auto& f : g)
        for (const auto& fm : f.factors()) {
            bool seen = false;
            for (const auto& p : polys)
                if (p == fm.poly) seen = true;
            if (!seen) polys.push_back(fm.poly);
        }
    if (polys.empty()) return g;
    auto cb = coprime_base(polys);
    std::vector<std::vector<int>> val(g.size(), std::vector<int>(cb.base.size(), 0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& fm : g[i].factors()) {
            std::size_t idx = 0;
            while (!(polys[idx] == fm.poly)) ++idx;
            for (std::size_t j = 0; j < cb.base.size(); ++j) val[i][j] += fm.mult * cb.exponents[idx][j];
        }
    std::vector<MeroFactor> common;
    for (std::size_t j = 0; j < cb.base.size(); ++j) {
        bool any = false;
        int mn = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            mn = any ? std::min(mn, val[i][j]) : val[i][j];
            any = true;
        }
        if (any && mn != 0) common.push_back({cb.base[j], -mn});
    }
    if (common.empty()) return g;
    MeroFn c = MeroFn::make(GaussRat(1), common, SparsePoly(1));
    std::vector<MeroFn> out;
    for (const auto& f : g) out.push_back(f.is_zero() ? f : f * c);
    return out;
}

Divisor divisor_merge(const Divisor& d, double tol) {
    Divisor out;
    for (const auto& p : d) {
        bool merged = false;
        for (auto& q : out) {
            if (std::abs(p.z - q.z) <= tol * std::max(1.0, std::abs(p.z))) {
                q.mult += p.mult;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(p);
    }
    Divisor nz;
    for (auto& p : out)
        if (p.mult != 0) nz.push_back(p);
    return nz;
}

}  // namespace nevwb
