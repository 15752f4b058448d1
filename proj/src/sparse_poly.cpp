#include "nevwb/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

#include "nevwb/error.hpp"

namespace nevwb {

namespace {

void check_same(const SparsePoly& a, const SparsePoly& b) {
    if (a.num_vars() != b.num_vars())
        throw Error(ErrorKind::InvalidInput, "variable count mismatch (" + std::to_string(a.num_vars()) +
                                                 " vs " + std::to_string(b.num_vars()) + ")");
}

}  // namespace

SparsePoly SparsePoly::constant(std::size_t nvars, const GaussRat& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t i) { return var_power(nvars, i, 1); }

SparsePoly SparsePoly::var_power(std::size_t nvars, std::size_t i, int k) {
    if (i >= nvars) throw Error(ErrorKind::InvalidInput, "variable index out of range");
    Exponent e(nvars, 0);
    e[i] = k;
    return monomial(e, GaussRat(1));
}

SparsePoly SparsePoly::monomial(const Exponent& e, const GaussRat& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

GaussRat SparsePoly::constant_term() const { return coeff(Exponent(nvars_, 0)); }

GaussRat SparsePoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int SparsePoly::degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int SparsePoly::min_degree_in(std::size_t v) const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[v];
    for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
    return d;
}

bool SparsePoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (d < 0)
            d = s;
        else if (s != d)
            return false;
    }
    return true;
}

const Exponent& SparsePoly::leading_exp() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const GaussRat& SparsePoly::leading_coeff() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void SparsePoly::add_term(const Exponent& e, const GaussRat& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::InvalidInput, "exponent length mismatch");
    for (int x : e)
        if (x < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same(a, b);
    SparsePoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            GaussRat c = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(e, c);
            if (!inserted) it->second += c;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
}

SparsePoly& SparsePoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::pow(int k) const {
    if (k < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in polynomial power");
    SparsePoly r = constant(nvars_, GaussRat(1)), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

SparsePoly SparsePoly::derivative(std::size_t v) const {
    if (v >= nvars_) throw Error(ErrorKind::InvalidInput, "variable index out of range");
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent f = e;
        f[v] -= 1;
        r.add_term(f, c * GaussRat(e[v]));
    }
    return r;
}

SparsePoly SparsePoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

GaussRat SparsePoly::eval(const std::vector<GaussRat>& x) const {
    if (x.size() != nvars_) throw Error(ErrorKind::InvalidInput, "evaluation point has wrong dimension");
    GaussRat s(0);
    for (const auto& [e, c] : terms_) {
        GaussRat t = c;
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k]) t *= nevwb::pow(x[k], e[k]);
        s += t;
    }
    return s;
}

std::complex<double> SparsePoly::eval(const std::vector<std::complex<double>>& x) const {
    if (x.size() != nvars_) throw Error(ErrorKind::InvalidInput, "evaluation point has wrong dimension");
    std::complex<double> s = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t k = 0; k < nvars_; ++k)
            for (int j = 0; j < e[k]; ++j) t *= x[k];
        s += t;
    }
    return s;
}

SparsePoly SparsePoly::partial_eval(std::size_t v, const GaussRat& val) const {
    SparsePoly r(nvars_);
    std::vector<GaussRat> powers;
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[v])
            powers.push_back(powers.empty() ? GaussRat(1) : powers.back() * val);
        Exponent f = e;
        f[v] = 0;
        r.add_term(f, c * powers[e[v]]);
    }
    return r;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& images) const {
    if (images.size() != nvars_) throw Error(ErrorKind::InvalidInput, "compose: wrong number of images");
    std::size_t m = images.empty() ? 0 : images[0].num_vars();
    for (const auto& im : images) check_same(im, images[0]);
    // cache powers of each image
    std::vector<std::vector<SparsePoly>> pw(nvars_);
    SparsePoly r(m);
    for (const auto& [e, c] : terms_) {
        SparsePoly t = constant(m, c);
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            auto& cache = pw[k];
            if (cache.empty()) cache.push_back(constant(m, GaussRat(1)));
            while (static_cast<int>(cache.size()) <= e[k]) cache.push_back(cache.back() * images[k]);
            t *= cache[e[k]];
        }
        r += t;
    }
    return r;
}

std::vector<SparsePoly> SparsePoly::coeffs_in(std::size_t v) const {
    int d = degree_in(v);
    std::vector<SparsePoly> out(d < 0 ? 0 : d + 1, SparsePoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[v] = 0;
        out[e[v]].add_term(f, c);
    }
    return out;
}

SparsePoly SparsePoly::from_coeffs_in(std::size_t v, const std::vector<SparsePoly>& c) {
    if (c.empty()) return SparsePoly(0);
    SparsePoly r(c[0].num_vars());
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (const auto& [e, x] : c[k].terms()) {
            Exponent f = e;
            f[v] += static_cast<int>(k);
            r.add_term(f, x);
        }
    }
    return r;
}

SparsePoly SparsePoly::lc_in(std::size_t v) const {
    int d = degree_in(v);
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] != d) continue;
        Exponent f = e;
        f[v] = 0;
        r.add_term(f, c);
    }
    return r;
}

SparsePoly SparsePoly::relabel(std::size_t nvars, const std::vector<std::size_t>& placement) const {
    if (placement.size() != nvars_) throw Error(ErrorKind::InvalidInput, "relabel: placement size mismatch");
    SparsePoly r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f(nvars, 0);
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (placement[k] >= nvars) {
                if (e[k]) throw Error(ErrorKind::InvalidInput, "relabel drops a used variable");
                continue;
            }
            f[placement[k]] += e[k];
        }
        r.add_term(f, c);
    }
    return r;
}

SparsePoly SparsePoly::homogeneous_part(int deg) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s == deg) r.add_term(e, c);
    }
    return r;
}

Exponent SparsePoly::strip_monomial_content(SparsePoly& out) const {
    Exponent m(nvars_, 0);
    if (terms_.empty()) {
        out = *this;
        return m;
    }
    for (std::size_t k = 0; k < nvars_; ++k) m[k] = min_degree_in(k);
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t k = 0; k < nvars_; ++k) f[k] -= m[k];
        r.add_term(f, c);
    }
    out = std::move(r);
    return m;
}

std::vector<GaussRat> SparsePoly::univariate_coeffs() const {
    if (nvars_ != 1) throw Error(ErrorKind::InvalidInput, "expected a univariate polynomial");
    int d = degree_in(0);
    std::vector<GaussRat> c(d < 0 ? 0 : d + 1, GaussRat(0));
    for (const auto& [e, x] : terms_) c[e[0]] = x;
    return c;
}

SparsePoly SparsePoly::from_univariate(const std::vector<GaussRat>& c) {
    SparsePoly p(1);
    for (std::size_t k = 0; k < c.size(); ++k) p.add_term({static_cast<int>(k)}, c[k]);
    return p;
}

std::vector<std::string> default_var_names(std::size_t n, const std::string& stem) {
    std::vector<std::string> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(stem + std::to_string(k));
    return v;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    auto names = names_in.size() == nvars_ ? names_in : default_var_names(nvars_);
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            if (any) mono << "*";
            mono << names[k];
            if (e[k] > 1) mono << "^" << e[k];
            any = true;
        }
        std::string cs;
        bool neg = false;
        GaussRat cc = c;
        if (cc.is_real() && sgn(cc.re()) < 0) {
            neg = true;
            cc = -cc;
        }
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (!any)
            os << cc.to_string();
        else if (cc.is_one())
            os << mono.str();
        else
            os << cc.to_string() << "*" << mono.str();
        first = false;
    }
    return os.str();
}

}  // namespace nevwb
