#include "nevwb/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "nevwb/error.hpp"

namespace nevwb {

LaurentBivar LaurentBivar::monomial(int lam, int t, const GaussRat& c) {
    LaurentBivar r;
    r.add_term(lam, t, c);
    return r;
}

LaurentBivar LaurentBivar::from_poly(const SparsePoly& p) {
    if (p.num_vars() != 2) throw Error(ErrorKind::InvalidInput, "LaurentBivar needs a two-variable polynomial");
    LaurentBivar r;
    for (const auto& [e, c] : p.terms()) r.add_term(e[0], e[1], c);
    return r;
}

void LaurentBivar::add_term(int lam, int t, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(Key{lam, t}, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int LaurentBivar::min_exp(int which) const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "exponent range of zero Laurent polynomial");
    int m = terms_.begin()->first[which];
    for (const auto& [k, c] : terms_) m = std::min(m, k[which]);
    return m;
}

int LaurentBivar::max_exp(int which) const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "exponent range of zero Laurent polynomial");
    int m = terms_.begin()->first[which];
    for (const auto& [k, c] : terms_) m = std::max(m, k[which]);
    return m;
}

SparsePoly LaurentBivar::to_poly() const {
    SparsePoly p(2);
    for (const auto& [k, c] : terms_) {
        if (k[0] < 0 || k[1] < 0) throw Error(ErrorKind::InvalidInput, "Laurent polynomial has negative exponents");
        p.add_term({k[0], k[1]}, c);
    }
    return p;
}

LaurentBivar LaurentBivar::shifted(int lam, int t) const {
    LaurentBivar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k[0] + lam, k[1] + t}, c);
    return r;
}

LaurentBivar& LaurentBivar::operator+=(const LaurentBivar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], c);
    return *this;
}

LaurentBivar& LaurentBivar::operator-=(const LaurentBivar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], -c);
    return *this;
}

LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b) {
    LaurentBivar r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka[0] + kb[0], ka[1] + kb[1], ca * cb);
    return r;
}

LaurentBivar LaurentBivar::pow(int k) const {
    if (k < 0) {
        if (terms_.size() != 1) throw Error(ErrorKind::InvalidInput, "negative power of a non-monomial");
        const auto& [key, c] = *terms_.begin();
        return monomial(key[0] * k, key[1] * k, nevwb::pow(c, k));
    }
    LaurentBivar r = monomial(0, 0, GaussRat(1)), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

std::string LaurentBivar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.to_string();
        if (it->first[0]) os << "*L^" << it->first[0];
        if (it->first[1]) os << "*T^" << it->first[1];
    }
    return os.str();
}

LaurentBivar substitute_monomials(const SparsePoly& p, const std::vector<LaurentBivar>& images) {
    if (images.size() != p.num_vars()) throw Error(ErrorKind::InvalidInput, "substitute_monomials: image count");
    LaurentBivar r;
    for (const auto& [e, c] : p.terms()) {
        LaurentBivar t = LaurentBivar::monomial(0, 0, c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t = t * images[k].pow(e[k]);
        r += t;
    }
    return r;
}

}  // namespace nevwb
