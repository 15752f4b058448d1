#include "nevwb/gauss_rat.hpp"

#include <cctype>
#include <cmath>

#include "nevwb/error.hpp"

namespace nevwb {

mpq_class GaussRat::parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return 0;
    if (t[0] == '+') t = t.substr(1);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw Error(ErrorKind::Parse, "bad rational literal '" + s + "'");
    if (sgn(q.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

GaussRat GaussRat::from_strings(const std::string& re, const std::string& im) {
    return GaussRat(parse_rational(re), parse_rational(im));
}

GaussRat GaussRat::from_complex(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorKind::NumericDomain, "non-finite value cannot be made exact");
    return GaussRat(mpq_class(z.real()), mpq_class(z.imag()));
}

GaussRat GaussRat::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussRat pow(const GaussRat& x, long k) {
    if (k < 0) return pow(x.inverse(), -k);
    GaussRat r(1), b = x;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string GaussRat::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = im_.get_str() + "*i";
    if (sgn(re_) == 0) return im_part;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + im_part + ")";
}

}  // namespace nevwb
