#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace nevwb {

// Exact a + b*i with a, b rational. mpq_class keeps both parts canonical.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return GaussRat(0, 1); }
    // "p/q" or integer string
    static mpq_class parse_rational(const std::string& s);
    static GaussRat from_strings(const std::string& re, const std::string& im);
    // exact conversion of a binary double
    static GaussRat from_complex(std::complex<double> z);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    double abs() const { return std::abs(to_complex()); }
    std::string to_string() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // total order used only for canonical sorting
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussRat pow(const GaussRat& x, long k);
std::string rational_to_string(const mpq_class& q);

}  // namespace nevwb
