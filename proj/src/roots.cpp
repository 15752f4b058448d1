#include "nevwb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

using cld = std::complex<long double>;

SparsePoly to_univariate(const SparsePoly& p, std::size_t v) {
    SparsePoly u(1);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k)
            if (k != v && e[k] != 0) throw Error(ErrorKind::InvalidInput, "polynomial is not univariate in the chosen variable");
        u.add_term({e[v]}, c);
    }
    return u;
}

SparsePoly from_univariate_in(const SparsePoly& u, std::size_t nvars, std::size_t v) {
    return u.relabel(nvars, {v});
}

namespace {

// continued-fraction best rational approximation with bounded denominator
std::optional<mpq_class> best_rational(double x, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double r = x;
    for (int it = 0; it < 64; ++it) {
        long double a = std::floor(r);
        long double h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        long double frac = r - a;
        if (std::fabs(frac) < 1e-18L) break;
        r = 1.0L / frac;
        if (std::fabs(static_cast<double>(h1 / k1) - x) == 0.0) break;
    }
    if (k1 == 0) return std::nullopt;
    mpq_class q(mpz_class(static_cast<long>(h1)), mpz_class(static_cast<long>(k1)));
    q.canonicalize();
    return q;
}

cld horner(const std::vector<cld>& c, cld z, cld* deriv) {
    cld p = 0, dp = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    if (deriv) *deriv = dp;
    return p;
}

double exact_abs_value(const SparsePoly& q, std::complex<double> z) {
    GaussRat v = q.eval({GaussRat::from_complex(z)});
    return std::sqrt(v.norm().get_d());
}

struct SqfRoots {
    std::vector<RootEnclosure> roots;
    bool ok = false;
};

// Roots of a monic squarefree univariate q of degree >= 1 with q(0) != 0.
SqfRoots isolate_squarefree(const SparsePoly& q, double tol) {
    auto cq = q.univariate_coeffs();
    int n = static_cast<int>(cq.size()) - 1;
    std::vector<cld> c(cq.size());
    for (std::size_t k = 0; k < cq.size(); ++k) {
        auto z = cq[k].to_complex();
        c[k] = cld(z.real(), z.imag());
    }
    cld lc = c.back();
    for (auto& x : c) x /= lc;

    SqfRoots best;
    for (int attempt = 0; attempt < 4; ++attempt) {
        // starting points on a circle of the geometric-mean radius
        long double r0 = std::pow(std::abs(c[0]), 1.0L / n);
        if (!(r0 > 0) || !std::isfinite(static_cast<double>(r0))) r0 = 1;
        std::vector<cld> z(n);
        long double phase = 0.4L + 0.37L * attempt;
        for (int k = 0; k < n; ++k) {
            long double ang = 2 * std::numbers::pi_v<long double> * k / n + phase;
            z[k] = std::polar(r0 * (1.0L + 0.01L * attempt), ang);
        }
        // Aberth-Ehrlich
        for (int it = 0; it < 800; ++it) {
            long double maxstep = 0;
            for (int i = 0; i < n; ++i) {
                cld dp;
                cld p = horner(c, z[i], &dp);
                if (p == cld(0)) continue;
                cld ratio = p / dp;
                cld s = 0;
                for (int j = 0; j < n; ++j)
                    if (j != i) s += 1.0L / (z[i] - z[j]);
                cld w = ratio / (1.0L - ratio * s);
                if (!std::isfinite(static_cast<double>(std::abs(w)))) w = ratio;
                z[i] -= w;
                maxstep = std::max(maxstep, std::abs(w) / std::max(1.0L, std::abs(z[i])));
            }
            if (maxstep < 1e-17L) break;
        }
        // Newton polish
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < 3; ++k) {
                cld dp;
                cld p = horner(c, z[i], &dp);
                if (dp == cld(0)) break;
                z[i] -= p / dp;
            }
        }

        std::vector<RootEnclosure> out(n);
        for (int i = 0; i < n; ++i) {
            std::complex<double> zc(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
            out[i].center = zc;
            double rad = std::max(1e-300, 1e-15 * std::abs(zc));
            if (auto qr = rationalize(zc, rad * 4 + 1e-13)) {
                if (q.eval({*qr}).is_zero()) {
                    out[i].exact = *qr;
                    out[i].center = qr->to_complex();
                }
            }
        }
        // Weierstrass inclusion radii with exact residuals
        bool ok = true;
        const GaussRat lcq = q.leading_coeff();
        double alc = lcq.abs();
        for (int i = 0; i < n; ++i) {
            if (out[i].exact) {
                out[i].radius = 0;
                continue;
            }
            long double prod = 1;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                prod *= std::abs(cld(out[i].center.real(), out[i].center.imag()) -
                                 cld(out[j].center.real(), out[j].center.imag()));
            }
            double res = exact_abs_value(q, out[i].center);
            double rad = prod > 0 ? static_cast<double>(n * res / (alc * prod)) : INFINITY;
            out[i].radius = rad * (1 + 1e-10) + 1e-300;
            if (!(out[i].radius <= tol * std::max(1.0, std::abs(out[i].center)))) ok = false;
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius) {
                    ok = false;
                    break;
                }
        best.roots = out;
        if (ok) {
            best.ok = true;
            return best;
        }
    }
    return best;
}

bool root_order(const RootEnclosure& a, const RootEnclosure& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
}

}  // namespace

std::optional<GaussRat> rationalize(std::complex<double> z, double radius, long max_den) {
    auto re = best_rational(z.real(), max_den);
    auto im = best_rational(z.imag(), max_den);
    if (!re || !im) return std::nullopt;
    GaussRat g(*re, *im);
    if (std::abs(g.to_complex() - z) > radius) return std::nullopt;
    return g;
}

AlgebraicRoots roots_certified(const SparsePoly& f_in, double tol) {
    SparsePoly f = f_in.num_vars() == 1 ? f_in : SparsePoly(0);
    if (f_in.num_vars() != 1) {
        std::size_t used = 0, cnt = 0;
        for (std::size_t v = 0; v < f_in.num_vars(); ++v)
            if (f_in.degree_in(v) > 0) {
                used = v;
                ++cnt;
            }
        if (cnt > 1) throw Error(ErrorKind::InvalidInput, "roots_certified needs a univariate polynomial");
        f = to_univariate(f_in, used);
    }
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero polynomial");
    AlgebraicRoots out;
    out.defining_poly = f;
    if (f.is_constant()) return out;
    auto sqf = squarefree_decompose(f);
    bool ok = true;
    std::string why;
    for (std::size_t fi = 0; fi < sqf.factors.size(); ++fi) {
        SparsePoly q = sqf.factors[fi].factor;
        int mult = sqf.factors[fi].multiplicity;
        if (q.eval({GaussRat(0)}).is_zero()) {
            RootEnclosure r;
            r.center = 0;
            r.radius = 0;
            r.exact = GaussRat(0);
            r.multiplicity = mult;
            r.factor_index = fi;
            out.roots.push_back(r);
            q = divide_exact(q, SparsePoly::variable(1, 0));
        }
        if (q.is_constant()) continue;
        if (q.total_degree() == 1) {
            auto c = q.univariate_coeffs();
            RootEnclosure r;
            r.exact = -c[0] / c[1];
            r.center = r.exact->to_complex();
            r.multiplicity = mult;
            r.factor_index = fi;
            out.roots.push_back(r);
            continue;
        }
        auto res = isolate_squarefree(q.monic(), tol);
        if (!res.ok) {
            ok = false;
            why = "root isolation did not reach the requested tolerance for factor " + q.to_string({"z"});
        }
        for (auto& r : res.roots) {
            r.multiplicity = mult;
            r.factor_index = fi;
            out.roots.push_back(r);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), root_order);
    if (!ok) throw RootError(why, out);
    return out;
}

LinearForms factor_linear_forms(const SparsePoly& h, std::size_t x_var, std::size_t y_var, double tol) {
    if (h.is_zero()) throw Error(ErrorKind::InvalidInput, "factor_linear_forms of zero");
    if (!h.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "factor_linear_forms needs a homogeneous form");
    for (std::size_t v = 0; v < h.num_vars(); ++v)
        if (v != x_var && v != y_var && h.degree_in(v) > 0)
            throw Error(ErrorKind::InvalidInput, "form uses a variable other than X and Y");
    LinearForms out;
    out.y_multiplicity = h.min_degree_in(y_var);
    SparsePoly hx = h.partial_eval(y_var, GaussRat(1));
    SparsePoly u = to_univariate(hx, x_var);
    out.deltas = roots_certified(u, tol);
    return out;
}

bool same_algebraic_number(const SparsePoly& p, const RootEnclosure& a, const SparsePoly& q, const RootEnclosure& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    if (a.exact) return q.eval({*a.exact}).is_zero() && b.contains(a.center, 1e-300);
    if (b.exact) return p.eval({*b.exact}).is_zero() && a.contains(b.center, 1e-300);
    if (std::abs(a.center - b.center) > a.radius + b.radius) return false;
    SparsePoly g = gcd(p, q);
    if (g.is_constant()) return false;
    // a (resp. b) is the only root of p (resp. q) in its enclosure, so a common root of p and q
    // meeting both enclosures is a == b
    auto gr = roots_certified(radical(g), 1e-12);
    for (const auto& r : gr.roots) {
        bool in_a = std::abs(r.center - a.center) <= r.radius + a.radius;
        bool in_b = std::abs(r.center - b.center) <= r.radius + b.radius;
        if (in_a && in_b) return true;
    }
    return false;
}

}  // namespace nevwb
