#include "nevwb/nevanlinna.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<cplx> coeffs_of(const SparsePoly& p) {
    std::vector<cplx> c;
    if (p.is_zero()) return c;
    for (const auto& g : p.univariate_coeffs()) c.push_back(g.to_complex());
    return c;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

// Double-precision evaluator for a MeroFn.
class FastMero {
public:
    explicit FastMero(const MeroFn& f) : zero_(f.is_zero()) {
        if (zero_) return;
        log_scalar_ = std::log(f.scalar().abs());
        for (const auto& fm : f.factors()) factors_.push_back({coeffs_of(fm.poly), fm.mult});
        q_ = coeffs_of(f.exp_part());
    }
    double log_abs(cplx z) const {
        if (zero_) return -INFINITY;
        double s = log_scalar_;
        for (const auto& [c, m] : factors_) s += m * std::log(std::abs(horner(c, z)));
        return s + horner(q_, z).real();
    }

private:
    bool zero_;
    double log_scalar_ = 0.0;
    std::vector<std::pair<std::vector<cplx>, int>> factors_;
    std::vector<cplx> q_;
};

// Double-precision evaluator for a MeroSum, returning scaled values.
class FastSum {
public:
    explicit FastSum(const MeroSum& f) {
        for (const auto& [k, r] : f.groups())
            groups_.push_back({coeffs_of(MeroSum::key_poly(k)), coeffs_of(r.num()), coeffs_of(r.den())});
    }
    ScaledValue eval(cplx z) const {
        ScaledValue out;
        double mx = -INFINITY;
        std::array<std::pair<double, double>, 64> small;
        std::vector<std::pair<double, double>> big;
        auto* parts = groups_.size() <= small.size() ? small.data() : (big.resize(groups_.size()), big.data());
        for (std::size_t k = 0; k < groups_.size(); ++k) {
            const auto& g = groups_[k];
            cplx q = horner(g.q, z);
            cplx r = horner(g.num, z) / horner(g.den, z);
            double lm = r == cplx(0) ? -INFINITY : q.real() + std::log(std::abs(r));
            parts[k] = {lm, q.imag() + std::arg(r)};
            mx = std::max(mx, lm);
        }
        if (mx == -INFINITY || !std::isfinite(mx)) {
            out.log_scale = mx;
            out.v = mx == -INFINITY ? cplx(0) : cplx(NAN, NAN);
            return out;
        }
        cplx s = 0;
        for (std::size_t k = 0; k < groups_.size(); ++k)
            if (parts[k].first > -INFINITY) s += std::polar(std::exp(parts[k].first - mx), parts[k].second);
        out.log_scale = mx;
        out.v = s;
        return out;
    }

private:
    struct Group {
        std::vector<cplx> q, num, den;
    };
    std::vector<Group> groups_;
};

bool on_circle(double modulus, double r, double rel_tol) { return std::abs(modulus - r) <= rel_tol * r; }

bool at_origin(const DivisorPoint& p) {
    if (p.exact) return p.exact->is_zero();
    return std::abs(p.z) < 1e-12;
}

}  // namespace

QuadValue circle_mean(const std::function<double(double)>& g, const QuadOptions& opt,
                      const std::vector<double>& breakpoints) {
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> cuts;
    const int panels = 16;
    for (int k = 0; k <= panels; ++k) cuts.push_back(kTwoPi * k / panels);
    for (double b : breakpoints) {
        double t = std::fmod(b, kTwoPi);
        if (t < 0) t += kTwoPi;
        cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return b - a < 1e-12; }), cuts.end());
    if (cuts.back() < kTwoPi) cuts.back() = kTwoPi;
    // global adaptive refinement: always split the panel with the largest error estimate
    struct Panel {
        double a, b, v, e;
        bool operator<(const Panel& o) const { return e < o.e; }
    };
    auto eval_panel = [&](double a, double b) {
        double e = 0.0;
        double v = gauss_kronrod<double, 31>::integrate(g, a, b, 0, 0.0, &e);
        return Panel{a, b, v, e};
    };
    std::priority_queue<Panel> heap;
    double v = 0.0, err = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Panel p = eval_panel(cuts[k], cuts[k + 1]);
        v += p.v;
        err += p.e;
        heap.push(p);
    }
    const double target = 0.05 * opt.abs_tol * kTwoPi;
    for (unsigned it = 0; it < opt.max_panels && err > target && !heap.empty(); ++it) {
        Panel p = heap.top();
        if (p.b - p.a < 1e-14) break;
        heap.pop();
        double m = 0.5 * (p.a + p.b);
        Panel l = eval_panel(p.a, m), r = eval_panel(m, p.b);
        v += l.v + r.v - p.v;
        err += l.e + r.e - p.e;
        heap.push(l);
        heap.push(r);
    }
    // recompute the sums to shed accumulated rounding
    v = 0.0;
    err = 0.0;
    for (; !heap.empty(); heap.pop()) {
        v += heap.top().v;
        err += heap.top().e;
    }
    QuadValue q{v / kTwoPi, err / kTwoPi, false};
    if (!std::isfinite(q.value) || !std::isfinite(q.error) || q.error > opt.fail_tol * std::max(1.0, std::abs(q.value))) {
        std::ostringstream os;
        os << "quadrature did not converge; best estimate " << q.value << " with error " << q.error;
        throw Error(ErrorKind::NonConvergence, os.str());
    }
    q.flagged = q.error > opt.abs_tol;
    return q;
}

std::vector<double> feature_angles(const Divisor& d, double r) {
    std::vector<double> out;
    for (const auto& p : d) {
        double a = std::abs(p.z);
        if (a == 0.0) continue;
        double th = std::arg(p.z);
        out.push_back(th);
        double w = 2.0 * std::abs(a - r) / r;
        if (w < 0.5) {
            out.push_back(th - w);
            out.push_back(th + w);
        }
    }
    return out;
}

RadiusGrid make_grid(double r_min, double r_max, std::size_t count) {
    if (!(r_min > 0) || !(r_max > r_min) || count < 2) {
        if (count == 1 && r_min > 0 && r_max == r_min) return {r_min, r_max, {r_min}, 31};
        throw Error(ErrorKind::InvalidInput, "grid needs 0 < r_min < r_max and at least two points");
    }
    RadiusGrid g{r_min, r_max, {}, 31};
    double a = std::log(r_min), b = std::log(r_max);
    for (std::size_t k = 0; k < count; ++k) g.points.push_back(std::exp(a + (b - a) * k / (count - 1)));
    g.points.front() = r_min;
    g.points.back() = r_max;
    return g;
}

RadiusGrid perturb_grid(RadiusGrid g, const std::vector<double>& moduli, double rel_tol, double rel_step) {
    for (double& r : g.points) {
        for (int guard = 0; guard < 1000; ++guard) {
            bool hit = false;
            for (double m : moduli)
                if (on_circle(m, r, rel_tol)) hit = true;
            if (!hit) break;
            r *= 1.0 + rel_step;
        }
    }
    for (std::size_t k = 1; k < g.points.size(); ++k)
        if (!(g.points[k] > g.points[k - 1])) throw Error(ErrorKind::NumericDomain, "perturbed grid is no longer increasing");
    if (!g.points.empty()) {
        g.r_min = g.points.front();
        g.r_max = g.points.back();
    }
    return g;
}

bool grid_clear_of(const RadiusGrid& g, const std::vector<double>& moduli, double rel_tol) {
    for (double r : g.points)
        for (double m : moduli)
            if (on_circle(m, r, rel_tol)) return false;
    return true;
}

double geometric_midpoint(const RadiusGrid& g) { return std::sqrt(g.r_min * g.r_max); }

double counting_from_divisor(const Divisor& d, Target t, double r, int trunc, double rel_tol) {
    if (!(r > 0)) throw Error(ErrorKind::InvalidInput, "radius must be positive");
    double s = 0.0;
    int sign = t == Target::Zero ? 1 : -1;
    for (const auto& p : d) {
        int m = p.mult * sign;
        if (m <= 0) continue;
        int w = std::min(m, trunc);
        if (at_origin(p)) {
            s += w * std::log(r);
            continue;
        }
        double a = std::abs(p.z);
        if (on_circle(a, r, rel_tol))
            throw Error(ErrorKind::NumericDomain, "divisor point on the circle |z| = " + std::to_string(r) +
                                                      "; perturb the grid");
        if (a < r) s += w * std::log(r / a);
    }
    return s;
}

double counting_N(const MeroFn& f, Target t, double r, int trunc) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "counting function of the zero function");
    return counting_from_divisor(t == Target::Zero ? f.zeros() : f.poles(), t, r, trunc);
}

QuadValue proximity_m(const MeroFn& f, double r, const QuadOptions& opt) {
    if (f.is_zero()) return {};
    for (const auto& p : f.poles())
        if (on_circle(std::abs(p.z), r, 1e-9)) throw Error(ErrorKind::NumericDomain, "pole on the circle; perturb the grid");
    FastMero F(f);
    Divisor d = f.zeros();
    for (const auto& p : f.poles()) d.push_back(p);
    return circle_mean([&](double th) { return std::max(0.0, F.log_abs(std::polar(r, th))); }, opt,
                       feature_angles(d, r));
}

QuadValue proximity_m(const MeroSum& f, double r, const QuadOptions& opt) {
    if (f.is_zero()) return {};
    if (auto m = f.as_mero()) return proximity_m(*m, r, opt);
    SparsePoly D = f.common_denominator();
    Divisor poles;
    if (!D.is_constant())
        for (const auto& p : roots_certified(D).roots) {
            if (on_circle(std::abs(p.center), r, 1e-9))
                throw Error(ErrorKind::NumericDomain, "pole on the circle; perturb the grid");
            poles.push_back({p.center, -p.multiplicity, p.radius, p.exact});
        }
    FastSum F(f);
    return circle_mean([&](double th) { return std::max(0.0, F.eval(std::polar(r, th)).log_abs()); }, opt,
                       feature_angles(poles, r));
}

QuadValue characteristic_T(const MeroFn& f, double r, const QuadOptions& opt) {
    QuadValue m = proximity_m(f, r, opt);
    if (f.is_zero()) return m;
    m.value += counting_N(f, Target::Pole, r);
    return m;
}

QuadValue circle_mean_log_abs(const MeroSum& f, double r, const QuadOptions& opt) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "log modulus of the zero function");
    FastSum F(f);
    return circle_mean([&](double th) { return F.eval(std::polar(r, th)).log_abs(); }, opt);
}

namespace {

void validate_tuple(const std::vector<MeroSum>& tuple, double r) {
    std::vector<const MeroSum*> nz;
    for (const auto& f : tuple) {
        if (f.is_zero()) continue;
        if (!f.is_entire()) throw Error(ErrorKind::InvalidInput, "tuple components must be entire");
        nz.push_back(&f);
    }
    if (nz.empty()) throw Error(ErrorKind::InvalidInput, "tuple has only zero components");

    std::vector<MeroFn> single;
    for (auto* f : nz)
        if (auto m = f->as_mero()) single.push_back(*m);
    if (single.size() == nz.size()) {
        std::optional<SparsePoly> g;
        for (const auto& m : single) {
            SparsePoly p = m.rational_part().num().monic();
            g = g ? gcd(*g, p) : p;
            if (g->is_constant()) return;
        }
        throw Error(ErrorKind::InvalidInput, "tuple components have a common zero: " + g->to_string({"z"}));
    }
    // mixed tuple: test the zeros of one component against the others
    Divisor zs = single.empty() ? entire_zeros(*nz.front(), r) : single.front().zeros();
    std::vector<FastSum> fs;
    for (auto* f : nz) fs.emplace_back(*f);
    for (const auto& p : zs) {
        bool all = true;
        for (const auto& F : fs) {
            ScaledValue v = F.eval(p.z);
            if (std::abs(v.v) > 1e-8) all = false;
        }
        if (all) throw Error(ErrorKind::InvalidInput, "tuple components have a common zero near " +
                                                          std::to_string(p.z.real()) + "+" + std::to_string(p.z.imag()) + "i");
    }
}

}  // namespace

QuadValue characteristic_T(const std::vector<MeroSum>& tuple, double r, const QuadOptions& opt) {
    validate_tuple(tuple, r);
    std::vector<FastSum> fs;
    for (const auto& f : tuple)
        if (!f.is_zero()) fs.emplace_back(f);
    auto logmax = [&](cplx z) {
        double m = -INFINITY;
        for (const auto& F : fs) m = std::max(m, F.eval(z).log_abs());
        return m;
    };
    QuadValue q = circle_mean([&](double th) { return logmax(std::polar(r, th)); }, opt);
    q.value -= logmax(0.0);
    return q;
}

QuadValue characteristic_T(const std::vector<MeroFn>& tuple, double r, const QuadOptions& opt) {
    std::vector<MeroSum> s(tuple.begin(), tuple.end());
    return characteristic_T(s, r, opt);
}

double jensen_constant(const MeroFn& f) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "Jensen constant of the zero function");
    return f.log_abs_leading_coefficient();
}

double gcd_counting(const MeroFn& f, const MeroFn& g, double r) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidInput, "gcd counting needs nonzero functions");
    Divisor common;
    for (const auto& a : f.factors()) {
        if (a.mult <= 0) continue;
        for (const auto& b : g.factors()) {
            if (b.mult <= 0) continue;
            SparsePoly h = gcd(a.poly, b.poly);
            if (h.is_constant()) continue;
            for (const auto& x : roots_certified(h).roots)
                common.push_back({x.center, std::min(a.mult, b.mult) * x.multiplicity, x.radius, x.exact});
        }
    }
    return counting_from_divisor(common, Target::Zero, r);
}

double gcd_counting(const Divisor& f, const Divisor& g, double r, double match_tol) {
    Divisor common;
    for (const auto& p : f) {
        if (p.mult <= 0) continue;
        const DivisorPoint* hit = nullptr;
        for (const auto& q : g) {
            if (q.mult <= 0) continue;
            double slack = p.radius + q.radius + match_tol * std::max(1.0, std::abs(p.z));
            if (std::abs(p.z - q.z) > slack) continue;
            if (hit) throw Error(ErrorKind::NumericDomain, "ambiguous divisor matching; tighten the root tolerance");
            hit = &q;
        }
        if (hit) common.push_back({p.z, std::min(p.mult, hit->mult), std::max(p.radius, hit->radius), p.exact});
    }
    return counting_from_divisor(common, Target::Zero, r);
}

// ---------------------------------------------------------------- zero finder

namespace {

struct BoundaryHit {};

class ZeroFinder {
public:
    ZeroFinder(const MeroSum& f, double R, const ZeroFinderOptions& opt)
        : F_(f), DF_(f.derivative()), R_(R), opt_(opt) {}

    Divisor run() {
        double h = 1.02 * R_ + 1e-3;
        std::array<double, 4> box{-h * 1.000731, -h * 0.999417, h * 0.998813, h * 1.001129};
        int k = count_with_retry(box);
        process(box, k);
        Divisor out;
        for (const auto& p : found_)
            if (std::abs(p.z) <= R_) out.push_back(p);
        return out;
    }

private:
    cplx unit(cplx z) const {
        ScaledValue v = F_.eval(z);
        if (v.v == cplx(0) || !std::isfinite(v.v.real()) || !std::isfinite(v.v.imag())) throw BoundaryHit{};
        return v.v / std::abs(v.v);
    }

    double log_derivative_abs(cplx z) const {
        ScaledValue fv = F_.eval(z), dv = DF_.eval(z);
        if (dv.v == cplx(0)) return 0.0;
        return std::abs(dv.v / fv.v) * std::exp(dv.log_scale - fv.log_scale);
    }

    double phase(cplx a, cplx ua, cplx b, cplx ub, int depth) const {
        cplx m = 0.5 * (a + b);
        cplx um = unit(m);
        double dab = std::arg(ub / ua), dam = std::arg(um / ua), dmb = std::arg(ub / um);
        // the sampled phase steps must be small and the local rotation rate must not hide a full turn
        if (std::abs(dam) < 0.7 && std::abs(dmb) < 0.7 && std::abs(dam + dmb - dab) < 1e-9 &&
            log_derivative_abs(m) * std::abs(b - a) < 1.0)
            return dam + dmb;
        if (depth >= opt_.max_edge_depth) throw BoundaryHit{};
        return phase(a, ua, m, um, depth + 1) + phase(m, um, b, ub, depth + 1);
    }

    double edge(cplx a, cplx b) const {
        const int pieces = 8;
        double s = 0.0;
        cplx prev = a, uprev = unit(a);
        for (int k = 1; k <= pieces; ++k) {
            cplx z = a + (b - a) * (static_cast<double>(k) / pieces);
            cplx uz = unit(z);
            s += phase(prev, uprev, z, uz, 0);
            prev = z;
            uprev = uz;
        }
        return s;
    }

    int count(const std::array<double, 4>& b) const {
        cplx c0(b[0], b[1]), c1(b[2], b[1]), c2(b[2], b[3]), c3(b[0], b[3]);
        double w = edge(c0, c1) + edge(c1, c2) + edge(c2, c3) + edge(c3, c0);
        double k = w / kTwoPi;
        if (std::abs(k - std::round(k)) > 0.05 || k < -0.5) throw BoundaryHit{};
        return static_cast<int>(std::lround(k));
    }

    int count_with_retry(std::array<double, 4>& b) const {
        for (int attempt = 0; attempt < 6; ++attempt) {
            try {
                return count(b);
            } catch (const BoundaryHit&) {
                double g = 1e-3 * (attempt + 1) * std::max(b[2] - b[0], b[3] - b[1]);
                b = {b[0] - g * 0.731, b[1] - g * 0.417, b[2] + g * 0.813, b[3] + g * 0.129};
            }
        }
        throw Error(ErrorKind::NonConvergence, "zero finder could not clear the search boundary");
    }

    std::optional<cplx> newton(cplx z, int mult, const std::array<double, 4>& b) const {
        double size = std::max(b[2] - b[0], b[3] - b[1]);
        for (int it = 0; it < 80; ++it) {
            ScaledValue fv = F_.eval(z), dv = DF_.eval(z);
            if (fv.v == cplx(0)) return z;
            if (dv.v == cplx(0) || !std::isfinite(dv.log_scale)) return std::nullopt;
            cplx step = static_cast<double>(mult) * (fv.v / dv.v) * std::exp(fv.log_scale - dv.log_scale);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
            z -= step;
            if (std::abs(step) <= opt_.newton_tol * std::max(1.0, std::abs(z))) {
                double pad = 0.01 * size;
                if (z.real() < b[0] - pad || z.real() > b[2] + pad || z.imag() < b[1] - pad || z.imag() > b[3] + pad)
                    return std::nullopt;
                return z;
            }
        }
        return std::nullopt;
    }

    void process(const std::array<double, 4>& b, int k) {
        if (k == 0) return;
        double size = std::max(b[2] - b[0], b[3] - b[1]);
        cplx c(0.5 * (b[0] + b[2]), 0.5 * (b[1] + b[3]));
        if (k == 1) {
            if (auto z = newton(c, 1, b)) {
                found_.push_back({*z, 1, opt_.newton_tol * std::max(1.0, std::abs(*z)) * 10, std::nullopt});
                return;
            }
        }
        if (size < opt_.min_box * std::max(1.0, R_)) {
            cplx z = newton(c, k, b).value_or(c);
            found_.push_back({z, k, size, std::nullopt});
            return;
        }
        static const std::array<std::pair<double, double>, 4> splits{
            {{0.5371, 0.4629}, {0.4417, 0.5583}, {0.6013, 0.3911}, {0.3787, 0.6231}}};
        for (const auto& [fx, fy] : splits) {
            double xm = b[0] + fx * (b[2] - b[0]), ym = b[1] + fy * (b[3] - b[1]);
            std::array<std::array<double, 4>, 4> kids{{{b[0], b[1], xm, ym},
                                                       {xm, b[1], b[2], ym},
                                                       {xm, ym, b[2], b[3]},
                                                       {b[0], ym, xm, b[3]}}};
            std::array<int, 4> ks{};
            try {
                int total = 0;
                for (int q = 0; q < 4; ++q) total += ks[q] = count(kids[q]);
                if (total != k) continue;
            } catch (const BoundaryHit&) {
                continue;
            }
            for (int q = 0; q < 4; ++q) process(kids[q], ks[q]);
            return;
        }
        // every split met a zero on an edge: accept the cluster at the refined center
        cplx z = newton(c, k, b).value_or(c);
        found_.push_back({z, k, size, std::nullopt});
    }

    FastSum F_, DF_;
    double R_;
    ZeroFinderOptions opt_;
    Divisor found_;
};

}  // namespace

Divisor entire_zeros(const MeroSum& f, double R, const ZeroFinderOptions& opt) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zeros of the zero function");
    if (!f.is_entire()) throw Error(ErrorKind::InvalidInput, "entire_zeros needs an entire function");
    if (auto m = f.as_mero()) {
        Divisor out;
        for (const auto& p : m->zeros())
            if (std::abs(p.z) <= R) out.push_back(p);
        return out;
    }
    return ZeroFinder(f, R, opt).run();
}

MeroSum clear_denominators(const MeroSum& f) {
    SparsePoly D = f.common_denominator();
    if (D.is_constant()) return f;
    return MeroSum(MeroFn::from_poly(D)) * f;
}

Divisor divisor_in_disk(const MeroSum& f, double R, const ZeroFinderOptions& opt) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "divisor of the zero function");
    if (auto m = f.as_mero()) {
        Divisor out;
        for (const auto& p : m->zeros())
            if (std::abs(p.z) <= R) out.push_back(p);
        for (const auto& p : m->poles())
            if (std::abs(p.z) <= R) out.push_back(p);
        return out;
    }
    SparsePoly D = f.common_denominator();
    Divisor d = entire_zeros(clear_denominators(f), R, opt);
    if (!D.is_constant())
        for (const auto& p : roots_certified(D).roots)
            if (std::abs(p.center) <= R) d.push_back({p.center, -p.multiplicity, p.radius, p.exact});
    return divisor_merge(d, 1e-8);
}

std::vector<double> divisor_moduli(const Divisor& d) {
    std::vector<double> m;
    for (const auto& p : d) m.push_back(std::abs(p.z));
    return m;
}

std::vector<double> evaluate_on_grid(const RadiusGrid& g, const std::function<double(double)>& fn) {
    std::vector<std::future<double>> fut;
    for (double r : g.points) fut.push_back(std::async(std::launch::async, fn, r));
    std::vector<double> out;
    for (auto& f : fut) out.push_back(f.get());
    return out;
}

}  // namespace nevwb
