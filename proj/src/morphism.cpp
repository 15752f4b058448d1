#include "nevwb/morphism.hpp"

#include <numeric>
#include <sstream>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

namespace {

void require_plane_form(const SparsePoly& p, const char* what) {
    if (p.num_vars() != 3) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a polynomial in x0, x1, x2");
    if (p.is_zero()) throw Error(ErrorKind::InvalidInput, std::string(what) + " is zero");
    if (!p.is_homogeneous()) throw Error(ErrorKind::InvalidInput, std::string(what) + " is not homogeneous");
}

std::string cplx_string(cplx z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

AlgebraicRoots candidate_coordinates(const SparsePoly& f, const SparsePoly& g, std::size_t elim, std::size_t keep) {
    int df = f.degree_in(elim), dg = g.degree_in(elim);
    SparsePoly r(f.num_vars());
    if (df == 0 && dg == 0)
        r = gcd(f, g);
    else if (df == 0)
        r = f;
    else if (dg == 0)
        r = g;
    else
        r = resultant(f, g, elim);
    if (r.is_zero()) throw Error(ErrorKind::InternalContradiction, "resultant of coprime curves vanished");
    if (r.is_constant()) return {};
    return roots_certified(radical(to_univariate(r, keep)), 1e-13);
}

ProjPoint make_point(std::array<cplx, 3> x, double radius, int chart, std::optional<std::array<GaussRat, 3>> exact) {
    ProjPoint p;
    p.x = x;
    p.radius = radius;
    p.chart = chart;
    p.exact = std::move(exact);
    return p;
}

}  // namespace

std::string ProjPoint::to_string() const {
    std::string s = "[";
    for (int j = 0; j < 3; ++j) {
        if (j) s += ":";
        s += exact ? (*exact)[j].to_string() : cplx_string(x[j]);
    }
    s += "]";
    if (!exact) {
        std::ostringstream os;
        os.precision(2);
        os << " (+-" << radius << ")";
        s += os.str();
    }
    return s;
}

BoundedValue eval_at(const SparsePoly& p, const ProjPoint& P) {
    BoundedValue v;
    if (P.exact) {
        v.value = p.eval(std::vector<GaussRat>(P.exact->begin(), P.exact->end())).to_complex();
        v.exact = true;
        return v;
    }
    std::vector<cplx> x(P.x.begin(), P.x.end());
    v.value = p.eval(x);
    double spread = 0.0, size = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double lo = c.abs(), hi = c.abs();
        for (std::size_t j = 0; j < 3; ++j) {
            lo *= std::pow(std::abs(x[j]), e[j]);
            hi *= std::pow(std::abs(x[j]) + P.radius, e[j]);
        }
        spread += hi - lo;
        size += hi;
    }
    v.bound = spread + 1e-13 * size;
    return v;
}

std::vector<ProjPoint> intersection_points(const SparsePoly& F, const SparsePoly& G) {
    require_plane_form(F, "first curve");
    require_plane_form(G, "second curve");
    if (F.is_constant() || G.is_constant()) return {};
    SparsePoly common = gcd(F, G);
    if (!common.is_constant())
        throw Error(ErrorKind::NonProperIntersection, "curves share the component " + common.to_string({"x0", "x1", "x2"}));
    std::vector<ProjPoint> pts;

    // points on the line x0 = 0
    SparsePoly f0 = F.partial_eval(0, GaussRat(0)), g0 = G.partial_eval(0, GaussRat(0));
    SparsePoly h = f0.is_zero() ? g0 : g0.is_zero() ? f0 : gcd(f0, g0);
    if (!h.is_constant()) {
        LinearForms lf = factor_linear_forms(h, 1, 2, 1e-13);
        for (const auto& r : lf.deltas.roots) {
            std::optional<std::array<GaussRat, 3>> ex;
            if (r.exact) ex = std::array<GaussRat, 3>{GaussRat(0), *r.exact, GaussRat(1)};
            pts.push_back(make_point({cplx(0), r.center, cplx(1)}, r.radius, 2, ex));
        }
        if (lf.y_multiplicity > 0)
            pts.push_back(make_point({cplx(0), cplx(1), cplx(0)}, 0.0, 1,
                                     std::array<GaussRat, 3>{GaussRat(0), GaussRat(1), GaussRat(0)}));
    }

    // affine chart x0 = 1
    SparsePoly f = F.partial_eval(0, GaussRat(1)), g = G.partial_eval(0, GaussRat(1));
    if (!f.is_constant() && !g.is_constant()) {
        AlgebraicRoots xs = candidate_coordinates(f, g, 2, 1);
        AlgebraicRoots ys = candidate_coordinates(f, g, 1, 2);
        for (const auto& a : xs.roots)
            for (const auto& b : ys.roots) {
                if (a.exact && b.exact) {
                    std::vector<GaussRat> e{GaussRat(1), *a.exact, *b.exact};
                    if (F.eval(e).is_zero() && G.eval(e).is_zero())
                        pts.push_back(make_point({cplx(1), a.center, b.center}, 0.0, 0,
                                                 std::array<GaussRat, 3>{GaussRat(1), *a.exact, *b.exact}));
                    continue;
                }
                ProjPoint P = make_point({cplx(1), a.center, b.center}, std::max(a.radius, b.radius), 0, std::nullopt);
                BoundedValue vf = eval_at(F, P), vg = eval_at(G, P);
                if (std::abs(vf.value) <= vf.bound && std::abs(vg.value) <= vg.bound) pts.push_back(P);
            }
    }
    long bezout = static_cast<long>(F.total_degree()) * G.total_degree();
    if (static_cast<long>(pts.size()) > bezout)
        throw Error(ErrorKind::InternalContradiction, "found " + std::to_string(pts.size()) +
                                                          " intersection points, more than the Bezout number " +
                                                          std::to_string(bezout));
    return pts;
}

PowerMorphism PowerMorphism::make(const SparsePoly& F1, const SparsePoly& F2, const SparsePoly& F3, bool check_finite) {
    PowerMorphism m;
    m.F = {F1, F2, F3};
    for (int i = 0; i < 3; ++i) {
        require_plane_form(m.F[i], ("F" + std::to_string(i + 1)).c_str());
        if (m.F[i].is_constant()) throw Error(ErrorKind::InvalidInput, "F" + std::to_string(i + 1) + " is constant");
        m.d[i] = m.F[i].total_degree();
    }
    m.lcm = std::lcm(std::lcm(m.d[0], m.d[1]), m.d[2]);
    for (int i = 0; i < 3; ++i) m.a[i] = m.lcm / m.d[i];
    if (check_finite) {
        std::vector<ProjPoint> pts;
        try {
            pts = intersection_points(F1, F2);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonProperIntersection) throw;
            throw Error(ErrorKind::InvalidInput, std::string("morphism is not finite: ") + e.what());
        }
        for (const auto& P : pts)
            if (!eval_at(F3, P).certainly_nonzero())
                throw Error(ErrorKind::InvalidInput, "morphism is not finite: F1, F2, F3 vanish at " + P.to_string());
    }
    return m;
}

std::array<SparsePoly, 3> PowerMorphism::components() const {
    return {F[0].pow(a[0]), F[1].pow(a[1]), F[2].pow(a[2])};
}

SparsePoly PowerMorphism::pullback(const SparsePoly& P) const {
    if (P.num_vars() != 3) throw Error(ErrorKind::InvalidInput, "pullback expects a polynomial in y0, y1, y2");
    auto c = components();
    return P.compose({c[0], c[1], c[2]});
}

SparsePoly jacobian_det(const PowerMorphism& m, bool reduced) {
    auto rows = reduced ? m.F : m.components();
    PolyMatrix J(3, std::vector<SparsePoly>(3, SparsePoly(3)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) J[i][j] = rows[i].derivative(j);
    return determinant(J);
}

EulerReport euler_identity_check(const PowerMorphism& m) {
    EulerReport r;
    for (int i = 0; i < 3; ++i) {
        SparsePoly s(3);
        for (std::size_t j = 0; j < 3; ++j) s += SparsePoly::variable(3, j) * m.F[i].derivative(j);
        r.euler = r.euler && s == m.F[i] * GaussRat(m.d[i]);
    }
    PolyMatrix D(3, std::vector<SparsePoly>(3, SparsePoly(3)));
    for (int i = 0; i < 3; ++i) {
        D[i][0] = m.F[i] * GaussRat(m.d[i]);
        D[i][1] = m.F[i].derivative(1);
        D[i][2] = m.F[i].derivative(2);
    }
    r.determinant = SparsePoly::variable(3, 0) * jacobian_det(m, true) == determinant(D);
    return r;
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Undecided: return "undecided";
    }
    return "?";
}

GeneralPositionReport general_position_check(const std::vector<SparsePoly>& curves) {
    for (const auto& c : curves) require_plane_form(c, "curve");
    GeneralPositionReport rep;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            auto pts = intersection_points(curves[i], curves[j]);
            rep.points_checked += pts.size();
            for (const auto& P : pts)
                for (std::size_t k = 0; k < curves.size(); ++k) {
                    if (k == i || k == j) continue;
                    BoundedValue v = eval_at(curves[k], P);
                    if (v.certainly_nonzero()) continue;
                    rep.violations.push_back({i, j, k, P, v.exact});
                }
        }
    return rep;
}

bool TransversalityReport::transversal() const {
    for (const auto& e : points)
        if (e.transversal != Decision::Yes) return false;
    return true;
}

TransversalityReport transversality_check(const SparsePoly& F1, const SparsePoly& F2) {
    TransversalityReport rep;
    for (const auto& P : intersection_points(F1, F2)) {
        std::size_t j = P.chart == 0 ? 1 : 0, k = P.chart == 2 ? 1 : 2;
        SparsePoly minor = F1.derivative(j) * F2.derivative(k) - F1.derivative(k) * F2.derivative(j);
        TransversalityEntry e;
        e.point = P;
        e.minor = eval_at(minor, P);
        if (e.minor.certainly_nonzero())
            e.transversal = Decision::Yes;
        else if (e.minor.exact)
            e.transversal = Decision::No;
        rep.points.push_back(e);
    }
    return rep;
}

int vanishing_order(const SparsePoly& P, const SparsePoly& Z) {
    if (P.is_zero()) throw Error(ErrorKind::InvalidInput, "vanishing order of the zero polynomial");
    if (Z.is_constant()) throw Error(ErrorKind::InvalidInput, "vanishing order along a constant");
    int k = 0;
    SparsePoly q = P;
    while (auto r = try_divide(q, Z)) {
        q = *r;
        ++k;
    }
    return k;
}

PushforwardResult pushforward_curve(const PowerMorphism& m, const SparsePoly& Z) {
    require_plane_form(Z, "Z");
    if (Z.is_constant()) throw Error(ErrorKind::InvalidInput, "Z is constant");
    auto u = m.components();
    int base = -1;
    for (int i = 0; i < 3 && base < 0; ++i)
        if (!try_divide(m.F[i], Z)) base = i;
    if (base < 0) throw Error(ErrorKind::InvalidInput, "Z divides every F_i");

    // ring x0, x1, x2, y0, y1, y2
    auto lift = [](const SparsePoly& p) { return p.relabel(6, {0, 1, 2}); };
    std::vector<SparsePoly> eliminants;
    for (std::size_t c = 0; c < 3 && eliminants.size() < 3; ++c) {
        if (Z.partial_eval(c, GaussRat(0)).is_zero()) continue;
        SparsePoly Zc = lift(Z).partial_eval(c, GaussRat(1));
        std::vector<SparsePoly> E;
        SparsePoly ub = lift(u[base]).partial_eval(c, GaussRat(1));
        for (int i = 0; i < 3; ++i) {
            if (i == base) continue;
            SparsePoly ui = lift(u[i]).partial_eval(c, GaussRat(1));
            E.push_back(SparsePoly::variable(6, 3 + i) * ub - SparsePoly::variable(6, 3 + base) * ui);
        }
        std::array<std::size_t, 2> others{c == 0 ? 1u : 0u, c == 2 ? 1u : 2u};
        for (int order = 0; order < 2 && eliminants.size() < 3; ++order) {
            std::size_t e1 = others[order], e2 = others[1 - order];
            if (Zc.degree_in(e1) == 0) continue;
            SparsePoly R1 = resultant(E[0], Zc, e1), R2 = resultant(E[1], Zc, e1);
            if (R1.is_zero() || R2.is_zero()) continue;
            SparsePoly R = (R1.degree_in(e2) == 0 || R2.degree_in(e2) == 0) ? gcd(R1, R2) : resultant(R1, R2, e2);
            if (R.is_zero()) continue;
            for (std::size_t v = 0; v < 3; ++v)
                if (R.uses_var(v)) throw Error(ErrorKind::InternalContradiction, "elimination left an x variable");
            SparsePoly stripped(6);
            R.strip_monomial_content(stripped);
            if (stripped.is_constant()) continue;
            eliminants.push_back(stripped);
        }
    }
    if (eliminants.empty())
        throw Error(ErrorKind::InvalidInput, "elimination collapsed: Z is contracted by the morphism or the system is degenerate");

    SparsePoly raw = eliminants[0];
    for (std::size_t i = 1; i < eliminants.size(); ++i) raw = gcd(raw, eliminants[i]);
    auto y_of = [](const SparsePoly& p) { return p.relabel(3, {3, 4, 5, 0, 1, 2}); };

    // keep the squarefree pieces whose pullback vanishes on Z
    CoprimeBase cb = coprime_base({raw});
    SparsePoly A = SparsePoly::constant(3, GaussRat(1));
    bool found = false;
    for (const auto& piece : cb.base) {
        SparsePoly py = y_of(piece);
        if (py.is_constant()) continue;
        if (try_divide(m.pullback(py), Z)) {
            A *= py;
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::InternalContradiction, "no factor of the eliminant vanishes on Z after pullback");
    PushforwardResult res;
    res.A = A.monic();
    res.eliminant_degree = raw.total_degree();
    res.exponent_reduced = res.A.total_degree() < raw.total_degree();
    if (!res.A.is_homogeneous()) throw Error(ErrorKind::InternalContradiction, "pushforward polynomial is not homogeneous");
    res.vanishing_order = vanishing_order(m.pullback(res.A), Z);
    return res;
}

json morphism_to_json(const PowerMorphism& m) {
    json j;
    j["F"] = json::array();
    for (const auto& f : m.F) j["F"].push_back(poly_to_json(f));
    j["degrees"] = m.d;
    j["exponents"] = m.a;
    j["lcm"] = m.lcm;
    return j;
}

json point_to_json(const ProjPoint& p) {
    json j;
    j["text"] = p.to_string();
    j["chart"] = p.chart;
    j["radius"] = p.radius;
    j["exact"] = p.exact.has_value();
    json c = json::array();
    for (const auto& z : p.x) c.push_back({z.real(), z.imag()});
    j["coords"] = c;
    return j;
}

}  // namespace nevwb
