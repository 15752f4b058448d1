#include "nevwb/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <future>
#include <sstream>

#include "nevwb/error.hpp"
#include "nevwb/exceptional_set.hpp"
#include "nevwb/morphism.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnGrid: return "holds-on-grid";
        case Verdict::ViolatedAt: return "violated-at";
        case Verdict::ExcludedByW: return "excluded-by-W";
        case Verdict::DegenerateBranch: return "degenerate-branch";
        case Verdict::HypothesisFailed: return "hypothesis-failed";
    }
    return "?";
}

namespace {

double slope(const std::vector<MarginRow>& rows, double MarginRow::*field) {
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        if (!r.gated) continue;
        double x = std::log(r.r), y = r.*field;
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double den = n * sxx - sx * sx;
    if (n < 2 || den == 0) return 0;
    return (n * sxy - sx * sy) / den;
}

double log_plus(double x) { return x > 1 ? std::log(x) : 0.0; }

std::vector<MeroFn> reduce_curve(const std::vector<MeroFn>& g) {
    if (g.size() < 2) throw Error(ErrorKind::InvalidInput, "a curve needs at least two components");
    for (const auto& c : g)
        if (c.is_zero()) throw Error(ErrorKind::InvalidInput, "curve component is identically zero");
    return reduced_tuple(g);
}

void check_class_E(const std::vector<MeroFn>& g, int ell, MarginReport& rep) {
    if (ell <= 0) return;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!in_class_E(g[i], ell))
            throw Error(ErrorKind::InvalidInput, "component g" + std::to_string(i) + " = " + g[i].to_string() +
                                                     " has a zero of multiplicity below ell = " + std::to_string(ell));
    rep.notes.push_back("all components have zero multiplicities >= " + std::to_string(ell));
}

struct GridSetup {
    RadiusGrid grid;
    double r_pass;
    double R;  // radius for divisor computations
};

GridSetup setup_grid(const GridSpec& spec, const HarnessParams& p) {
    if (!(spec.r_min > 0) || !(spec.r_max > spec.r_min) || spec.count < 2)
        throw Error(ErrorKind::InvalidInput, "grid needs 0 < r_min < r_max and at least two points");
    GridSetup s;
    s.grid = make_grid(spec.r_min, spec.r_max, spec.count);
    s.r_pass = p.r_pass.value_or(geometric_midpoint(s.grid));
    s.R = spec.r_max * 1.001;
    return s;
}

void perturb(GridSetup& s, const std::vector<Divisor>& divisors) {
    std::vector<double> moduli;
    for (const auto& d : divisors)
        for (double m : divisor_moduli(d)) moduli.push_back(m);
    s.grid = perturb_grid(s.grid, moduli);
}

void fill_rows(MarginReport& rep, const GridSetup& s, const std::function<double(double)>& lhs,
               const std::function<double(double)>& rhs) {
    auto L = evaluate_on_grid(s.grid, lhs);
    auto R = evaluate_on_grid(s.grid, rhs);
    rep.r_pass = s.r_pass;
    for (std::size_t k = 0; k < s.grid.points.size(); ++k) {
        double r = s.grid.points[k];
        rep.rows.push_back({r, L[k], R[k], R[k] - L[k], r >= s.r_pass});
    }
}

double cartan_T(const std::vector<MeroFn>& g, double r) { return characteristic_T(g, r).value; }

SparsePoly parse_poly_field(const json& j, std::size_t nvars) {
    if (j.is_string()) {
        std::vector<std::string> names;
        for (std::size_t k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k));
        return parse_poly(j.get<std::string>(), nvars, names);
    }
    SparsePoly p = poly_from_json(j);
    if (p.num_vars() != nvars) throw Error(ErrorKind::Parse, "polynomial has the wrong number of variables");
    return p;
}

}  // namespace

void finalize_report(MarginReport& rep, double rel_tol) {
    rep.violated_radii.clear();
    rep.min_margin = 0;
    bool first = true;
    for (const auto& row : rep.rows) {
        if (!row.gated) continue;
        if (first || row.margin < rep.min_margin) rep.min_margin = row.margin;
        first = false;
        double scale = std::max({1.0, std::abs(row.lhs), std::abs(row.rhs)});
        if (row.margin < -rel_tol * scale) rep.violated_radii.push_back(row.r);
    }
    rep.slope_lhs = slope(rep.rows, &MarginRow::lhs);
    rep.slope_rhs = slope(rep.rows, &MarginRow::rhs);
    rep.slope_margin = slope(rep.rows, &MarginRow::margin);
    if (rep.verdict == Verdict::HoldsOnGrid && !rep.violated_radii.empty()) rep.verdict = Verdict::ViolatedAt;
}

std::string report_csv(const MarginReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "r,lhs,rhs,margin,gated\n";
    for (const auto& r : rep.rows) os << r.r << "," << r.lhs << "," << r.rhs << "," << r.margin << "," << (r.gated ? 1 : 0) << "\n";
    return os.str();
}

json report_to_json(const MarginReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back({{"r", r.r}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}, {"gated", r.gated}});
    return {{"scenario", rep.scenario},
            {"target", rep.target},
            {"verdict", verdict_name(rep.verdict)},
            {"violated_radii", rep.violated_radii},
            {"w_matches", rep.w_matches},
            {"notes", rep.notes},
            {"r_pass", rep.r_pass},
            {"slope_lhs", rep.slope_lhs},
            {"slope_rhs", rep.slope_rhs},
            {"slope_margin", rep.slope_margin},
            {"min_margin", rep.min_margin},
            {"extra", rep.extra},
            {"rows", rows}};
}

Divisor zero_divisor(const MeroSum& f, double R) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero divisor of the zero function");
    return entire_zeros(f, R);
}

bool in_class_E(const MeroFn& f, int ell) {
    if (!f.is_entire()) return false;
    for (const auto& fac : f.factors())
        if (fac.mult > 0 && fac.mult < ell) return false;
    return true;
}

MarginReport thm15_check(const SparsePoly& G, const std::vector<MeroFn>& g, bool part_one, const HarnessParams& p,
                         const GridSpec& grid) {
    MarginReport rep;
    rep.target = part_one ? "thm1.5-i" : "thm1.5-ii";
    validate_curve_poly(G);
    if (g.size() != 3) throw Error(ErrorKind::InvalidInput, "the curve must have three components");
    auto gr = reduce_curve(g);
    check_class_E(gr, p.ell, rep);

    ExceptionalSet W = build_W(G, p.ell2);
    for (const auto& m : member_of_W(W, gr)) rep.w_matches.push_back(W.curves[m.index].to_string());
    if (!rep.w_matches.empty()) rep.verdict = Verdict::ExcludedByW;

    MeroSum Gg = compose(G, gr);
    if (Gg.is_zero()) throw Error(ErrorKind::InvalidInput, "the curve lies on [G=0]");
    auto s = setup_grid(grid, p);
    Divisor D = zero_divisor(Gg, s.R);
    perturb(s, {D});
    double eps = p.eps_d(), deg = G.total_degree();
    auto N = [&](double r) { return counting_from_divisor(D, Target::Zero, r); };
    auto N1 = [&](double r) { return counting_from_divisor(D, Target::Zero, r, 1); };
    auto T = [&](double r) { return cartan_T(gr, r); };
    if (part_one)
        fill_rows(rep, s, [&](double r) { return N(r) - N1(r); }, [&](double r) { return eps * T(r); });
    else
        fill_rows(rep, s, [&](double r) { return (deg - eps) * T(r); }, N1);
    rep.extra["G_of_g_zeros_in_disk"] = D.size();
    finalize_report(rep);
    return rep;
}

MarginReport prop31_check(const MeroFn& f, const HarnessParams& p, const GridSpec& grid) {
    MarginReport rep;
    rep.target = "prop3.1";
    if (p.ell <= 0) throw Error(ErrorKind::InvalidInput, "prop3.1 needs ell >= 1");
    if (!f.is_entire() || f.is_constant_function() || f.is_zero())
        throw Error(ErrorKind::InvalidInput, "f must be a nonconstant entire function");
    if (!in_class_E(f, p.ell))
        throw Error(ErrorKind::InvalidInput, "f has a zero of multiplicity below ell = " + std::to_string(p.ell));
    rep.notes.push_back("zero multiplicities >= " + std::to_string(p.ell));
    MeroFn q = MeroFn::from_rational(f.log_derivative(), SparsePoly(1));
    auto s = setup_grid(grid, p);
    perturb(s, {f.zeros(), q.zeros(), q.poles()});
    double ell = p.ell;
    fill_rows(rep, s, [&](double r) { return characteristic_T(q, r).value; },
              [&](double r) {
                  double Tf = characteristic_T(f, r).value;
                  return Tf / ell + p.C * log_plus(Tf) + p.C_prime;
              });
    rep.extra["C"] = p.C;
    rep.extra["C_prime"] = p.C_prime;
    finalize_report(rep);
    return rep;
}

namespace {

void check_no_vanishing_subsum(const std::vector<MeroSum>& terms) {
    std::size_t k = terms.size();
    if (k > 16) throw Error(ErrorKind::InvalidInput, "too many terms for the subsum check");
    for (std::size_t i = 0; i < k; ++i)
        if (terms[i].is_zero()) throw Error(ErrorKind::InvalidInput, "term " + std::to_string(i) + " vanishes identically");
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        MeroSum s;
        std::string which;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                s = s + terms[i];
                which += (which.empty() ? "" : ",") + std::to_string(i);
            }
        if (s.is_zero()) throw Error(ErrorKind::InvalidInput, "vanishing proper subsum over terms {" + which + "}");
    }
}

}  // namespace

MarginReport borel_check(const std::vector<MeroFn>& a, const std::vector<MeroSum>& f, const HarnessParams& p,
                         const GridSpec& grid) {
    MarginReport rep;
    rep.target = "lemma3.3";
    if (a.size() != f.size() || f.size() < 2) throw Error(ErrorKind::InvalidInput, "need matching coefficient and function tuples");
    std::vector<MeroSum> terms;
    MeroSum total;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_entire()) throw Error(ErrorKind::InvalidInput, "f" + std::to_string(i) + " is not entire");
        terms.push_back(MeroSum(a[i]) * f[i]);
        total = total + terms.back();
    }
    if (!total.is_zero()) throw Error(ErrorKind::InvalidInput, "sum of a_i f_i is not identically zero");
    check_no_vanishing_subsum(terms);
    rep.notes.push_back("sum a_i f_i = 0 verified exactly; no vanishing proper subsum");
    int ell = std::max(p.ell, 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (auto m = f[i].as_mero(); m && p.ell > 0 && !in_class_E(*m, p.ell))
            throw Error(ErrorKind::InvalidInput, "f" + std::to_string(i) + " has a zero of multiplicity below ell");
    double n = static_cast<double>(f.size()) - 1;
    std::vector<MeroFn> ar = reduced_tuple(a);

    auto s = setup_grid(grid, p);
    std::vector<Divisor> divs;
    for (const auto& fi : f) divs.push_back(zero_divisor(fi, s.R));
    perturb(s, divs);
    auto lhs = [&](double r) {
        double best = -INFINITY;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (a[i].is_zero()) continue;
            double mn = INFINITY;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) mn = std::min(mn, characteristic_T(std::vector<MeroSum>{f[j], f[i]}, r).value);
            best = std::max(best, mn);
        }
        return best;
    };
    auto rhs = [&](double r) {
        double Ta = characteristic_T(ar, r).value;
        double Tf = characteristic_T(f, r).value;
        return 3 * n * Ta + (n * n - 1) / ell * Tf + p.C * log_plus(Tf) + p.C_prime;
    };
    fill_rows(rep, s, lhs, rhs);
    finalize_report(rep);
    return rep;
}

MarginReport truncated_borel_check(const std::vector<MeroSum>& terms, const HarnessParams& p, const GridSpec& grid) {
    MarginReport rep;
    rep.target = "thm2.2";
    if (terms.size() < 3) throw Error(ErrorKind::InvalidInput, "need at least three terms");
    MeroSum total;
    for (const auto& t : terms) {
        if (!t.is_entire()) throw Error(ErrorKind::InvalidInput, "terms must be entire");
        total = total + t;
    }
    if (!total.is_zero()) throw Error(ErrorKind::InvalidInput, "terms do not sum to zero");
    check_no_vanishing_subsum(terms);
    rep.notes.push_back("terms sum to zero exactly; no vanishing proper subsum");
    int n = static_cast<int>(terms.size()) - 2;
    std::vector<MeroSum> f(terms.begin(), terms.end() - 1);
    auto s = setup_grid(grid, p);
    std::vector<Divisor> divs;
    for (const auto& t : terms) divs.push_back(zero_divisor(t, s.R));
    perturb(s, divs);
    auto T = [&](double r) { return characteristic_T(f, r).value; };
    fill_rows(rep, s, T, [&](double r) {
        double sum = 0;
        for (const auto& d : divs) sum += counting_from_divisor(d, Target::Zero, r, n);
        return sum + p.C * log_plus(T(r)) + p.C_prime;
    });
    finalize_report(rep);
    return rep;
}

std::vector<DegenerateHit> detect_degenerate_branch(const std::vector<MeroFn>& g, int max_norm, int numeric_norm,
                                                    double eps, double r_check) {
    std::size_t n = g.size() - 1;
    std::vector<MeroFn> u;
    for (std::size_t i = 1; i <= n; ++i) u.push_back(g[i] / g[0]);

    std::vector<SparsePoly> polys;
    std::vector<std::pair<std::size_t, int>> owner;  // (component, multiplicity)
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& f : u[i].factors()) {
            polys.push_back(f.poly);
            owner.push_back({i, f.mult});
        }
    CoprimeBase cb = polys.empty() ? CoprimeBase{} : coprime_base(polys);
    std::vector<std::vector<long>> E(n, std::vector<long>(cb.base.size(), 0));
    for (std::size_t k = 0; k < polys.size(); ++k)
        for (std::size_t j = 0; j < cb.base.size(); ++j) E[owner[k].first][j] += static_cast<long>(owner[k].second) * cb.exponents[k][j];

    std::vector<DegenerateHit> hits;
    double Tg = characteristic_T(g, r_check).value;
    std::vector<int> m(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            int norm = 0;
            std::size_t lead = n;
            for (std::size_t k = 0; k < n; ++k) {
                norm += std::abs(m[k]);
                if (lead == n && m[k] != 0) lead = k;
            }
            if (norm == 0 || m[lead] < 0) return;
            int g = 0;
            for (int v : m) g = std::gcd(g, std::abs(v));
            if (g != 1) return;
            bool exact = true;
            for (std::size_t j = 0; j < cb.base.size() && exact; ++j) {
                long e = 0;
                for (std::size_t k = 0; k < n; ++k) e += m[k] * E[k][j];
                exact = e == 0;
            }
            if (exact) {
                SparsePoly Q(1);
                for (std::size_t k = 0; k < n; ++k) Q += u[k].exp_part() * GaussRat(m[k]);
                exact = Q.is_constant();
            }
            if (exact) {
                hits.push_back({m, true, 0.0});
                return;
            }
            if (norm > numeric_norm) return;
            MeroFn w;
            for (std::size_t k = 0; k < n; ++k) w = w * u[k].pow(m[k]);
            double ratio = characteristic_T(w, r_check).value / Tg;
            if (ratio <= eps * eps * eps) hits.push_back({m, false, ratio});
            return;
        }
        for (int v = -left; v <= left; ++v) {
            m[i] = v;
            rec(i + 1, left - std::abs(v));
        }
        m[i] = 0;
    };
    rec(0, max_norm);
    return hits;
}

MarginReport gcd_bound_check(const SparsePoly& F, const SparsePoly& G, const std::vector<MeroFn>& g,
                             const HarnessParams& p, const GridSpec& grid, const std::optional<MonomialFamily>& fam) {
    MarginReport rep;
    rep.target = "thm4.1";
    std::size_t k = g.size();
    if (F.num_vars() != k || G.num_vars() != k)
        throw Error(ErrorKind::InvalidInput, "F and G must have one variable per curve component");
    if (F.is_zero() || G.is_zero() || !F.is_homogeneous() || !G.is_homogeneous())
        throw Error(ErrorKind::InvalidInput, "F and G must be nonzero homogeneous polynomials");
    if (!gcd(F, G).is_constant()) throw Error(ErrorKind::InvalidInput, "F and G are not coprime");
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<GaussRat> e(k, GaussRat(0));
        e[j] = GaussRat(1);
        if (F.eval(e).is_zero() && G.eval(e).is_zero())
            throw Error(ErrorKind::InvalidInput, "F and G both vanish at the coordinate point e" + std::to_string(j));
    }
    rep.notes.push_back("F, G coprime; not both zero at any coordinate point");
    auto gr = reduce_curve(g);
    long n = static_cast<long>(k) - 1;
    long d = std::max(F.total_degree(), G.total_degree());
    long m = 2 * d;
    if (n >= 2) {
        auto prof = full_profile(p.eps, n, d, fam, p.c3_supplied ? std::optional<mpq_class>(p.c3) : std::nullopt);
        m = prof.m;
        rep.extra["constants"] = profile_to_json(prof);
    }
    auto s = setup_grid(grid, p);
    double eps = p.eps_d();
    int max_norm = static_cast<int>(std::min<long>(2 * m, n <= 2 ? 400 : n == 3 ? 40 : 12));
    auto hits = detect_degenerate_branch(gr, max_norm, p.degenerate_numeric_norm, eps, grid.r_max);
    if (max_norm < 2 * m) rep.notes.push_back("degenerate scan norm capped at " + std::to_string(max_norm));
    json hj = json::array();
    for (const auto& h : hits) hj.push_back({{"m", h.m}, {"exact", h.exact}, {"ratio", h.ratio}});
    rep.extra["degenerate_tuples"] = hj;
    if (!hits.empty()) rep.verdict = Verdict::DegenerateBranch;

    MeroSum Fg = compose(F, gr), Gg = compose(G, gr);
    if (Fg.is_zero() || Gg.is_zero()) throw Error(ErrorKind::InvalidInput, "F(g) or G(g) vanishes identically");
    Divisor DF = zero_divisor(Fg, s.R), DG = zero_divisor(Gg, s.R);
    perturb(s, {DF, DG});
    fill_rows(rep, s, [&](double r) { return gcd_counting(DF, DG, r); }, [&](double r) { return eps * cartan_T(gr, r); });
    finalize_report(rep);
    return rep;
}

MarginReport smt_instance_check(const std::vector<SparsePoly>& hypersurfaces, const std::vector<MeroFn>& g,
                                const HarnessParams& p, const GridSpec& grid) {
    MarginReport rep;
    rep.target = "thm2.3";
    std::size_t k = g.size();
    for (const auto& D : hypersurfaces)
        if (D.num_vars() != k || D.is_constant() || !D.is_homogeneous())
            throw Error(ErrorKind::InvalidInput, "hypersurfaces must be nonconstant forms in the curve's variables");
    if (k == 3) {
        auto gp = general_position_check(hypersurfaces);
        if (!gp.in_general_position()) {
            const auto& v = gp.violations.front();
            throw Error(ErrorKind::InvalidInput, "hypersurfaces " + std::to_string(v.i) + ", " + std::to_string(v.j) +
                                                     ", " + std::to_string(v.k) + " meet at " + v.point.to_string() +
                                                     " (not in general position)");
        }
        rep.notes.push_back("hypersurfaces in general position (" + std::to_string(gp.points_checked) + " points checked)");
    } else {
        rep.notes.push_back("general position not checked outside the plane");
    }
    auto gr = reduce_curve(g);
    auto s = setup_grid(grid, p);
    std::vector<Divisor> divs;
    std::vector<double> inv_deg;
    for (std::size_t i = 0; i < hypersurfaces.size(); ++i) {
        MeroSum Dg = compose(hypersurfaces[i], gr);
        if (Dg.is_zero()) throw Error(ErrorKind::InvalidInput, "the curve lies in hypersurface " + std::to_string(i));
        divs.push_back(zero_divisor(Dg, s.R));
        inv_deg.push_back(1.0 / hypersurfaces[i].total_degree());
    }
    perturb(s, divs);
    double q = hypersurfaces.size(), n = static_cast<double>(k) - 1, eps = p.eps_d();
    fill_rows(rep, s, [&](double r) { return (q - n - 1 - eps) * cartan_T(gr, r); },
              [&](double r) {
                  double sum = 0;
                  for (std::size_t i = 0; i < divs.size(); ++i)
                      sum += inv_deg[i] * counting_from_divisor(divs[i], Target::Zero, r, p.M);
                  return sum;
              });
    finalize_report(rep);
    return rep;
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.source = j;
    try {
        s.name = j.value("name", "");
        s.target = j.at("target").get<std::string>();
        if (j.contains("curve"))
            for (const auto& c : j["curve"]) s.curve.push_back(mero_from_json(c));
        if (j.contains("coefficients"))
            for (const auto& c : j["coefficients"]) s.coeffs.push_back(mero_from_json(c));
        if (j.contains("terms"))
            for (const auto& c : j["terms"]) s.terms.push_back(mero_sum_from_json(c));
        std::size_t nv = s.curve.empty() ? 3 : s.curve.size();
        if (j.contains("G")) s.G = parse_poly_field(j["G"], nv);
        if (j.contains("F")) s.F = parse_poly_field(j["F"], nv);
        if (j.contains("hypersurfaces"))
            for (const auto& h : j["hypersurfaces"]) s.hypersurfaces.push_back(parse_poly_field(h, nv));
        if (j.contains("family")) s.family = MonomialFamily::from_json(j["family"]);
        if (j.contains("params")) {
            const auto& p = j["params"];
            if (p.contains("eps")) s.params.eps = parse_rational(p["eps"].is_string() ? p["eps"].get<std::string>() : p["eps"].dump());
            s.params.ell = p.value("ell", 0);
            s.params.ell2 = p.value("ell2", 2);
            s.params.M = p.value("M", 1);
            if (p.contains("c3")) {
                s.params.c3 = parse_rational(p["c3"].is_string() ? p["c3"].get<std::string>() : p["c3"].dump());
                s.params.c3_supplied = true;
            }
            s.params.C = p.value("C", 1.0);
            s.params.C_prime = p.value("C_prime", 0.0);
            if (p.contains("r_pass")) s.params.r_pass = p["r_pass"].get<double>();
            s.params.degenerate_numeric_norm = p.value("degenerate_numeric_norm", 4);
        }
        if (j.contains("grid")) {
            const auto& g = j["grid"];
            s.grid.r_min = g.value("r_min", 10.0);
            s.grid.r_max = g.value("r_max", 100.0);
            s.grid.count = g.value("count", std::size_t{20});
        }
        if (j.contains("expect")) s.expect = j["expect"].get<std::string>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("scenario: ") + e.what());
    }
    if (s.params.eps <= 0) throw Error(ErrorKind::InvalidInput, "eps must be positive");
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    Scenario s = scenario_from_json(j);
    if (s.name.empty()) s.name = std::filesystem::path(path).stem().string();
    return s;
}

MarginReport run_scenario(const Scenario& s) {
    MarginReport rep;
    try {
        const auto& t = s.target;
        auto need = [&](bool ok, const char* what) {
            if (!ok) throw Error(ErrorKind::InvalidInput, std::string("scenario is missing ") + what);
        };
        if (t == "thm1.5-i" || t == "thm1.5-ii") {
            need(s.G.has_value(), "G");
            rep = thm15_check(*s.G, s.curve, t == "thm1.5-i", s.params, s.grid);
        } else if (t == "prop3.1") {
            need(s.curve.size() == 1, "a single function in curve");
            rep = prop31_check(s.curve[0], s.params, s.grid);
        } else if (t == "lemma3.3") {
            need(!s.terms.empty(), "terms");
            need(s.coeffs.size() == s.terms.size(), "coefficients matching terms");
            rep = borel_check(s.coeffs, s.terms, s.params, s.grid);
        } else if (t == "thm2.2") {
            need(!s.terms.empty(), "terms");
            rep = truncated_borel_check(s.terms, s.params, s.grid);
        } else if (t == "thm4.1") {
            need(s.F.has_value() && s.G.has_value(), "F and G");
            rep = gcd_bound_check(*s.F, *s.G, s.curve, s.params, s.grid, s.family);
        } else if (t == "thm2.3") {
            need(!s.hypersurfaces.empty(), "hypersurfaces");
            rep = smt_instance_check(s.hypersurfaces, s.curve, s.params, s.grid);
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown target '" + t + "'");
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidInput && e.kind() != ErrorKind::NonProperIntersection &&
            e.kind() != ErrorKind::Coprimality)
            throw;
        rep = MarginReport{};
        rep.target = s.target;
        rep.verdict = Verdict::HypothesisFailed;
        rep.notes.push_back(e.what());
    }
    rep.scenario = s.name;
    return rep;
}

std::vector<SuiteEntry> run_suite(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<std::future<SuiteEntry>> fut;
    for (const auto& f : files)
        fut.push_back(std::async(std::launch::async, [f] {
            SuiteEntry e;
            e.file = f;
            Scenario s = load_scenario(f);
            e.report = run_scenario(s);
            e.has_expectation = s.expect.has_value();
            e.expectation_met = !s.expect || *s.expect == verdict_name(e.report.verdict);
            return e;
        }));
    std::vector<SuiteEntry> out;
    for (auto& f : fut) out.push_back(f.get());
    return out;
}

}  // namespace nevwb
