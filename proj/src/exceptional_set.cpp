#include "nevwb/exceptional_set.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

std::array<int, 2> NormalizedPair::original() const {
    int s = sign_flipped ? -reduced_by : reduced_by;
    return swapped ? std::array<int, 2>{s * n2, s * n1} : std::array<int, 2>{s * n1, s * n2};
}

NormalizedPair normalize_pair(int n1, int n2) {
    if (n1 == 0 && n2 == 0) throw Error(ErrorKind::InvalidInput, "pair (0, 0) has no normalization");
    NormalizedPair p;
    p.reduced_by = std::gcd(std::abs(n1), std::abs(n2));
    n1 /= p.reduced_by;
    n2 /= p.reduced_by;
    if (static_cast<long>(n1) * n2 >= 0) {
        if (n1 < 0 || n2 < 0) {
            n1 = -n1;
            n2 = -n2;
            p.sign_flipped = true;
        }
        if (n1 > n2) {
            std::swap(n1, n2);
            p.swapped = true;
        }
    } else {
        if (n2 < 0) {
            n1 = -n1;
            n2 = -n2;
            p.sign_flipped = true;
        }
        if (n2 > -n1) {
            std::swap(n1, n2);
            n1 = -n1;
            n2 = -n2;
            p.swapped = true;
            p.sign_flipped = !p.sign_flipped;
        }
    }
    p.n1 = n1;
    p.n2 = n2;
    if (n1 == 0) {
        p.a = 0;
        p.b = 1;
        return p;
    }
    int m = std::abs(n1);
    for (int b = 1; b <= m; ++b) {
        long num = 1 - static_cast<long>(n2) * b;
        if (num % n1 == 0) {
            p.b = b;
            p.a = static_cast<int>(num / n1);
            break;
        }
    }
    if (static_cast<long>(p.n1) * p.a + static_cast<long>(p.n2) * p.b != 1 || std::abs(p.a) >= p.n2 || p.a >= p.b)
        throw Error(ErrorKind::InternalContradiction, "Bezout coefficients violate the normalization constraints");
    return p;
}

void validate_curve_poly(const SparsePoly& G) {
    if (G.num_vars() != 3) throw Error(ErrorKind::InvalidInput, "G must be a polynomial in x0, x1, x2");
    if (G.is_zero() || G.is_constant()) throw Error(ErrorKind::InvalidInput, "G must be nonconstant");
    if (!G.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "hypothesis failed: G is not homogeneous");
    for (std::size_t v = 0; v < 3; ++v)
        if (G.min_degree_in(v) > 0)
            throw Error(ErrorKind::InvalidInput, "hypothesis failed: G has the monomial factor x" + std::to_string(v));
    for (std::size_t v = 0; v < 3; ++v) {
        std::vector<GaussRat> pt(3, GaussRat(0));
        pt[v] = GaussRat(1);
        if (G.eval(pt).is_zero())
            throw Error(ErrorKind::InvalidInput, "hypothesis failed: [G=0] passes through the coordinate point e" +
                                                     std::to_string(v) + " (not in general position)");
    }
    if (!is_squarefree(G)) throw Error(ErrorKind::InvalidInput, "hypothesis failed: G has repeated factors");
}

namespace {

using Chart = std::array<int, 3>;

const std::array<Chart, 6> kCharts{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

SparsePoly dehomogenize(const SparsePoly& G, const Chart& ch) {
    std::vector<SparsePoly> images(3);
    images[ch[0]] = SparsePoly::constant(2, GaussRat(1));
    images[ch[1]] = SparsePoly::variable(2, 0);
    images[ch[2]] = SparsePoly::variable(2, 1);
    return G.compose(images);
}

SubstitutionResult substitute_chart(const SparsePoly& G, const NormalizedPair& pair, const Chart& ch) {
    SubstitutionResult s;
    s.pair = pair;
    s.G1 = dehomogenize(G, ch);
    LaurentBivar X = LaurentBivar::monomial(pair.a, pair.n2, GaussRat(1));
    LaurentBivar Y = LaurentBivar::monomial(pair.b, -pair.n1, GaussRat(1));
    LaurentBivar L = substitute_monomials(s.G1, {X, Y});
    s.M1 = L.min_exp(1);
    s.M2 = L.min_exp(0);
    s.B = L.shifted(-s.M2, -s.M1).to_poly();
    s.B_Lambda = L.shifted(0, -s.M1);
    if (s.B.is_constant()) throw Error(ErrorKind::InternalContradiction, "substituted polynomial B is constant");
    if (!is_squarefree(s.B))
        throw Error(ErrorKind::InternalContradiction, "substituted polynomial B is not squarefree: " + s.B.to_string({"L", "T"}));
    return s;
}

SparsePoly locus_poly(const SparsePoly& p2) {
    // p2 uses only variable 0 (Lambda) of a 2-variable ring
    SparsePoly u = to_univariate(p2, 0);
    if (u.is_zero()) throw Error(ErrorKind::InternalContradiction, "locus polynomial vanishes identically");
    SparsePoly stripped(1);
    u.strip_monomial_content(stripped);
    if (stripped.is_constant()) return SparsePoly::constant(1, GaussRat(1));
    return radical(stripped).monic();
}

std::vector<AlgebraicValue> locus_roots(const SparsePoly& p) {
    std::vector<AlgebraicValue> out;
    if (p.is_constant()) return out;
    for (const auto& r : roots_certified(p).roots) out.push_back({p, r});
    return out;
}

BetaLoci loci_of(const SparsePoly& B) {
    BetaLoci l;
    SparsePoly R = resultant(B, B.derivative(1), 1);
    if (R.is_zero()) throw Error(ErrorKind::InternalContradiction, "discriminant resultant vanishes: B is not squarefree");
    l.alpha_poly = locus_poly(R);
    l.gamma_poly = locus_poly(B.partial_eval(1, GaussRat(0)));
    l.leading_poly = locus_poly(B.lc_in(1));
    l.alphas = locus_roots(l.alpha_poly);
    l.gammas = locus_roots(l.gamma_poly);
    l.leading = locus_roots(l.leading_poly);
    return l;
}

CurveSpec relation_curve(std::array<int, 3> v, AlgebraicValue beta, CurveProvenance prov) {
    // orientation: x^{v+} = beta * x^{v-} with v- supported on one variable; for lines the lower index is v-
    int neg = 0, pos = 0;
    for (int x : v) {
        neg += x < 0;
        pos += x > 0;
    }
    bool flip = neg > 1;
    if (neg == 1 && pos == 1)
        for (int x : v)
            if (x != 0) {
                flip = x > 0;
                break;
            }
    if (flip) {
        for (int& y : v) y = -y;
        beta = beta.inverse();
    }
    CurveSpec c;
    int ones = 0, zeros = 0;
    for (int x : v) {
        if (std::abs(x) == 1) ++ones;
        if (x == 0) ++zeros;
    }
    c.kind = (ones == 2 && zeros == 1) ? CurveSpec::Kind::Line : CurveSpec::Kind::MonomialRelation;
    c.exponents = v;
    c.beta = std::move(beta);
    c.provenance.push_back(std::move(prov));
    return c;
}

void add_curve(std::vector<CurveSpec>& curves, CurveSpec c) {
    for (auto& d : curves)
        if (d.same_curve(c)) {
            d.provenance.insert(d.provenance.end(), c.provenance.begin(), c.provenance.end());
            return;
        }
    curves.push_back(std::move(c));
}

std::string monomial_string(const std::array<int, 3>& e, int sign) {
    std::string s;
    for (int j = 0; j < 3; ++j) {
        int k = e[j] * sign;
        if (k <= 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(j);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

bool SubstitutionResult::round_trip() const {
    LaurentBivar X = LaurentBivar::monomial(pair.a, pair.n2, GaussRat(1));
    LaurentBivar Y = LaurentBivar::monomial(pair.b, -pair.n1, GaussRat(1));
    LaurentBivar lhs = LaurentBivar::from_poly(B).shifted(M2, M1);
    return lhs == substitute_monomials(G1, {X, Y}) && B_Lambda == LaurentBivar::from_poly(B).shifted(M2, 0);
}

SubstitutionResult substitute(const SparsePoly& G, const NormalizedPair& pair) {
    validate_curve_poly(G);
    return substitute_chart(G, pair, kCharts[0]);
}

BetaLoci beta_loci(const SubstitutionResult& sub) { return loci_of(sub.B); }

AlgebraicValue AlgebraicValue::inverse() const {
    std::vector<GaussRat> c = poly.univariate_coeffs();
    std::reverse(c.begin(), c.end());
    AlgebraicValue r;
    r.poly = SparsePoly::from_univariate(c).monic();
    double m = std::abs(root.center);
    r.root.center = 1.0 / root.center;
    r.root.radius = root.radius < m ? root.radius / (m * (m - root.radius)) : INFINITY;
    r.root.multiplicity = root.multiplicity;
    if (root.exact) r.root.exact = root.exact->inverse();
    return r;
}

bool AlgebraicValue::same_as(const AlgebraicValue& o) const { return same_algebraic_number(poly, root, o.poly, o.root); }

bool AlgebraicValue::matches(const GaussRat& c) const {
    if (root.exact) return *root.exact == c;
    return poly.eval({c}).is_zero() && root.contains(c.to_complex(), 1e-300);
}

bool AlgebraicValue::matches_numeric(cplx c, double tol) const {
    return std::abs(root.center - c) <= root.radius + tol * std::max(1.0, std::abs(c));
}

std::string AlgebraicValue::to_string() const {
    if (root.exact) return root.exact->to_string();
    std::ostringstream os;
    os.precision(12);
    os << "root of " << poly.to_string({"z"}) << " near (" << root.center.real() << (root.center.imag() < 0 ? "" : "+")
       << root.center.imag() << "i)";
    return os.str();
}

bool CurveSpec::same_curve(const CurveSpec& o) const {
    if (kind != o.kind) return false;
    if (exponents == o.exponents) return kind == Kind::CoordinateLine || beta.same_as(o.beta);
    if (kind == Kind::CoordinateLine) return false;
    std::array<int, 3> neg{-o.exponents[0], -o.exponents[1], -o.exponents[2]};
    return exponents == neg && beta.same_as(o.beta.inverse());
}

std::string CurveSpec::to_string() const {
    if (kind == Kind::CoordinateLine) {
        for (int j = 0; j < 3; ++j)
            if (exponents[j]) return "[x" + std::to_string(j) + "=0]";
    }
    std::string b = beta.to_string();
    if (!beta.exact() || !beta.root.exact->is_real() || beta.root.exact->re() < 0) b = "(" + b + ")";
    return "[" + monomial_string(exponents, 1) + "=" + b + "*" + monomial_string(exponents, -1) + "]";
}

std::optional<SparsePoly> CurveSpec::equation() const {
    if (kind == Kind::CoordinateLine) {
        for (std::size_t j = 0; j < 3; ++j)
            if (exponents[j]) return SparsePoly::variable(3, j);
    }
    if (!beta.exact()) return std::nullopt;
    Exponent p(3, 0), q(3, 0);
    for (int j = 0; j < 3; ++j) (exponents[j] > 0 ? p : q)[j] = std::abs(exponents[j]);
    SparsePoly e(3);
    e.add_term(p, GaussRat(1));
    e.add_term(q, -*beta.root.exact);
    return e;
}

std::vector<CurveSpec> delta_lines(const SparsePoly& G) {
    validate_curve_poly(G);
    std::vector<CurveSpec> out;
    int d = G.total_degree();
    for (const auto& ch : kCharts) {
        SparsePoly top = dehomogenize(G, ch).homogeneous_part(d);
        LinearForms lf = factor_linear_forms(top, 0, 1);
        std::size_t idx = 0;
        for (const auto& r : lf.deltas.roots) {
            std::array<int, 3> v{0, 0, 0};
            v[ch[1]] = 1;
            v[ch[2]] = -1;
            SparsePoly dp = radical(lf.deltas.defining_poly).monic();
            CurveProvenance prov{ch, -1, 1, "top-form", idx++};
            add_curve(out, relation_curve(v, AlgebraicValue{dp, r}, prov));
        }
    }
    return out;
}

ExceptionalSet build_W(const SparsePoly& G, int ell2) {
    validate_curve_poly(G);
    if (ell2 < 1) throw Error(ErrorKind::InvalidInput, "enumeration bound must be at least 1");
    ExceptionalSet W;
    W.source_poly = G;
    W.bound = ell2;
    for (int j = 0; j < 3; ++j) {
        CurveSpec c;
        c.kind = CurveSpec::Kind::CoordinateLine;
        c.exponents[j] = 1;
        CurveProvenance prov;
        prov.locus = "coordinate";
        c.provenance.push_back(prov);
        W.curves.push_back(c);
    }

    std::set<std::tuple<int, int, int>> keys;
    for (int n1 = -ell2; n1 <= ell2; ++n1)
        for (int n2 = -ell2; n2 <= ell2; ++n2) {
            if ((n1 == 0 && n2 == 0) || std::abs(n1) + std::abs(n2) > ell2) continue;
            if (std::gcd(std::abs(n1), std::abs(n2)) != 1) continue;
            NormalizedPair p = normalize_pair(n1, n2);
            keys.insert({std::abs(p.n1) + std::abs(p.n2), p.n1, p.n2});
        }

    using Batch = std::vector<CurveSpec>;
    std::vector<std::future<Batch>> jobs;
    for (const auto& [s, n1, n2] : keys) {
        (void)s;
        NormalizedPair p = normalize_pair(n1, n2);
        jobs.push_back(std::async(std::launch::async, [&G, p] {
            Batch out;
            for (const auto& ch : kCharts) {
                SubstitutionResult sub = substitute_chart(G, p, ch);
                BetaLoci l = loci_of(sub.B);
                std::array<int, 3> v{0, 0, 0};
                v[ch[0]] = -p.n1 - p.n2;
                v[ch[1]] = p.n1;
                v[ch[2]] = p.n2;
                auto emit = [&](const std::vector<AlgebraicValue>& vals, const char* locus) {
                    for (std::size_t k = 0; k < vals.size(); ++k)
                        add_curve(out, relation_curve(v, vals[k], CurveProvenance{ch, p.n1, p.n2, locus, k}));
                };
                emit(l.alphas, "resultant");
                emit(l.gammas, "lambda-zero");
                emit(l.leading, "leading-coefficient");
            }
            return out;
        }));
    }
    for (auto& j : jobs)
        for (auto& c : j.get()) add_curve(W.curves, std::move(c));
    for (auto& c : delta_lines(G)) add_curve(W.curves, std::move(c));
    return W;
}

std::vector<WMatch> member_of_W(const ExceptionalSet& W, const std::vector<MeroFn>& g) {
    if (g.size() != 3) throw Error(ErrorKind::InvalidInput, "member_of_W expects three components");
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
        throw Error(ErrorKind::InvalidInput, "map components are all zero");
    std::vector<WMatch> out;
    for (std::size_t i = 0; i < W.curves.size(); ++i) {
        const CurveSpec& c = W.curves[i];
        if (c.kind == CurveSpec::Kind::CoordinateLine) {
            for (int j = 0; j < 3; ++j)
                if (c.exponents[j] && g[j].is_zero()) out.push_back({i, true});
            continue;
        }
        bool lhs_zero = false, rhs_zero = false;
        MeroFn ratio;
        for (int j = 0; j < 3; ++j) {
            int e = c.exponents[j];
            if (e == 0) continue;
            if (g[j].is_zero()) {
                (e > 0 ? lhs_zero : rhs_zero) = true;
                continue;
            }
            ratio = ratio * g[j].pow(e);
        }
        if (lhs_zero || rhs_zero) {
            if (lhs_zero && rhs_zero) out.push_back({i, true});
            continue;
        }
        if (auto k = ratio.exact_constant()) {
            if (c.beta.matches(*k)) out.push_back({i, true});
        } else if (ratio.is_constant_function()) {
            if (c.beta.matches_numeric(ratio.eval(0.0))) out.push_back({i, false});
        }
    }
    return out;
}

namespace {

const char* kind_name(CurveSpec::Kind k) {
    switch (k) {
        case CurveSpec::Kind::CoordinateLine: return "coordinate-line";
        case CurveSpec::Kind::Line: return "line";
        case CurveSpec::Kind::MonomialRelation: return "monomial-relation";
    }
    return "";
}

json algebraic_to_json(const AlgebraicValue& b) {
    json j;
    j["poly"] = poly_to_json(b.poly);
    j["center"] = {b.root.center.real(), b.root.center.imag()};
    j["radius"] = b.root.radius;
    j["exact"] = b.root.exact ? gauss_to_json(*b.root.exact) : json(nullptr);
    return j;
}

}  // namespace

json curve_to_json(const CurveSpec& c) {
    json j;
    j["kind"] = kind_name(c.kind);
    j["exponents"] = c.exponents;
    j["text"] = c.to_string();
    if (c.kind != CurveSpec::Kind::CoordinateLine) j["beta"] = algebraic_to_json(c.beta);
    if (auto e = c.equation()) j["equation"] = poly_to_json(*e);
    json prov = json::array();
    for (const auto& p : c.provenance)
        prov.push_back({{"chart", p.chart}, {"n1", p.n1}, {"n2", p.n2}, {"locus", p.locus}, {"root_index", p.root_index}});
    j["provenance"] = prov;
    return j;
}

json exset_to_json(const ExceptionalSet& W) {
    json j;
    j["schema"] = "nevwb.exset/1";
    j["bound"] = W.bound;
    j["source_poly"] = poly_to_json(W.source_poly);
    json cs = json::array();
    for (const auto& c : W.curves) cs.push_back(curve_to_json(c));
    j["curves"] = cs;
    return j;
}

json substitution_to_json(const SubstitutionResult& s) {
    json j;
    j["pair"] = {{"n1", s.pair.n1}, {"n2", s.pair.n2}, {"a", s.pair.a}, {"b", s.pair.b},
                 {"reduced_by", s.pair.reduced_by}, {"sign_flipped", s.pair.sign_flipped}, {"swapped", s.pair.swapped}};
    j["M1"] = s.M1;
    j["M2"] = s.M2;
    j["B"] = poly_to_json(s.B);
    j["B_text"] = s.B.to_string({"L", "T"});
    j["B_Lambda"] = laurent_to_json(s.B_Lambda);
    return j;
}

json loci_to_json(const BetaLoci& l) {
    auto list = [](const std::vector<AlgebraicValue>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(algebraic_to_json(x));
        return a;
    };
    return {{"alpha_poly", l.alpha_poly.to_string({"L"})}, {"gamma_poly", l.gamma_poly.to_string({"L"})},
            {"leading_poly", l.leading_poly.to_string({"L"})}, {"alphas", list(l.alphas)},
            {"gammas", list(l.gammas)}, {"leading", list(l.leading)}};
}

}  // namespace nevwb
