#include "nevwb/diff_ops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

std::vector<std::string> DiffSymbolRing::symbol_names() const {
    std::vector<std::string> v;
    for (int j = 1; j <= n; ++j) v.push_back("w" + std::to_string(j));
    v.insert(v.end(), {"lambda", "lambdainv", "lambdap", "s"});
    return v;
}

std::vector<std::string> DiffSymbolRing::all_names() const {
    auto v = default_var_names(static_cast<std::size_t>(n + 1));
    auto s = symbol_names();
    v.insert(v.end(), s.begin(), s.end());
    return v;
}

DiffPoly::DiffPoly(DiffSymbolRing ring, SparsePoly base) : ring_(ring), base_(std::move(base)) {
    if (ring_.n < 1) throw Error(ErrorKind::InvalidInput, "DiffSymbolRing needs n >= 1");
    if (base_.num_vars() != ring_.total()) throw Error(ErrorKind::InvalidInput, "DiffPoly variable layout mismatch");
    normalize();
}

DiffPoly DiffPoly::from_constant_poly(const SparsePoly& F) {
    if (F.num_vars() < 2) throw Error(ErrorKind::InvalidInput, "need at least the variables x0, x1");
    DiffSymbolRing r{static_cast<int>(F.num_vars()) - 1};
    std::vector<std::size_t> place(F.num_vars());
    for (std::size_t k = 0; k < place.size(); ++k) place[k] = k;
    return DiffPoly(r, F.relabel(r.total(), place));
}

DiffPoly DiffPoly::parse(const std::string& text, int n) {
    DiffSymbolRing r{n};
    return DiffPoly(r, parse_poly(text, r.total(), r.all_names()));
}

int DiffPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : base_.terms()) {
        int s = 0;
        for (int i = 0; i <= ring_.n; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

bool DiffPoly::has_constant_coefficients() const {
    for (const auto& [e, c] : base_.terms())
        for (std::size_t k = ring_.n + 1; k < e.size(); ++k)
            if (e[k]) return false;
    return true;
}

void DiffPoly::normalize() {
    std::size_t l = ring_.lambda(), li = ring_.lambdainv();
    bool needed = false;
    for (const auto& [e, c] : base_.terms())
        if (e[l] && e[li]) needed = true;
    if (!needed) return;
    SparsePoly out(base_.num_vars());
    for (const auto& [e, c] : base_.terms()) {
        Exponent f = e;
        int m = std::min(f[l], f[li]);
        f[l] -= m;
        f[li] -= m;
        out.add_term(f, c);
    }
    base_ = std::move(out);
}

namespace {

void check_ring(const DiffPoly& a, const DiffPoly& b) {
    if (a.ring().n != b.ring().n) throw Error(ErrorKind::InvalidInput, "DiffPoly rings differ");
}

}  // namespace

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
    check_ring(a, b);
    return DiffPoly(a.ring_, a.base_ + b.base_);
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
    check_ring(a, b);
    return DiffPoly(a.ring_, a.base_ - b.base_);
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    check_ring(a, b);
    return DiffPoly(a.ring_, a.base_ * b.base_);
}

DiffPoly operator*(const GaussRat& c, const DiffPoly& a) { return DiffPoly(a.ring_, a.base_ * c); }

json diffpoly_to_json(const DiffPoly& p) {
    json j = poly_to_json(p.base());
    j["vars"] = p.ring().n + 1;
    j["symbols"] = p.ring().symbol_names();
    return j;
}

DiffPoly diffpoly_from_json(const json& j) {
    int nx = j.at("vars").get<int>();
    DiffSymbolRing r{nx - 1};
    if (j.contains("symbols") && j["symbols"].get<std::vector<std::string>>() != r.symbol_names())
        throw Error(ErrorKind::Parse, "symbols header must list w1..wn, lambda, lambdainv, lambdap, s in order");
    if (j.contains("text")) return DiffPoly::parse(j["text"].get<std::string>(), r.n);
    json k = j;
    k["vars"] = r.total();
    k.erase("symbols");
    return DiffPoly(r, poly_from_json(k));
}

DiffPoly apply_Du(const DiffPoly& F) {
    const DiffSymbolRing& R = F.ring();
    SparsePoly out(R.total());
    for (const auto& [e, c] : F.base().terms()) {
        for (int j = 1; j <= R.n; ++j)
            if (e[R.w(j)]) throw Error(ErrorKind::InvalidInput, "coefficient involves w" + std::to_string(j) + ", which has no derivative");
        if (e[R.s()]) throw Error(ErrorKind::InvalidInput, "coefficient involves s, which has no derivative");
        if (e[R.lambdap()]) throw Error(ErrorKind::InvalidInput, "coefficient involves lambdap, which has no derivative");
        int a = e[R.lambda()], b = e[R.lambdainv()];
        if (a > 0) {
            Exponent f = e;
            f[R.lambda()] -= 1;
            f[R.lambdap()] += 1;
            out.add_term(f, c * GaussRat(a));
        }
        if (b > 0) {
            Exponent f = e;
            f[R.lambdainv()] += 1;
            f[R.lambdap()] += 1;
            out.add_term(f, -(c * GaussRat(b)));
        }
        for (int j = 1; j <= R.n; ++j) {
            if (!e[R.x(j)]) continue;
            Exponent f = e;
            f[R.w(j)] += 1;
            out.add_term(f, c * GaussRat(e[R.x(j)]));
        }
    }
    return DiffPoly(R, out);
}

bool check_product_rule(const DiffPoly& F, const DiffPoly& G) {
    return apply_Du(F * G) == apply_Du(F) * G + F * apply_Du(G);
}

namespace {

std::vector<int> normalized_relation(std::vector<int> m) {
    for (int x : m) {
        if (x == 0) continue;
        if (x < 0)
            for (int& y : m) y = -y;
        break;
    }
    return m;
}

}  // namespace

CoprimalityReport coprime_with_Du(const SparsePoly& F, const std::vector<std::optional<GaussRat>>& w_binding) {
    if (F.num_vars() < 2) throw Error(ErrorKind::InvalidInput, "need at least the variables x0, x1");
    if (F.is_zero() || F.is_constant()) throw Error(ErrorKind::InvalidInput, "F must be a nonconstant polynomial");
    if (!F.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "hypothesis failed: F is not homogeneous");
    for (std::size_t v = 0; v < F.num_vars(); ++v)
        if (F.min_degree_in(v) > 0)
            throw Error(ErrorKind::InvalidInput, "hypothesis failed: F has the monomial factor x" + std::to_string(v));
    if (!is_squarefree(F)) throw Error(ErrorKind::InvalidInput, "hypothesis failed: F has repeated factors");

    DiffPoly DF = DiffPoly::from_constant_poly(F);
    const DiffSymbolRing& R = DF.ring();
    if (!w_binding.empty() && static_cast<int>(w_binding.size()) != R.n)
        throw Error(ErrorKind::InvalidInput, "w binding must have one entry per w symbol");
    SparsePoly D = apply_Du(DF).base();
    for (int j = 1; j <= static_cast<int>(w_binding.size()); ++j)
        if (w_binding[j - 1]) D = D.partial_eval(R.w(j), *w_binding[j - 1]);

    CoprimalityReport rep;
    std::set<std::vector<int>> cands;
    std::vector<Exponent> exps;
    for (const auto& [e, c] : F.terms()) exps.push_back(e);
    for (std::size_t a = 0; a < exps.size(); ++a)
        for (std::size_t b = a + 1; b < exps.size(); ++b) {
            std::vector<int> m;
            for (int j = 1; j <= R.n; ++j) m.push_back(exps[a][j] - exps[b][j]);
            if (std::any_of(m.begin(), m.end(), [](int x) { return x != 0; })) cands.insert(normalized_relation(m));
        }
    rep.candidate_relations.assign(cands.begin(), cands.end());

    SparsePoly g = D.is_zero() ? DF.base() : gcd(DF.base(), D);
    int xdeg = 0;
    for (int i = 0; i <= R.n; ++i) xdeg = std::max(xdeg, g.degree_in(R.x(i)));
    if (xdeg == 0) return rep;

    rep.status = CoprimalityReport::Status::MonomialRelation;
    std::vector<std::size_t> back(R.total(), static_cast<std::size_t>(-1));
    for (int i = 0; i <= R.n; ++i) back[i] = static_cast<std::size_t>(i);
    rep.common_factor = g.relabel(static_cast<std::size_t>(R.n + 1), back);
    auto it = rep.common_factor.terms().rbegin();
    const Exponent& e1 = it->first;
    ++it;
    const Exponent& e2 = it->first;
    for (int j = 1; j <= R.n; ++j) rep.relation.push_back(e1[j] - e2[j]);
    rep.relation = normalized_relation(rep.relation);
    return rep;
}

namespace {

bool usable(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()) && std::abs(v) > 1e-300; }

cplx eval_Du_at(const DiffPoly& D, const std::vector<cplx>& x, const std::vector<cplx>& w) {
    const DiffSymbolRing& R = D.ring();
    cplx s = 0;
    for (const auto& [e, c] : D.base().terms()) {
        cplx t = c.to_complex();
        for (int i = 0; i <= R.n; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        for (int j = 1; j <= R.n; ++j)
            for (int k = 0; k < e[R.w(j)]; ++k) t *= w[j];
        s += t;
    }
    return s;
}

NumericCheck run_check(const SparsePoly& F, const std::vector<MeroFn>& g, const std::vector<cplx>& samples,
                       bool with_g0) {
    if (F.num_vars() != g.size()) throw Error(ErrorKind::InvalidInput, "tuple length does not match polynomial arity");
    if (g[0].is_zero()) throw Error(ErrorKind::InvalidInput, "first component must be nonzero");
    std::vector<MeroFn> u;
    for (const auto& gi : g) u.push_back(gi / g[0]);
    DiffPoly D = apply_Du(DiffPoly::from_constant_poly(F));
    MeroSum comp = compose(F, g);
    MeroSum dcomp = comp.derivative();
    std::vector<RationalFn> w(g.size());
    for (std::size_t j = 1; j < g.size(); ++j)
        if (!u[j].is_zero()) w[j] = u[j].log_derivative();
    RationalFn l0 = g[0].log_derivative();
    int d = F.total_degree();

    NumericCheck out;
    for (cplx z : samples) {
        bool ok = true;
        std::vector<cplx> x(g.size()), wv(g.size(), 0);
        for (std::size_t j = 0; j < g.size(); ++j) {
            x[j] = g[j].eval(z);
            if (!std::isfinite(std::abs(x[j]))) ok = false;
            if (j > 0 && !u[j].is_zero()) {
                cplx uj = u[j].eval(z);
                if (!usable(uj)) ok = false;
                wv[j] = w[j].eval(z);
                if (!std::isfinite(std::abs(wv[j]))) ok = false;
            }
        }
        if (!usable(x[0])) ok = false;
        if (!ok) {
            out.warnings.push_back("sample skipped at a zero or pole: (" + std::to_string(z.real()) + "," +
                                   std::to_string(z.imag()) + ")");
            continue;
        }
        cplx lhs = dcomp.eval(z);
        cplx rhs = eval_Du_at(D, x, wv);
        if (with_g0) rhs += static_cast<double>(d) * l0.eval(z) * comp.eval(z);
        double r = std::abs(lhs - rhs);
        out.max_abs_residual = std::max(out.max_abs_residual, r);
        out.max_residual = std::max(out.max_residual, r / std::max(1.0, std::abs(lhs)));
        ++out.used_samples;
    }
    return out;
}

}  // namespace

NumericCheck verify_Du_numeric(const SparsePoly& F, const std::vector<MeroFn>& u, const std::vector<cplx>& samples) {
    if (u.empty() || u[0].exact_constant() != std::optional<GaussRat>(GaussRat(1)))
        throw Error(ErrorKind::InvalidInput, "u must start with the constant 1");
    return run_check(F, u, samples, false);
}

NumericCheck verify_Dug_numeric(const SparsePoly& G, const std::vector<MeroFn>& g, const std::vector<cplx>& samples) {
    if (!G.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "G must be homogeneous");
    return run_check(G, g, samples, true);
}

}  // namespace nevwb
