#include "nevwb/poly_algorithms.hpp"

#include <algorithm>
#include <map>

#include "nevwb/error.hpp"

namespace nevwb {

namespace {

bool divides_monomial(const Exponent& a, const Exponent& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

SparsePoly one(std::size_t n) { return SparsePoly::constant(n, GaussRat(1)); }

// lowest-index variable used by p or q; npos when both constant
std::size_t first_var(const SparsePoly& p, const SparsePoly& q) {
    for (std::size_t v = 0; v < p.num_vars(); ++v)
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
    return static_cast<std::size_t>(-1);
}

}  // namespace

std::optional<SparsePoly> try_divide(const SparsePoly& p, const SparsePoly& q) {
    if (q.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
    if (p.num_vars() != q.num_vars()) throw Error(ErrorKind::InvalidInput, "variable count mismatch");
    SparsePoly quot(p.num_vars());
    if (p.is_zero()) return quot;
    if (q.is_constant()) return p * q.leading_coeff().inverse();
    SparsePoly r = p;
    const Exponent& lq = q.leading_exp();
    GaussRat lcq_inv = q.leading_coeff().inverse();
    Exponent e(p.num_vars());
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exp();
        if (!divides_monomial(lq, lr)) return std::nullopt;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = lr[k] - lq[k];
        GaussRat c = r.leading_coeff() * lcq_inv;
        SparsePoly t = SparsePoly::monomial(e, c);
        quot += t;
        r -= t * q;
    }
    return quot;
}

SparsePoly divide_exact(const SparsePoly& p, const SparsePoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw Error(ErrorKind::InternalContradiction, "inexact polynomial division");
    return *r;
}

SparsePoly pseudo_remainder(const SparsePoly& a, const SparsePoly& b, std::size_t v) {
    int db = b.degree_in(v);
    if (db < 0) throw Error(ErrorKind::InvalidInput, "pseudo-remainder by zero");
    int da = a.degree_in(v);
    if (da < db) return a;
    SparsePoly lcb = b.lc_in(v);
    SparsePoly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int k = r.degree_in(v) - db;
        SparsePoly lr = r.lc_in(v);
        r = r * lcb - lr * SparsePoly::var_power(a.num_vars(), v, k) * b;
        --e;
    }
    if (e > 0) r *= lcb.pow(e);
    return r;
}

SparsePoly determinant(PolyMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return SparsePoly(0);  // caller supplies the variable count for empty matrices
    std::size_t nv = m[0][0].num_vars();
    bool negate = false;
    SparsePoly prev = one(nv);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pivot: nonzero entry with fewest terms
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r) {
            if (m[r][k].is_zero()) continue;
            if (piv == n || m[r][k].num_terms() < m[piv][k].num_terms()) piv = r;
        }
        if (piv == n) return SparsePoly(nv);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                SparsePoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][k] = SparsePoly(nv);
        }
        prev = m[k][k];
    }
    SparsePoly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

PolyMatrix sylvester_matrix(const SparsePoly& f, const SparsePoly& g, std::size_t v) {
    std::size_t nv = f.num_vars();
    auto fc = f.coeffs_in(v), gc = g.coeffs_in(v);
    int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
    int N = m + n;
    PolyMatrix S(N, std::vector<SparsePoly>(N, SparsePoly(nv)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = fc[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[n + i][i + j] = gc[n - j];
    return S;
}

SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, std::size_t v) {
    if (f.num_vars() != g.num_vars()) throw Error(ErrorKind::InvalidInput, "variable count mismatch");
    if (v >= f.num_vars()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
    std::size_t nv = f.num_vars();
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::InvalidInput, "resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return SparsePoly(nv);
    int m = f.degree_in(v), n = g.degree_in(v);
    if (m == 0 && n == 0) return one(nv);
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    return determinant(sylvester_matrix(f, g, v));
}

SparsePoly content_in(const SparsePoly& p, std::size_t v) {
    SparsePoly c(p.num_vars());
    for (const auto& k : p.coeffs_in(v)) {
        if (k.is_zero()) continue;
        c = gcd(c, k);
        if (c.is_constant()) break;
    }
    return c;
}

SparsePoly primitive_part_in(const SparsePoly& p, std::size_t v) {
    if (p.is_zero()) return p;
    return divide_exact(p, content_in(p, v));
}

namespace {

// last nonzero subresultant (up to a factor from the coefficient ring)
SparsePoly subresultant_gcd(SparsePoly a, SparsePoly b, std::size_t v) {
    std::size_t nv = a.num_vars();
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    SparsePoly g = one(nv), h = one(nv);
    while (true) {
        int d = a.degree_in(v) - b.degree_in(v);
        SparsePoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return b;
        if (r.degree_in(v) == 0) return one(nv);
        a = b;
        b = divide_exact(r, g * h.pow(d));
        g = a.lc_in(v);
        if (d >= 1) h = divide_exact(g.pow(d), h.pow(d - 1));
    }
}

}  // namespace

SparsePoly gcd(const SparsePoly& f, const SparsePoly& g) {
    if (f.num_vars() != g.num_vars()) throw Error(ErrorKind::InvalidInput, "variable count mismatch");
    std::size_t nv = f.num_vars();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return one(nv);
    std::size_t v = first_var(f, g);
    SparsePoly cf = content_in(f, v), cg = content_in(g, v);
    SparsePoly pf = divide_exact(f, cf), pg = divide_exact(g, cg);
    SparsePoly c = gcd(cf, cg);
    SparsePoly h = one(nv);
    if (pf.degree_in(v) > 0 && pg.degree_in(v) > 0) h = primitive_part_in(subresultant_gcd(pf, pg, v), v);
    return (c * h).monic();
}

SparsePoly gcd_poly(const SparsePoly& f, const SparsePoly& g, std::size_t main_var) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidInput, "gcd_poly expects nonzero inputs");
    SparsePoly d = gcd(f, g);
    return primitive_part_in(d, main_var).monic();
}

SparsePoly SqfDecomposition::expand() const {
    std::size_t nv = factors.empty() ? 0 : factors[0].factor.num_vars();
    SparsePoly r = SparsePoly::constant(nv, unit);
    for (const auto& f : factors) r *= f.factor.pow(f.multiplicity);
    return r;
}

namespace {

void merge_factor(std::map<int, SparsePoly>& acc, const SparsePoly& f, int m) {
    if (f.is_constant()) return;
    auto it = acc.find(m);
    if (it == acc.end())
        acc.emplace(m, f.monic());
    else
        it->second = (it->second * f).monic();
}

void sqf_rec(const SparsePoly& f, std::map<int, SparsePoly>& acc) {
    if (f.is_constant()) return;
    std::size_t v = first_var(f, f);
    SparsePoly c = content_in(f, v);
    SparsePoly p = divide_exact(f, c);
    // Yun in v
    SparsePoly dp = p.derivative(v);
    SparsePoly a0 = gcd(p, dp);
    SparsePoly b = divide_exact(p, a0);
    SparsePoly cc = divide_exact(dp, a0);
    SparsePoly d = cc - b.derivative(v);
    int i = 1;
    while (b.degree_in(v) > 0) {
        SparsePoly a = gcd(b, d);
        merge_factor(acc, a, i);
        b = divide_exact(b, a);
        cc = divide_exact(d, a);
        d = cc - b.derivative(v);
        ++i;
    }
    sqf_rec(c, acc);
}

}  // namespace

SqfDecomposition squarefree_decompose(const SparsePoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "squarefree decomposition of zero");
    std::map<int, SparsePoly> acc;
    sqf_rec(f, acc);
    SqfDecomposition out;
    SparsePoly prod = SparsePoly::constant(f.num_vars(), GaussRat(1));
    for (auto& [m, p] : acc) {
        out.factors.push_back({p, m});
        prod *= p.pow(m);
    }
    // every factor is monic, so the unit is the quotient of leading coefficients
    out.unit = f.leading_coeff() / prod.leading_coeff();
    return out;
}

bool is_squarefree(const SparsePoly& f) {
    for (const auto& fm : squarefree_decompose(f).factors)
        if (fm.multiplicity > 1) return false;
    return true;
}

SparsePoly radical(const SparsePoly& f) {
    SparsePoly r = SparsePoly::constant(f.num_vars(), GaussRat(1));
    for (const auto& fm : squarefree_decompose(f).factors) r *= fm.factor;
    return r.monic();
}

CoprimeBase coprime_base(const std::vector<SparsePoly>& inputs) {
    CoprimeBase out;
    if (inputs.empty()) return out;
    std::size_t nv = inputs[0].num_vars();
    std::vector<SqfDecomposition> dec;
    for (const auto& p : inputs) dec.push_back(squarefree_decompose(p));
    std::vector<SparsePoly>& B = out.base;
    for (const auto& d : dec) {
        for (const auto& fm : d.factors) {
            SparsePoly q = fm.factor;
            std::vector<SparsePoly> next;
            for (const auto& b : B) {
                if (q.is_constant()) {
                    next.push_back(b);
                    continue;
                }
                SparsePoly g = gcd(b, q);
                if (g.is_constant()) {
                    next.push_back(b);
                    continue;
                }
                next.push_back(g);
                SparsePoly rest = divide_exact(b, g);
                if (!rest.is_constant()) next.push_back(rest.monic());
                q = divide_exact(q, g);
            }
            if (!q.is_constant()) next.push_back(q.monic());
            B = std::move(next);
        }
    }
    (void)nv;
    for (const auto& d : dec) {
        std::vector<int> ex(B.size(), 0);
        for (std::size_t j = 0; j < B.size(); ++j)
            for (const auto& fm : d.factors)
                if (try_divide(fm.factor, B[j])) ex[j] = fm.multiplicity;
        out.exponents.push_back(std::move(ex));
    }
    return out;
}

}  // namespace nevwb
