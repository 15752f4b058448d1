#include "nevwb/nullstellensatz.hpp"

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

namespace {

// degree of a form in (z,u); throws when not homogeneous in those variables
int form_degree(const SparsePoly& F, std::size_t z, std::size_t u) {
    int d = -1;
    for (const auto& [e, c] : F.terms()) {
        int s = e[z] + e[u];
        if (d < 0)
            d = s;
        else if (d != s)
            throw Error(ErrorKind::InvalidInput, "polynomial is not homogeneous in the two form variables");
    }
    return d;
}

// coefficient of Z^{deg-i} U^i, with Z and U removed
std::vector<SparsePoly> form_coeffs(const SparsePoly& F, int deg, std::size_t z, std::size_t u) {
    std::vector<SparsePoly> c(deg + 1, SparsePoly(F.num_vars()));
    for (const auto& [e, x] : F.terms()) {
        Exponent f = e;
        f[z] = 0;
        f[u] = 0;
        c[e[u]].add_term(f, x);
    }
    return c;
}

SparsePoly zu_monomial(std::size_t nv, std::size_t z, std::size_t u, int a, int b) {
    Exponent e(nv, 0);
    e[z] = a;
    e[u] = b;
    return SparsePoly::monomial(e, GaussRat(1));
}

}  // namespace

bool verify_certificate(const NullstellensatzCertificate& c, const SparsePoly& F, const SparsePoly& G,
                        std::size_t z, std::size_t u) {
    std::size_t nv = F.num_vars();
    SparsePoly lhs1 = zu_monomial(nv, z, u, c.s, 0) * c.R;
    SparsePoly lhs2 = zu_monomial(nv, z, u, 0, c.s) * c.R;
    return !c.R.is_zero() && lhs1 == c.P1 * F + c.P2 * G && lhs2 == c.Q1 * F + c.Q2 * G;
}

NullstellensatzCertificate nullstellensatz_certificate(const SparsePoly& F, const SparsePoly& G, std::size_t z,
                                                       std::size_t u) {
    if (F.num_vars() != G.num_vars()) throw Error(ErrorKind::InvalidInput, "variable count mismatch");
    if (z >= F.num_vars() || u >= F.num_vars() || z == u) throw Error(ErrorKind::InvalidInput, "bad form variables");
    if (F.is_zero() || G.is_zero()) throw Error(ErrorKind::Coprimality, "zero form has no certificate");
    std::size_t nv = F.num_vars();
    int p = form_degree(F, z, u), q = form_degree(G, z, u);
    NullstellensatzCertificate cert;
    SparsePoly zero(nv);
    if (p == 0 && q == 0) {
        cert.s = 0;
        cert.R = F;
        cert.P1 = cert.Q1 = SparsePoly::constant(nv, GaussRat(1));
        cert.P2 = cert.Q2 = zero;
        return cert;
    }
    auto fc = form_coeffs(F, p, z, u), gc = form_coeffs(G, q, z, u);
    int N = p + q;
    PolyMatrix S(N, std::vector<SparsePoly>(N, zero));
    for (int k = 0; k < q; ++k)
        for (int i = 0; i <= p; ++i) S[k][k + i] = fc[i];
    for (int k = 0; k < p; ++k)
        for (int i = 0; i <= q; ++i) S[q + k][k + i] = gc[i];
    cert.s = N - 1;
    cert.R = determinant(S);
    if (cert.R.is_zero()) throw Error(ErrorKind::Coprimality, "forms share a common factor (resultant is zero)");

    // x S = R e_t  =>  x_i = cofactor C_{i,t}
    auto cofactor_row = [&](int t) {
        std::vector<SparsePoly> x(N, zero);
        for (int i = 0; i < N; ++i) {
            if (N == 1) {
                x[i] = SparsePoly::constant(nv, GaussRat(1));
                continue;
            }
            PolyMatrix minor;
            for (int r = 0; r < N; ++r) {
                if (r == i) continue;
                std::vector<SparsePoly> row;
                for (int c = 0; c < N; ++c)
                    if (c != t) row.push_back(S[r][c]);
                minor.push_back(std::move(row));
            }
            SparsePoly d = determinant(minor);
            x[i] = ((i + t) % 2) ? -d : d;
        }
        return x;
    };
    auto assemble = [&](const std::vector<SparsePoly>& x, SparsePoly& A, SparsePoly& B) {
        A = zero;
        B = zero;
        for (int k = 0; k < q; ++k) A += x[k] * zu_monomial(nv, z, u, q - 1 - k, k);
        for (int k = 0; k < p; ++k) B += x[q + k] * zu_monomial(nv, z, u, p - 1 - k, k);
    };
    assemble(cofactor_row(0), cert.P1, cert.P2);
    assemble(cofactor_row(N - 1), cert.Q1, cert.Q2);
    if (!verify_certificate(cert, F, G, z, u))
        throw Error(ErrorKind::InternalContradiction, "certificate failed exact verification");
    return cert;
}

}  // namespace nevwb
