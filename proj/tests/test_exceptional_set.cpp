#include <doctest.h>

#include <chrono>
#include <numeric>
#include <random>

#include "nevwb/error.hpp"
#include "nevwb/exceptional_set.hpp"
#include "nevwb/poly_algorithms.hpp"
#include "nevwb/poly_io.hpp"

using namespace nevwb;

namespace {

SparsePoly P3(const std::string& s) { return parse_poly(s, 3); }
SparsePoly LT(const std::string& s) { return parse_poly(s, 2, {"L", "T"}); }
SparsePoly Lz(const std::string& s) { return parse_poly(s, 1, {"L"}); }

const char* kSquares = "x0^2 + x1^2 + x2^2";

// Res_T(B, B_T) for B quadratic in T: lc * (4 lc c0 - c1^2)
SparsePoly quadratic_discriminant_resultant(const SparsePoly& B) {
    auto c = B.coeffs_in(1);
    REQUIRE(c.size() == 3);
    return c[2] * (GaussRat(4) * c[2] * c[0] - c[1] * c[1]);
}

bool has_curve(const ExceptionalSet& W, std::array<int, 3> v, const GaussRat& beta) {
    for (const auto& c : W.curves)
        if (c.kind != CurveSpec::Kind::CoordinateLine && c.exponents == v && c.beta.matches(beta)) return true;
    return false;
}

SparsePoly permute(const SparsePoly& G, const std::array<int, 3>& s) {
    std::vector<std::size_t> place(s.begin(), s.end());
    return G.relabel(3, place);
}

}  // namespace

TEST_CASE("pair normalization examples") {
    auto p = normalize_pair(-3, 2);
    CHECK(p.n1 == -3);
    CHECK(p.n2 == 2);
    CHECK(p.a == 1);
    CHECK(p.b == 2);
    auto q = normalize_pair(0, 5);
    CHECK(q.n1 == 0);
    CHECK(q.n2 == 1);
    CHECK(q.a == 0);
    CHECK(q.b == 1);
    auto r = normalize_pair(2, -4);
    CHECK(r.reduced_by == 2);
    CHECK(r.n1 == -2);
    CHECK(r.n2 == 1);
    CHECK(r.swapped);
    CHECK(r.original() == std::array<int, 2>{2, -4});
    CHECK_THROWS_AS(normalize_pair(0, 0), Error);
}

TEST_CASE("pair normalization invariants") {
    int checked = 0;
    for (int m1 = -12; m1 <= 12; ++m1)
        for (int m2 = -12; m2 <= 12; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            auto p = normalize_pair(m1, m2);
            CHECK(std::gcd(p.n1, p.n2) == 1);
            CHECK(p.n1 * p.a + p.n2 * p.b == 1);
            if (p.n1 * p.n2 >= 0) {
                CHECK(p.n2 >= p.n1);
                CHECK(p.n1 >= 0);
            } else {
                CHECK(p.n2 > 0);
                CHECK(p.n2 <= -p.n1);
            }
            if (p.n1 != 0) {
                CHECK(p.b > 0);
                CHECK(p.b <= std::abs(p.n1));
                CHECK(std::abs(p.a) < p.n2);
            } else {
                CHECK(p.a == 0);
                CHECK(p.b == 1);
            }
            CHECK(p.a < p.b);
            CHECK(p.original() == std::array<int, 2>{m1, m2});
            ++checked;
        }
    CHECK(checked == 624);
}

TEST_CASE("substitution examples") {
    auto G = P3(kSquares);
    auto s = substitute(G, normalize_pair(0, 1));
    CHECK(s.M1 == 0);
    CHECK(s.M2 == 0);
    CHECK(s.B == LT("1 + L^2 + T^2"));
    auto t = substitute(G, normalize_pair(1, 1));
    CHECK(t.M1 == -2);
    CHECK(t.M2 == 0);
    CHECK(t.B == LT("T^4 + T^2 + L^2"));
    auto u = substitute(G, normalize_pair(-1, 1));
    CHECK(u.B == LT("1 + (1 + L^2)*T^2"));
    for (const auto* x : {&s, &t, &u}) CHECK(x->round_trip());
    CHECK_THROWS_AS(substitute(P3("x0*x1^2 + x2^3"), normalize_pair(0, 1)), Error);
    CHECK_THROWS_AS(substitute(P3("x0^2 + x1*x2"), normalize_pair(0, 1)), Error);
    CHECK_THROWS_AS(substitute(P3("(x0 + x1 + x2)^2"), normalize_pair(0, 1)), Error);
}

TEST_CASE("substitution round trip and squarefree B") {
    std::vector<SparsePoly> Gs{P3(kSquares), P3("x0^3 + x1^3 + x2^3"), P3("x0 + x1 + x2"),
                               P3("x0^2 + 3*x1^2 - 2*x2^2 + x0*x1 + x1*x2"), P3("x0^3 - x1^3 + 2*x2^3 + x0*x1*x2"),
                               P3("x0^4 + x1^4 + x2^4 - x0^2*x1*x2")};
    std::vector<std::array<int, 2>> pairs{{0, 1}, {1, 1}, {-1, 1}, {1, 2}, {-2, 1}, {-3, 2}, {2, 3}, {-1, 3}};
    int combos = 0;
    for (const auto& G : Gs)
        for (auto [m1, m2] : pairs) {
            auto s = substitute(G, normalize_pair(m1, m2));
            CHECK(s.round_trip());
            CHECK(is_squarefree(s.B));
            CHECK(!s.B.partial_eval(1, GaussRat(0)).is_zero());
            CHECK(!s.B.partial_eval(0, GaussRat(0)).is_zero());
            ++combos;
        }
    CHECK(combos >= 20);
}

TEST_CASE("beta loci for the worked pairs") {
    auto G = P3(kSquares);
    auto l0 = beta_loci(substitute(G, normalize_pair(0, 1)));
    CHECK(l0.alpha_poly == Lz("L^2 + 1"));
    CHECK(l0.gamma_poly == Lz("L^2 + 1"));
    CHECK(l0.alphas.size() == 2);
    auto l1 = beta_loci(substitute(G, normalize_pair(1, 1)));
    CHECK(l1.alpha_poly == Lz("L^2 - 1/4"));
    CHECK(l1.gammas.empty());
    CHECK(l1.leading.empty());
    for (const auto& a : l1.alphas) CHECK(a.exact());
    auto l2 = beta_loci(substitute(G, normalize_pair(-1, 1)));
    CHECK(l2.alpha_poly == Lz("L^2 + 1"));
    CHECK(l2.gammas.empty());
    CHECK(l2.leading_poly == Lz("L^2 + 1"));
}

TEST_CASE("discriminant resultant against the quadratic formula") {
    std::vector<SparsePoly> Gs{P3(kSquares), P3("x0^2 + 3*x1^2 - 2*x2^2 + x0*x1 + x1*x2"), P3("2*x0^2 - x1^2 + 5*x2^2 - x0*x2")};
    for (const auto& G : Gs)
        for (auto [m1, m2] : std::vector<std::array<int, 2>>{{0, 1}, {-1, 1}}) {
            auto s = substitute(G, normalize_pair(m1, m2));
            if (s.B.degree_in(1) != 2) continue;
            SparsePoly R = resultant(s.B, s.B.derivative(1), 1);
            CHECK(R == quadratic_discriminant_resultant(s.B));
        }
}

TEST_CASE("delta lines") {
    auto d = delta_lines(P3(kSquares));
    CHECK(d.size() == 6);
    auto c = delta_lines(P3("x0^3 + x1^3 + x2^3"));
    CHECK(c.size() == 9);
    int exact = 0;
    for (const auto& x : c) {
        cplx b = x.beta.root.center;
        CHECK(std::abs(b * b * b + 1.0) < 1e-9);
        if (x.beta.exact()) ++exact;
    }
    CHECK(exact == 3);  // delta = -1 in each chart
    auto l = delta_lines(P3("x0 + x1 + x2"));
    CHECK(l.size() == 3);
    for (const auto& x : l) CHECK(x.beta.matches(GaussRat(-1)));
}

TEST_CASE("exceptional set of the conic") {
    auto t0 = std::chrono::steady_clock::now();
    auto W = build_W(P3(kSquares), 2);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
    CHECK(W.curves.size() == 15);
    GaussRat I = GaussRat::i(), half(mpq_class(1, 2));
    for (auto s : {GaussRat(1), GaussRat(-1)}) {
        CHECK(has_curve(W, {-1, 1, 0}, s * I));
        CHECK(has_curve(W, {-1, 0, 1}, s * I));
        CHECK(has_curve(W, {0, -1, 1}, s * I));
        CHECK(has_curve(W, {-2, 1, 1}, s * half));
        CHECK(has_curve(W, {1, -2, 1}, s * half));
        CHECK(has_curve(W, {1, 1, -2}, s * half));
        CHECK(W.curves.size() == 15);
    }
    for (const auto& c : W.curves)
        if (c.kind != CurveSpec::Kind::CoordinateLine) CHECK(!c.beta.matches(GaussRat(0)));
    auto w1 = build_W(P3(kSquares), 1);
    CHECK(w1.curves.size() >= 3 + 6);
}

TEST_CASE("exceptional set symmetry under coordinate permutations") {
    auto G = P3("x0^2 + 3*x1^2 - 2*x2^2 + x0*x1");
    auto W = build_W(G, 2);
    std::array<int, 3> s{1, 2, 0};
    auto Ws = build_W(permute(G, s), 2);
    CHECK(W.curves.size() == Ws.curves.size());
    for (const auto& c : W.curves) {
        CurveSpec d = c;
        for (int j = 0; j < 3; ++j) d.exponents[s[j]] = c.exponents[j];
        bool found = false;
        for (const auto& e : Ws.curves) found = found || e.same_curve(d);
        CHECK(found);
    }
}

TEST_CASE("membership") {
    auto W = build_W(P3(kSquares), 2);
    MeroFn one, t = MeroFn::from_poly(zpoly("z"));
    auto m = member_of_W(W, {one, t, MeroFn::constant(GaussRat::i())});
    REQUIRE(m.size() == 1);
    CHECK(W.curves[m[0].index].exponents == std::array<int, 3>{-1, 0, 1});
    CHECK(m[0].exact);
    CHECK(member_of_W(W, {one, t, MeroFn::from_poly(zpoly("z+1"))}).empty());
    auto e = member_of_W(W, {one, MeroFn::exp_of(zpoly("z")), MeroFn::make(GaussRat(mpq_class(1, 2)), {}, zpoly("-z"))});
    REQUIRE(e.size() == 1);
    CHECK(W.curves[e[0].index].exponents == std::array<int, 3>{-2, 1, 1});
    auto z = member_of_W(W, {one, t, MeroFn::constant(GaussRat(0))});
    REQUIRE(z.size() == 1);
    CHECK(W.curves[z[0].index].kind == CurveSpec::Kind::CoordinateLine);
}

TEST_CASE("exceptional set documents") {
    auto W = build_W(P3(kSquares), 2);
    json j = exset_to_json(W);
    CHECK(j["curves"].size() == 15);
    CHECK(j["schema"] == "nevwb.exset/1");
    for (const auto& c : j["curves"]) CHECK(c.contains("equation"));
}
