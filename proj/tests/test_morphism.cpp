#include <doctest.h>

#include <random>

#include "nevwb/error.hpp"
#include "nevwb/morphism.hpp"
#include "nevwb/poly_algorithms.hpp"

using namespace nevwb;

namespace {

SparsePoly P3(const std::string& s) { return parse_poly(s, 3, {"x0", "x1", "x2"}); }
SparsePoly Y3(const std::string& s) { return parse_poly(s, 3, {"y0", "y1", "y2"}); }

bool proportional(const SparsePoly& a, const SparsePoly& b) { return a.monic() == b.monic(); }

SparsePoly random_form(std::mt19937& rng, int deg) {
    SparsePoly p(3);
    while (p.is_zero() || p.total_degree() != deg) {
        p = SparsePoly(3);
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j) {
                if (rng() % 3 == 0) continue;
                long c = static_cast<long>(rng() % 7) - 3;
                p.add_term({i, j, deg - i - j}, GaussRat(c));
            }
    }
    return p;
}

// 3x3 determinant by cofactor expansion
SparsePoly cofactor_det(const std::array<std::array<SparsePoly, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("jacobian examples") {
    auto m = PowerMorphism::make(P3("x0"), P3("x1"), P3("x0^2 + x1^2 + x2^2"));
    CHECK(m.a == std::array<int, 3>{2, 2, 1});
    CHECK(jacobian_det(m, true) == P3("2*x2"));
    CHECK(jacobian_det(m, false) == P3("8*x0*x1*x2"));
    auto id = PowerMorphism::make(P3("x0"), P3("x1"), P3("x2"));
    CHECK(jacobian_det(id, true) == P3("1"));
    CHECK_THROWS_AS(PowerMorphism::make(P3("x0"), P3("x1"), P3("x0 + x1")), Error);
    CHECK_THROWS_AS(PowerMorphism::make(P3("x0"), P3("x0*x1"), P3("x2")), Error);
    CHECK_THROWS_AS(PowerMorphism::make(P3("x0 + x1^2"), P3("x1"), P3("x2")), Error);
}

TEST_CASE("Euler and determinant identities on random morphisms") {
    std::mt19937 rng(7);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
        int d1 = 1 + rng() % 3, d2 = 1 + rng() % 3, d3 = 1 + rng() % 3;
        auto m = PowerMorphism::make(random_form(rng, d1), random_form(rng, d2), random_form(rng, d3), false);
        auto r = euler_identity_check(m);
        CHECK(r.euler);
        CHECK(r.determinant);
        std::array<std::array<SparsePoly, 3>, 3> M;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M[i][j] = m.F[i].derivative(j);
        SparsePoly G = jacobian_det(m, true);
        CHECK(G == cofactor_det(M));
        if (t < 30) {
            SparsePoly J = jacobian_det(m, false);
            SparsePoly factor = SparsePoly::constant(3, GaussRat(1));
            for (int i = 0; i < 3; ++i) factor *= m.F[i].pow(m.a[i] - 1) * GaussRat(m.a[i]);
            CHECK(J == factor * G);
            if (!G.is_zero()) CHECK(try_divide(J, G).has_value());
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("intersection points") {
    auto p = intersection_points(P3("x0"), P3("x1"));
    REQUIRE(p.size() == 1);
    CHECK(p[0].exact);
    CHECK((*p[0].exact)[2] == GaussRat(1));
    auto q = intersection_points(P3("x0^2 + x1^2 + x2^2"), P3("x0"));
    CHECK(q.size() == 2);
    auto c = intersection_points(P3("x0^2 + x1^2 - x2^2"), P3("x0^2 - 2*x1^2 + x1*x2 - x2^2"));
    int total = 0;
    for (const auto& P : c) {
        auto v1 = eval_at(P3("x0^2 + x1^2 - x2^2"), P), v2 = eval_at(P3("x0^2 - 2*x1^2 + x1*x2 - x2^2"), P);
        CHECK(std::abs(v1.value) <= v1.bound + 1e-12);
        CHECK(std::abs(v2.value) <= v2.bound + 1e-12);
        ++total;
    }
    CHECK(total >= 1);
    CHECK(total <= 4);
    CHECK_THROWS_AS(intersection_points(P3("x0*x1"), P3("x0*x2")), Error);
    // irrational points: x1^2 = 2 x0^2 meets x2 = x0 at (1 : +-sqrt 2 : 1)
    auto r = intersection_points(P3("x1^2 - 2*x0^2"), P3("x2 - x0"));
    REQUIRE(r.size() == 2);
    for (const auto& P : r) {
        CHECK(!P.exact);
        CHECK(std::abs(std::abs(P.x[1].real()) - std::sqrt(2.0)) < 1e-10);
    }
}

TEST_CASE("general position") {
    CHECK(general_position_check({P3("x0"), P3("x1"), P3("x2")}).in_general_position());
    auto bad = general_position_check({P3("x0"), P3("x1"), P3("x0 + x1")});
    REQUIRE(!bad.in_general_position());
    CHECK(bad.violations[0].certified);
    CHECK(*bad.violations[0].point.exact == std::array<GaussRat, 3>{GaussRat(0), GaussRat(0), GaussRat(1)});
    auto G = P3("x0^2 + x1^2 + x2^2");
    auto rep = general_position_check({G, P3("x0"), P3("x1"), P3("x2")});
    CHECK(rep.in_general_position());
    for (auto e : {std::vector<GaussRat>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) CHECK(!G.eval(e).is_zero());
    // three lines through the irrational point (1 : sqrt2 : 1) of a conic pair
    auto con = general_position_check({P3("x1^2 - 2*x0^2"), P3("x2 - x0"), P3("x0^2 + x1^2 - 3*x2^2")});
    CHECK(!con.in_general_position());
    CHECK_THROWS_AS(general_position_check({P3("x0*x1"), P3("x0*x2")}), Error);
}

TEST_CASE("transversality") {
    auto t = transversality_check(P3("x0"), P3("x1"));
    REQUIRE(t.points.size() == 1);
    CHECK(t.points[0].transversal == Decision::Yes);
    CHECK(std::abs(std::abs(t.points[0].minor.value) - 1.0) < 1e-15);
    auto tan = transversality_check(P3("x1*x2"), P3("x1*x2 - x0^2"));
    REQUIRE(tan.points.size() == 2);
    for (const auto& e : tan.points) CHECK(e.transversal == Decision::No);
    auto tan2 = transversality_check(P3("x1"), P3("x1*x2 - x0^2"));
    REQUIRE(tan2.points.size() == 1);
    CHECK(tan2.points[0].transversal == Decision::No);
    CHECK(!tan2.transversal());
    auto c = transversality_check(P3("x0^2 + x1^2 + x2^2"), P3("x0"));
    CHECK(c.points.size() == 2);
    CHECK(c.transversal());
    auto irr = transversality_check(P3("x1^2 - 2*x0^2"), P3("x2 - x0"));
    CHECK(irr.points.size() == 2);
    CHECK(irr.transversal());
}

TEST_CASE("pushforward") {
    auto m = PowerMorphism::make(P3("x0"), P3("x1"), P3("x0^2 + x1^2 + x2^2"));
    auto r = pushforward_curve(m, P3("x2"));
    CHECK(proportional(r.A, Y3("y2 - y0 - y1")));
    CHECK(m.pullback(Y3("y2 - y0 - y1")) == P3("x2^2"));
    CHECK(r.vanishing_order == 2);
    CHECK(try_divide(m.pullback(r.A), P3("x2")).has_value());

    auto id = PowerMorphism::make(P3("x0"), P3("x1"), P3("x2"));
    for (auto z : {"x0 + 2*x1 - x2", "x0^2 + x1*x2 + 3*x2^2", "x0*x1 - x2^2"}) {
        auto q = pushforward_curve(id, P3(z));
        CHECK(proportional(q.A, P3(z)));
        CHECK(q.vanishing_order == 1);
    }

    auto sq = PowerMorphism::make(P3("x0"), P3("x1"), P3("x2^2 + x0*x1"));
    auto s = pushforward_curve(sq, P3("x0 - x1"));
    CHECK(try_divide(sq.pullback(s.A), P3("x0 - x1")).has_value());
    CHECK(s.A.is_homogeneous());

    auto cremona = PowerMorphism::make(P3("x1*x2"), P3("x0*x2"), P3("x0*x1"), false);
    CHECK_THROWS_AS(pushforward_curve(cremona, P3("x0")), Error);
}
