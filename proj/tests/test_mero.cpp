#include <doctest.h>

#include "nevwb/error.hpp"
#include "nevwb/mero.hpp"
#include "nevwb/poly_io.hpp"

using namespace nevwb;

TEST_CASE("rational functions reduce") {
    RationalFn r(zpoly("z^2 - 1"), zpoly("2*z - 2"));
    CHECK(r.num() == zpoly("1/2*z + 1/2"));
    CHECK(r.den() == zpoly("1"));
    CHECK(r.is_polynomial());
    RationalFn s(zpoly("1"), zpoly("z"));
    CHECK((s * RationalFn(zvar())) == RationalFn(zpoly("1")));
    CHECK(s.derivative() == RationalFn(zpoly("-1"), zpoly("z^2")));
}

TEST_CASE("meromorphic functions canonicalize") {
    MeroFn f = MeroFn::make(GaussRat(2), {{zpoly("z^2 - 2*z + 1"), 1}, {zpoly("z - 1"), -1}}, SparsePoly(1));
    CHECK(f == MeroFn::make(GaussRat(2), {{zpoly("z - 1"), 1}}, SparsePoly(1)));
    MeroFn g = MeroFn::from_poly(zpoly("3*z^2 - 3"));
    CHECK(g.scalar() == GaussRat(3));
    CHECK(g.factors().size() == 1);
    CHECK((g / g) == MeroFn());
    CHECK(MeroFn::from_poly(SparsePoly(1)).is_zero());
    CHECK_THROWS_AS(MeroFn() / MeroFn::constant(GaussRat(0)), Error);
}

TEST_CASE("evaluation and log derivative") {
    MeroFn f = MeroFn::make(GaussRat(1), {{zpoly("z"), 2}, {zpoly("z + 1"), -1}}, zpoly("3*z"));
    cplx z(0.4, -0.3);
    cplx expect = z * z / (z + 1.0) * std::exp(3.0 * z);
    CHECK(std::abs(f.eval(z) - expect) < 1e-13);
    cplx ld = 2.0 / z - 1.0 / (z + 1.0) + 3.0;
    CHECK(std::abs(f.log_derivative().eval(z) - ld) < 1e-12);
    CHECK(f.order_at_zero() == 2);
    CHECK(std::abs(f.log_abs(z) - std::log(std::abs(expect))) < 1e-12);
    CHECK(!f.is_entire());
    CHECK(f.zeros().size() == 1);
    CHECK(f.zeros()[0].mult == 2);
    CHECK(f.poles()[0].mult == -1);
}

TEST_CASE("sums of exponential terms") {
    MeroSum a = MeroSum(MeroFn::exp_of(zpoly("z"))) + MeroSum(MeroFn::exp_of(zpoly("-z")));
    CHECK(a.num_groups() == 2);
    cplx z(0.7, 0.2);
    CHECK(std::abs(a.eval(z) - 2.0 * std::cosh(z)) < 1e-13);
    CHECK(std::abs(a.derivative().eval(z) - 2.0 * std::sinh(z)) < 1e-13);
    CHECK((a - a).is_zero());
    MeroSum sq = a * a;
    CHECK(sq.num_groups() == 3);
    CHECK(a.is_entire());
    ScaledValue big = MeroSum(MeroFn::exp_of(zpoly("z"))).eval_scaled(cplx(2000, 0));
    CHECK(big.log_abs() == doctest::Approx(2000.0));
}

TEST_CASE("compose and reduce tuples") {
    auto F = parse_poly("x0^2 + x1*x2", 3);
    std::vector<MeroFn> g{MeroFn::from_poly(zpoly("z")), MeroFn::exp_of(zpoly("z")), MeroFn::from_poly(zpoly("z - 2"))};
    MeroSum c = compose(F, g);
    cplx z(0.3, 0.9);
    CHECK(std::abs(c.eval(z) - (z * z + std::exp(z) * (z - 2.0))) < 1e-13);

    std::vector<MeroFn> h{MeroFn::from_poly(zpoly("z^2")), MeroFn::from_poly(zpoly("z*(z-1)")),
                          MeroFn::make(GaussRat(1), {{zpoly("z"), 1}, {zpoly("z + 1"), -1}}, SparsePoly(1))};
    auto r = reduced_tuple(h);
    CHECK(r[0] == MeroFn::from_poly(zpoly("z*(z+1)")));
    CHECK(r[1] == MeroFn::from_poly(zpoly("(z-1)*(z+1)")));
    CHECK(r[2] == MeroFn());
}

TEST_CASE("divisor merge") {
    Divisor d{{cplx(1, 0), 2}, {cplx(1 + 1e-12, 0), -2}, {cplx(0, 1), 1}};
    auto m = divisor_merge(d);
    REQUIRE(m.size() == 1);
    CHECK(m[0].mult == 1);
}
