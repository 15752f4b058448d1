#include <doctest.h>

#include <random>
#include <set>

#include "nevwb/effective_constants.hpp"
#include "nevwb/error.hpp"

using namespace nevwb;

namespace {

// multiplicative evaluation, no factorials
mpz_class oracle_binom(long top, long k) {
    if (k < 0 || top < k || top < 0) return 0;
    mpz_class r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= top - k + i;
        r /= i;
    }
    return r;
}

mpq_class oracle_cond1(long n, long d, long m) {
    mpz_class M = 2 * oracle_binom(m + n - d, n) - oracle_binom(m + n - 2 * d, n);
    mpz_class Mp = oracle_binom(m + n, n) - M;
    return mpq_class(Mp * m * n) / mpq_class(M);
}

mpq_class oracle_cond2(long n, long d, long m) {
    mpz_class M = 2 * oracle_binom(m + n - d, n) - oracle_binom(m + n - 2 * d, n);
    mpz_class Mp = oracle_binom(m + n, n) - M;
    mpz_class c = 2 * oracle_binom(m + n - d, n + 1) - oracle_binom(m + n - 2 * d, n + 1);
    mpq_class v = mpq_class(m) / (n + 1) * mpq_class(oracle_binom(m + n, n)) - mpq_class(c) - mpq_class(Mp * m);
    return v / mpq_class(M);
}

long oracle_choose_m(const mpq_class& eps, long n, long d) {
    for (long m = 2 * d;; ++m)
        if (oracle_cond1(n, d, m) <= eps / 4 && oracle_cond2(n, d, m) <= eps / (4 * (n + 1))) return m;
}

// all multisets of size t from the family, summed
std::size_t brute_sumset(const MonomialFamily& f, long t) {
    std::set<std::vector<long>> out;
    std::vector<long> acc(f.generators(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t start, long left) {
        if (left == 0) {
            out.insert(acc);
            return;
        }
        for (std::size_t i = start; i < f.exponents.size(); ++i) {
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += f.exponents[i][k];
            rec(i, left - 1);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] -= f.exponents[i][k];
        }
    };
    rec(0, t);
    return out.size();
}

MonomialFamily simplex(std::size_t k) {
    MonomialFamily f;
    f.exponents.push_back(std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long> e(k, 0);
        e[i] = 1;
        f.exponents.push_back(e);
    }
    return f;
}

}  // namespace

TEST_CASE("constants examples") {
    auto p = constants(2, 2, 4);
    CHECK(p.M == 11);
    CHECK(p.M_prime == 4);
    CHECK(p.c_mnd == 8);
    CHECK(p.L == 7);
    CHECK(oracle_binom(2, 3) == 0);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(-3, 2) == 0);
    for (long n = 2; n <= 6; ++n)
        for (long d = 1; d <= 4; ++d) CHECK(binom(2 * d + n - 2 * d, n) == 1);
    CHECK_THROWS_AS(constants(2, 3, 5), Error);
    CHECK_THROWS_AS(constants(1, 1, 5), Error);
}

TEST_CASE("constants: n=2, d=1 closed forms") {
    for (long m = 2; m <= 100; ++m) {
        auto p = constants(2, 1, m);
        CHECK(p.M == m * (m + 3) / 2);
        CHECK(p.M_prime == 1);
    }
}

TEST_CASE("constants agree with the binomial oracle") {
    int cases = 0;
    for (long n = 2; n <= 6; ++n)
        for (long d = 1; d <= 4; ++d)
            for (long m = 2 * d; m <= 2 * d + 30; ++m) {
                auto p = constants(n, d, m);
                mpz_class M = 2 * oracle_binom(m + n - d, n) - oracle_binom(m + n - 2 * d, n);
                mpz_class c = 2 * oracle_binom(m + n - d, n + 1) - oracle_binom(m + n - 2 * d, n + 1);
                CHECK(p.M == M);
                CHECK(p.M_prime == oracle_binom(m + n, n) - M);
                CHECK(p.c_mnd == c);
                // L = ceil(M(M-1)/(2c)): L-1 < M(M-1)/(2c) <= L
                CHECK(2 * c * p.L >= M * (M - 1));
                CHECK(2 * c * (p.L - 1) < M * (M - 1));
                ++cases;
            }
    CHECK(cases >= 500);
}

TEST_CASE("choose_m") {
    mpq_class half(1, 2);
    CHECK(choose_m(half, 2, 1) == 29);
    auto p28 = constants(2, 1, 28), p29 = constants(2, 1, 29);
    CHECK(findm_first(p28) > half / 4);
    CHECK(findm_first(p29) <= half / 4);
    for (long m = 2; m <= 50; ++m) CHECK(findm_second(constants(2, 1, m)) == 0);
    CHECK(choose_m(mpq_class(100), 2, 1) == 2);
    CHECK(choose_m(half, 2, 2) == oracle_choose_m(half, 2, 2));
    for (long n : {2, 3, 4})
        for (long d : {1, 2, 3})
            for (mpq_class eps : {mpq_class(1, 2), mpq_class(1, 3), mpq_class(9, 10)}) {
                long m = choose_m(eps, n, d);
                CHECK(m == oracle_choose_m(eps, n, d));
                CHECK(findm_holds(constants(n, d, m), eps));
                if (m > 2 * d) CHECK(!findm_holds(constants(n, d, m - 1), eps));
            }
    CHECK_THROWS_AS(choose_m(mpq_class(0), 2, 1), Error);
}

TEST_CASE("dim_Vt examples") {
    MonomialFamily unit{{{0, 0}}};
    for (long t = 0; t < 10; ++t) CHECK(dim_Vt(unit, t) == 1);
    MonomialFamily line{{{0}, {1}}};
    for (long t = 0; t < 30; ++t) CHECK(dim_Vt(line, t) == t + 1);
    CHECK(dim_Vt(simplex(2), 2) == 6);
    CHECK_THROWS_AS(dim_Vt(MonomialFamily{{{1, 0}}}, 2), Error);
}

TEST_CASE("dim_Vt matches brute-force sumsets") {
    std::mt19937 rng(20261016);
    int cases = 0;
    for (std::size_t k = 1; k <= 4; ++k)
        for (int trial = 0; trial < 7; ++trial) {
            MonomialFamily f;
            f.exponents.push_back(std::vector<long>(k, 0));
            std::size_t size = 1 + rng() % 3;
            for (std::size_t s = 0; s < size; ++s) {
                std::vector<long> e(k);
                for (auto& x : e) x = static_cast<long>(rng() % 5) - 1;
                f.exponents.push_back(e);
            }
            mpz_class prev = 0;
            for (long t = 0; t <= 8; ++t) {
                mpz_class v = dim_Vt(f, t);
                CHECK(v == brute_sumset(f, t));
                CHECK(v == dim_Vt_enumerate(f, t));
                CHECK(v >= prev);
                prev = v;
                ++cases;
            }
        }
    CHECK(cases >= 200);
}

TEST_CASE("sumset extrapolation") {
    SumsetGrowth g(simplex(2), 2000);
    for (long t : {100L, 1000L, 123456L}) {
        CHECK(g.count(t) == oracle_binom(t + 2, 2));
        CHECK(g.extrapolated(t));
    }
    MonomialFamily gaps{{{0}, {3}, {5}}};
    SumsetGrowth h(gaps, 300);
    CHECK(h.count(400) == dim_Vt_enumerate(gaps, 400));
    SumsetGrowth s3(simplex(3), 5000);
    CHECK(s3.count(500) == oracle_binom(503, 3));
}

TEST_CASE("choose_b") {
    mpq_class half(1, 2);
    auto c = choose_b(half, 2, 2, 1, MonomialFamily{{{0}}});
    CHECK(c.b == 1);
    CHECK(c.w == 1);
    CHECK(c.u == 1);

    long m = choose_m(half, 2, 1), n = 2;
    long M = constants(n, 1, m).M.get_si();
    // w/u - 1 = M/(Mb - M + 1) <= eps/(4mn)  <=>  b >= (4mnM/eps + M - 1)/M
    mpq_class need = (mpq_class(4 * m * n * M) / half + M - 1) / M;
    mpz_class b_oracle;
    mpz_cdiv_q(b_oracle.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
    auto lb = choose_b(half, m, n, 1, MonomialFamily{{{0}, {1}}});
    CHECK(lb.b == b_oracle.get_si());
    CHECK(lb.w == M * lb.b + 1);

    auto sb = choose_b(half, m, n, 1, simplex(2));
    long b = 1;
    for (;; ++b) {
        mpq_class r(oracle_binom(M * b + 2, 2), oracle_binom(M * b - M + 2, 2));
        r.canonicalize();
        if (r - 1 <= half / (4 * m * n)) break;
    }
    CHECK(sb.b == b);
    CHECK(sb.extrapolated);
}

TEST_CASE("choose_N") {
    mpq_class half(1, 2);
    auto p = constants(2, 1, 29);
    mpz_class base = 4 * 3 * 29 * p.L * 2;
    CHECK(choose_N(half, 2, 29, p.L, p.M, 0) == base + 1);
    mpq_class c3(7, 3);
    mpq_class x = 4 * (mpq_class(3 * 29) * p.L + c3 / mpq_class(p.M)) / half;
    mpz_class N = choose_N(half, 2, 29, p.L, p.M, c3);
    CHECK(N > x);
    CHECK(N - 1 <= x);
    for (mpq_class eps : {mpq_class(1, 7), mpq_class(1, 3), mpq_class(2, 5)}) {
        mpz_class a = choose_N(eps, 2, 29, p.L, p.M, c3), b = choose_N(2 * eps, 2, 29, p.L, p.M, c3);
        mpz_class diff = a - 2 * b;
        CHECK(abs(diff) <= 2);
    }
    CHECK_THROWS_AS(choose_N(0, 2, 29, p.L, p.M, 0), Error);
}

TEST_CASE("full profile and documents") {
    auto p = full_profile(mpq_class(1, 2), 2, 1, MonomialFamily{{{0}, {1}}}, std::nullopt);
    CHECK(p.m == 29);
    CHECK(!p.c3_supplied);
    CHECK(*p.c3 == 0);
    auto j = profile_to_json(p);
    CHECK(j["M"] == "464");
    CHECK(j["M_prime"] == "1");
    CHECK(profile_to_text(p).find("not supplied") != std::string::npos);
    CHECK(parse_rational("3/6") == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    auto f = MonomialFamily::from_json(json::parse(R"({"exponents": [[0,0],[1,2]]})"));
    CHECK(f.generators() == 2);
    CHECK_THROWS_AS(MonomialFamily::from_json(json::parse(R"([[1]])")), Error);
}
