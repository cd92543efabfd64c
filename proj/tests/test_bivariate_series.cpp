#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ngss/bivariate_series.hpp"

using namespace ngss;

namespace {

BivariateSeries random_series(std::mt19937& rng, int me, int mh) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BivariateSeries s(me, mh);
    for (int i = 0; i <= me; ++i)
        for (int j = 0; j <= mh; ++j) s.at(i, j) = cx(u(rng), u(rng));
    return s;
}

double max_coeff_diff(const BivariateSeries& a, const BivariateSeries& b) {
    double worst = 0.0;
    for (int i = 0; i <= std::min(a.max_eps(), b.max_eps()); ++i)
        for (int j = 0; j <= std::min(a.max_hat(), b.max_hat()); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("add and mul basics") {
    BivariateSeries a(1, 1), b(1, 1);
    a.at(0, 0) = 1.0;
    a.at(1, 0) = 1.0;  // 1 + eps
    b.at(0, 1) = 2.0;  // 2 ehat
    const BivariateSeries s = series_add(a, b);
    CHECK(s.at(0, 0) == cx(1.0));
    CHECK(s.at(1, 0) == cx(1.0));
    CHECK(s.at(0, 1) == cx(2.0));

    BivariateSeries c(1, 1);
    c.at(0, 0) = 1.0;
    c.at(0, 1) = 1.0;  // 1 + ehat
    const BivariateSeries p = series_mul(a, c);
    CHECK(p.at(0, 0) == cx(1.0));
    CHECK(p.at(1, 0) == cx(1.0));
    CHECK(p.at(0, 1) == cx(1.0));
    CHECK(p.at(1, 1) == cx(1.0));
}

TEST_CASE("(eps - ehat)^2 binomial") {
    BivariateSeries d(2, 2);
    d.at(1, 0) = 1.0;
    d.at(0, 1) = -1.0;
    const BivariateSeries sq = series_mul(d, d);
    CHECK(sq.at(2, 0) == cx(1.0));
    CHECK(sq.at(1, 1) == cx(-2.0));
    CHECK(sq.at(0, 2) == cx(1.0));
    CHECK(sq.at(0, 0) == cx(0.0));
}

TEST_CASE("exp coefficients") {
    BivariateSeries a(2, 2);
    a.at(1, 0) = 1.0;
    a.at(0, 1) = 2.0;  // eps + 2 ehat
    const BivariateSeries e = series_exp(a);
    CHECK(std::abs(e.at(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(e.at(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(e.at(0, 1) - 2.0) < 1e-15);
    CHECK(std::abs(e.at(2, 0) - 0.5) < 1e-15);
    CHECK(std::abs(e.at(1, 1) - 2.0) < 1e-15);
    CHECK(std::abs(e.at(0, 2) - 2.0) < 1e-15);

    const BivariateSeries zero(2, 2);
    const BivariateSeries one = series_exp(zero);
    CHECK(one.at(0, 0) == cx(1.0));
    CHECK(one.at(1, 1) == cx(0.0));

    const BivariateSeries c = series_exp(BivariateSeries::constant(cx(0.3, -0.7), 2, 2));
    CHECK(std::abs(c.at(0, 0) - std::exp(cx(0.3, -0.7))) < 1e-15);
    CHECK(c.at(1, 0) == cx(0.0));
}

TEST_CASE("recip affine examples") {
    const BivariateSeries r = series_recip_affine(2.0, 1, 1);
    CHECK(std::abs(r.at(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(r.at(1, 0) + 0.25) < 1e-15);
    CHECK(std::abs(r.at(0, 1) - 0.25) < 1e-15);
    CHECK(std::abs(r.at(1, 1) + 0.25) < 1e-15);

    const BivariateSeries r1 = series_recip_affine(1.0, 2, 0);
    CHECK(std::abs(r1.at(2, 0) - 1.0) < 1e-15);

    CHECK_THROWS_AS(series_recip_affine(0.0, 1, 1), error);
}

TEST_CASE("recip affine matches finite differences for complex base") {
    const cx c(0.0, 2.0);
    const BivariateSeries r = series_recip_affine(c, 3, 3);
    const double h = 1e-4;
    auto f = [&](double e, double eh) { return 1.0 / (c + e - eh); };
    const cx d10 = (f(h, 0) - f(-h, 0)) / (2 * h);
    const cx d01 = (f(0, h) - f(0, -h)) / (2 * h);
    const cx d11 = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
    CHECK(std::abs(r.at(1, 0) - d10) < 1e-6);
    CHECK(std::abs(r.at(0, 1) - d01) < 1e-6);
    CHECK(std::abs(r.at(1, 1) - d11) < 1e-6);
}

TEST_CASE("coefficient extraction bounds") {
    const BivariateSeries s = BivariateSeries::constant(5.0, 1, 0);
    CHECK(series_coeff(s, 1, 0) == cx(0.0));
    CHECK_THROWS_MATCHES(series_coeff(s, 0, 1), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == "OrderOutOfRange"; }));
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 25; ++rep) {
        const auto a = random_series(rng, 3, 3);
        const auto b = random_series(rng, 3, 3);
        const auto c = random_series(rng, 3, 3);
        CHECK(max_coeff_diff(series_mul(a, b), series_mul(b, a)) < 1e-12);
        CHECK(max_coeff_diff(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))) <
              1e-12);
        CHECK(max_coeff_diff(series_mul(a, series_add(b, c)),
                             series_add(series_mul(a, b), series_mul(a, c))) < 1e-12);
    }
}

TEST_CASE("exp(a) exp(-a) = 1 and recip inverts its affine") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        const auto a = random_series(rng, 3, 3);
        const auto prod = series_mul(series_exp(a), series_exp(series_scale(-1.0, a)));
        BivariateSeries one = BivariateSeries::constant(1.0, 3, 3);
        CHECK(max_coeff_diff(prod, one) < 1e-12);
    }

    const cx c(1.3, -0.4);
    BivariateSeries affine(2, 2);
    affine.at(0, 0) = c;
    affine.at(1, 0) = 1.0;
    affine.at(0, 1) = -1.0;
    const auto prod = series_mul(series_recip_affine(c, 2, 2), affine);
    CHECK(max_coeff_diff(prod, BivariateSeries::constant(1.0, 2, 2)) < 1e-12);
}

TEST_CASE("mixed truncation orders take the minimum") {
    const BivariateSeries a(3, 1), b(2, 2);
    const BivariateSeries s = series_mul(a, b);
    CHECK(s.max_eps() == 2);
    CHECK(s.max_hat() == 1);
}
