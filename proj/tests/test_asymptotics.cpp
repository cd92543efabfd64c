#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ngss/asymptotics.hpp"
#include "ngss/presets.hpp"

using namespace ngss;

namespace {

ValidatedConfiguration raw1(cx k, cx a, cx c) {
    SpectralConfiguration cfg;
    cfg.raw_amplitudes = true;
    cfg.poles = {PoleDatum{k, 1, {a}, {std::conj(a)}, {c}, {std::conj(c)}}};
    return validate_config(cfg);
}

}  // namespace

TEST_CASE("case classification") {
    const double r3 = std::sqrt(3.0);
    CHECK(classify_case(0.0, 1.0) == CaseTag::Case1);
    CHECK(classify_case(1.0, 0.0) == CaseTag::Case2);
    CHECK(classify_case(cx(0, 0.5), cx(0, 0.5 * r3)) == CaseTag::Case3);
    CHECK_THROWS_MATCHES(
        classify_case(0.0, 0.0), error,
        Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == "BothZero"; }));
}

TEST_CASE("frame velocity and width") {
    const auto cfg = raw1(cx(0.5, 0.5), 1.0, 1.0);
    const AsymptoticProfile p = asymptotic_profile(cfg, TimeDirection::Future);
    CHECK(p.velocity == Catch::Approx(-2.0));  // -4 (3/4 - 1/4)
    CHECK(p.width_rate == Catch::Approx(1.0));
}

TEST_CASE("fig2 amplitudes and position shift") {
    const auto cfg = validate_config(figure_preset("fig2").config);
    const AsymptoticProfile past = asymptotic_profile(cfg, TimeDirection::Past);
    const AsymptoticProfile fut = asymptotic_profile(cfg, TimeDirection::Future);
    CHECK(past.amplitude == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
    CHECK(fut.amplitude == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
    CHECK(position_shift(cfg) == Catch::Approx(0.5 * std::log(1.0 + 1.0 / 2.56)).margin(1e-12));
    CHECK(past.velocity == Catch::Approx(-4.0 * (3.0 * 2.56 - 1.0)));
}

TEST_CASE("fig3 collision amplitudes match the long-time fits") {
    const auto cfg = validate_config(figure_preset("fig3").config);
    const CollisionReport col = collision_amplitudes(cfg);
    CHECK(col.B == Catch::Approx(std::sqrt(2.0) * 0.5).margin(1e-12));  // 0.70711
    CHECK(col.A == Catch::Approx(1.2193607).margin(1e-6));
    CHECK(col.A / col.B == Catch::Approx(1.7244398).margin(1e-6));
    CHECK_FALSE(col.equal);

    // v = 3 kR^2 - kI^2 < 0 here, so the pure-a end is the past
    const SechFitResult fit_m = fit_frame_peak(cfg, -30.0);
    const SechFitResult fit_p = fit_frame_peak(cfg, +30.0);
    CHECK(std::abs(fit_m.amplitude - col.B) <= 1e-3 * col.B);
    CHECK(std::abs(fit_p.amplitude - col.A) <= 1e-3 * col.A);

    const AsymptoticProfile past = asymptotic_profile(cfg, TimeDirection::Past);
    const AsymptoticProfile fut = asymptotic_profile(cfg, TimeDirection::Future);
    CHECK(past.amplitude == Catch::Approx(col.B).margin(1e-12));
    CHECK(fut.amplitude == Catch::Approx(col.A).margin(1e-12));
    // measured sech offsets agree with the closed-form deltas
    CHECK(std::abs(fit_m.delta - past.position_offset * 2.0 * 1.0) < 1e-3);
    CHECK(std::abs(fit_p.delta - fut.position_offset * 2.0 * 1.0) < 1e-3);
}

TEST_CASE("fig2 fitted offsets follow the v-aware end pairing") {
    const auto cfg = validate_config(figure_preset("fig2").config);
    // v > 0: the pure-a end is the future
    const SechFitResult fit_m = fit_frame_peak(cfg, -30.0);
    const SechFitResult fit_p = fit_frame_peak(cfg, +30.0);
    CHECK(fit_m.amplitude == Catch::Approx(std::sqrt(2.0)).margin(1e-3));
    CHECK(fit_p.amplitude == Catch::Approx(std::sqrt(2.0)).margin(1e-3));
    const AsymptoticProfile past = asymptotic_profile(cfg, TimeDirection::Past);
    const AsymptoticProfile fut = asymptotic_profile(cfg, TimeDirection::Future);
    CHECK(std::abs(fit_m.delta - 2.0 * past.position_offset) < 1e-3);
    CHECK(std::abs(fit_p.delta - 2.0 * fut.position_offset) < 1e-3);
    CHECK(std::abs((fit_p.delta - fit_m.delta) + position_shift(cfg)) < 1e-2);
}

TEST_CASE("equality criterion") {
    const auto equal_cfg = raw1(cx(0.5, 0.5), 1.0, 1.0);
    const CollisionReport r1 = collision_amplitudes(equal_cfg);
    CHECK(r1.equal);
    CHECK(r1.B == Catch::Approx(r1.A).margin(1e-12));

    const auto phase_cfg = raw1(cx(0.5, 0.5), 1.0, cx(0.0, 1.0));  // Re(a* c) = 0
    const CollisionReport r2 = collision_amplitudes(phase_cfg);
    CHECK(r2.re_a1c1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(r2.equal);
    CHECK(r2.B == Catch::Approx(r2.A).margin(1e-12));

    const auto cfg3 = validate_config(figure_preset("fig3").config);
    const CollisionReport r3 = collision_amplitudes(cfg3);
    CHECK_FALSE(r3.equal);
}

TEST_CASE("criterion soundness: algebraic equality implies equal closed-form amplitudes") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int rep = 0; rep < 100; ++rep) {
        const cx a(u(rng), u(rng));
        if (std::abs(a) < 0.1) continue;
        const cx k(0.3 + std::abs(u(rng)), 0.3 + std::abs(u(rng)));
        // first criterion: Re(a* c) = 0
        const CollisionReport r1 = collision_amplitudes(raw1(k, a, cx(0, 1) * a * (0.2 + u(rng) * u(rng))));
        CHECK(r1.equal);
        CHECK(std::abs(r1.A - r1.B) <= 1e-12 * std::max(r1.A, r1.B));
        // second criterion: c = +-a (both sides vanish)
        const CollisionReport r2 = collision_amplitudes(raw1(k, a, (rep % 2 ? 1.0 : -1.0) * a));
        CHECK(r2.equal);
        CHECK(std::abs(r2.A - r2.B) <= 1e-12 * std::max(r2.A, r2.B));
        // generic draws are unequal and must be flagged as such
        const cx c(u(rng), u(rng));
        if (std::abs(c) < 0.1) continue;
        const CollisionReport r3 = collision_amplitudes(raw1(k, a, c));
        CHECK(r3.equal == (std::abs(r3.A - r3.B) <= 1e-9 * std::max(r3.A, r3.B)));
    }
}

TEST_CASE("case 1 profile degenerates to amplitude zero") {
    const auto cfg = validate_config(figure_preset("fig1").config);
    const AsymptoticProfile p = asymptotic_profile(cfg, TimeDirection::Future);
    CHECK(p.amplitude == 0.0);
    // the primary frame really does empty out at long times
    const double v = 3.0 * 0.01 * 0.01 - 0.25;
    const double frame_x = -4.0 * v * 30.0;
    const FieldSample s = q_simple(cfg, frame_x, 30.0);
    CHECK(std::abs(s.q) < 1e-20);
}

TEST_CASE("fit consistency on a random Case3 configuration") {
    const auto cfg = raw1(cx(0.45, 0.62), cx(0.8, -0.3), cx(-0.4, 0.9));
    const CollisionReport col = collision_amplitudes(cfg);
    const bool pure_future = 0.62 * (3.0 * 0.45 * 0.45 - 0.62 * 0.62) >= 0.0;
    const SechFitResult fm = fit_frame_peak(cfg, -30.0);
    const SechFitResult fp = fit_frame_peak(cfg, +30.0);
    const double amp_past = pure_future ? col.A : col.B;
    const double amp_future = pure_future ? col.B : col.A;
    CHECK(std::abs(fm.amplitude - amp_past) <= 1e-3 * amp_past);
    CHECK(std::abs(fp.amplitude - amp_future) <= 1e-3 * amp_future);
}
