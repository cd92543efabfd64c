#pragma once

// Named parameter sets fig1..fig15 with their plotting windows. Presets 1-10
// use raw amplitudes (order-1 poles, b and d completed by b = conj(a),
// d = conj(c) where the source lists only a and c); presets 11-15 use the
// exponent encoding with the listed pole orders.
//
// fig6 and fig8 nominally pair k2 = -k1, which collides with the derived
// symmetric pole set; they ship as the N=1 equivalents carrying pole 1's data.

#include <cmath>
#include <string>

#include "ngss/grid_io.hpp"
#include "ngss/spectral_config.hpp"

namespace ngss {

struct Preset {
    std::string name;
    SpectralConfiguration config;
    GridSpec window;
    std::string note;
};

namespace detail {

inline PoleDatum raw_pole(cx k, cx a, cx b, cx c, cx d) {
    return PoleDatum{k, 1, {a}, {b}, {c}, {d}};
}

inline PoleDatum exp_pole(cx k, int order, std::vector<cx> a, std::vector<cx> b, std::vector<cx> c,
                          std::vector<cx> d) {
    return PoleDatum{k, order, std::move(a), std::move(b), std::move(c), std::move(d)};
}

inline GridSpec window(double tmax) { return GridSpec{-10.0, 10.0, -tmax, tmax, 201, 101}; }

}  // namespace detail

inline Preset figure_preset(const std::string& name) {
    using detail::raw_pole;
    using detail::exp_pole;
    using detail::window;
    const cx i(0.0, 1.0);
    const double r3 = std::sqrt(3.0), r2 = std::sqrt(2.0);

    Preset p;
    p.name = name;
    p.config.sigma = 1;

    if (name == "fig1") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.01, 0.5), 0.0, 0.0, 1.0, 1.0)};
        p.window = window(5.0);
    } else if (name == "fig2") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(1.6, 1.0), 1.0, 1.0, 0.0, 0.0)};
        p.window = window(0.5);
    } else if (name == "fig3") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.1, 1.0), 0.5 * i, -0.5 * i, 0.5 * r3 * i, -0.5 * r3 * i)};
        p.window = window(5.0);
    } else if (name == "fig4") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.5, 0.5), 0.5 * i, -0.5 * i, 0.5 * r3 * i, -0.5 * r3 * i)};
        p.window = window(5.0);
    } else if (name == "fig5") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.5, 0.5), 1.0, 1.0, 1.0, 1.0)};
        p.window = window(5.0);
    } else if (name == "fig6") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.5, 0.5), 1.0, 0.0, 0.0, 0.0)};
        p.window = window(2.0);
        p.note = "nominal k2 = -k1 collides with the derived pole set; N=1 equivalent";
    } else if (name == "fig7") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.4, 0.5), 1.0, 0.0, 0.0, 0.0),
                          raw_pole(cx(0.7, 0.8), 1.0, 0.0, 1.0, 0.0)};
        p.window = window(5.0);
    } else if (name == "fig8") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.5, 0.5), 1.0, 1.0, 1.0, 1.0)};
        p.window = window(2.0);
        p.note = "nominal k2 = -k1 collides with the derived pole set; N=1 equivalent";
    } else if (name == "fig9") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(0.3, 0.4), 1.0, 1.0, cx(1.0, 1.0), cx(1.0, -1.0)),
                          raw_pole(cx(0.5, 0.5), i, -i, 0.5 * i, -0.5 * i)};
        p.window = window(5.0);
    } else if (name == "fig10") {
        p.config.raw_amplitudes = true;
        p.config.poles = {raw_pole(cx(1.2, 0.4), r2, r2, r2 * i, -r2 * i),
                          raw_pole(cx(0.5, 0.5), i, -i, 1.0, 1.0)};
        p.window = window(5.0);
    } else if (name == "fig11") {
        p.config.poles = {exp_pole(cx(0.3, 1.0), 2, {0, 0}, {0, 0}, {0, 0}, {0, 0})};
        p.window = window(5.0);
    } else if (name == "fig12") {
        p.config.poles = {exp_pole(cx(0.3, 1.0), 2, {-1.5, 0}, {-1.5, 0}, {-1.5, 0}, {-1.5, 0})};
        p.window = window(5.0);
    } else if (name == "fig13") {
        p.config.poles = {exp_pole(cx(0.4, 1.0), 2, {cx(-1, 1), 0}, {-1, 0}, {cx(-1, 1), 0}, {-1, 0})};
        p.window = window(5.0);
    } else if (name == "fig14") {
        p.config.poles = {exp_pole(cx(0.3, 1.0), 2, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}),
                          exp_pole(cx(1.0, 1.0), 1, {0}, {0}, {0}, {0})};
        p.window = window(5.0);
    } else if (name == "fig15") {
        p.config.poles = {exp_pole(cx(0.5, 1.2), 2, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}),
                          exp_pole(cx(0.6, 1.2), 1, {-1}, {-1}, {-1}, {-1})};
        p.window = window(5.0);
    } else {
        throw error("UnknownPreset", "no preset named '" + name + "'");
    }
    return p;
}

inline std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (int i = 1; i <= 15; ++i) out.push_back("fig" + std::to_string(i));
    return out;
}

}  // namespace ngss
