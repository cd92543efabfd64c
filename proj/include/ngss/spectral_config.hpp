#pragma once

// Discrete scattering data for the nonlocal generalized Sasa-Satsuma solver.
//
// A configuration lists N poles k_l in D+ = {Re k · Im k > 0}, each with a
// positive order n_l and four coefficient sequences a, b, c, d. For order-1
// poles in raw-amplitude mode the leading coefficients are the amplitudes
// themselves (so a_l = 0 is representable); otherwise the sequences are the
// exponent coefficients a_l^[i] of the amplitude expansions
// A_l(eps) = exp(sum_i a_l^[i] eps^i).
//
// The full 2N-member pole set {k_l, -k_l} and its conjugate mirror are derived,
// never stored by the caller.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ngss {

using cx = std::complex<double>;

// Error with a stable machine-readable code (used by the CLI error JSON).
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct PoleDatum {
    cx k{};
    int order = 1;
    std::vector<cx> a, b, c, d;
};

struct SpectralConfiguration {
    int sigma = 1;
    bool raw_amplitudes = false;
    std::vector<PoleDatum> poles;
};

struct FullPoleSet {
    std::vector<cx> upper;    // k_1..k_N, -k_1..-k_N (all in D+)
    std::vector<cx> lower;    // conj(upper), all in D-
    std::vector<int> orders;  // orders[N+i] = orders[i]
};

namespace detail {

inline bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void check_sequence(const std::vector<cx>& s, int order, const char* name, std::size_t pole) {
    if (static_cast<int>(s.size()) < order)
        throw error("ShortCoefficients",
                    "pole " + std::to_string(pole) + ": sequence '" + name +
                        "' has " + std::to_string(s.size()) + " coefficients, needs >= " +
                        std::to_string(order));
    for (cx z : s)
        if (!finite(z))
            throw error("NonFinite", "pole " + std::to_string(pole) + ": non-finite coefficient in '" +
                                         std::string(name) + "'");
}

}  // namespace detail

// Immutable, checked view of a SpectralConfiguration. Construct via validate_config.
class ValidatedConfiguration {
public:
    const SpectralConfiguration& raw() const noexcept { return cfg_; }
    const std::vector<PoleDatum>& poles() const noexcept { return cfg_.poles; }
    bool raw_amplitudes() const noexcept { return cfg_.raw_amplitudes; }
    int pole_count() const noexcept { return static_cast<int>(cfg_.poles.size()); }

    int total_order() const noexcept {
        int n0 = 0;
        for (const auto& p : cfg_.poles) n0 += p.order;
        return n0;
    }

    bool all_orders_one() const noexcept {
        for (const auto& p : cfg_.poles)
            if (p.order != 1) return false;
        return true;
    }

    friend ValidatedConfiguration validate_config(SpectralConfiguration raw);

private:
    explicit ValidatedConfiguration(SpectralConfiguration cfg) : cfg_(std::move(cfg)) {}
    SpectralConfiguration cfg_;
};

// Enforces every structural invariant:
//  - sigma fixed to 1
//  - each k strictly inside D+ (axes rejected; D+ is open)
//  - order >= 1, sequences long enough, everything finite
//  - raw-amplitude mode only with all orders 1
//  - the derived 2N-member set {±k_l} has pairwise distinct members
inline ValidatedConfiguration validate_config(SpectralConfiguration raw) {
    if (raw.sigma != 1)
        throw error("SigmaUnsupported", "sigma must be 1 (got " + std::to_string(raw.sigma) + ")");
    if (raw.poles.empty())
        throw error("SchemaViolation", "at least one pole is required");

    for (std::size_t i = 0; i < raw.poles.size(); ++i) {
        const PoleDatum& p = raw.poles[i];
        if (!detail::finite(p.k))
            throw error("NonFinite", "pole " + std::to_string(i) + ": non-finite k");
        if (p.k.real() * p.k.imag() <= 0.0)
            throw error("PoleOutsideDPlus",
                        "pole " + std::to_string(i) + ": k must satisfy Re(k)*Im(k) > 0");
        if (p.order < 1)
            throw error("SchemaViolation", "pole " + std::to_string(i) + ": order must be >= 1");
        if (raw.raw_amplitudes && p.order != 1)
            throw error("RawAmplitudeOrder",
                        "raw-amplitude mode requires every pole order to be 1");
        detail::check_sequence(p.a, p.order, "a", i);
        detail::check_sequence(p.b, p.order, "b", i);
        detail::check_sequence(p.c, p.order, "c", i);
        detail::check_sequence(p.d, p.order, "d", i);
    }

    // k_i = ±k_j collisions collapse the derived set.
    for (std::size_t i = 0; i < raw.poles.size(); ++i)
        for (std::size_t j = i + 1; j < raw.poles.size(); ++j) {
            cx ki = raw.poles[i].k, kj = raw.poles[j].k;
            if (ki == kj || ki == -kj)
                throw error("DuplicatePole",
                            "poles " + std::to_string(i) + " and " + std::to_string(j) +
                                " collide in the symmetric pole set");
        }

    return ValidatedConfiguration(std::move(raw));
}

inline FullPoleSet derive_full_pole_set(const ValidatedConfiguration& cfg) {
    FullPoleSet out;
    const int n = cfg.pole_count();
    out.upper.resize(2 * n);
    out.lower.resize(2 * n);
    out.orders.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        out.upper[i] = cfg.poles()[i].k;
        out.upper[n + i] = -cfg.poles()[i].k;
        out.orders[i] = out.orders[n + i] = cfg.poles()[i].order;
    }
    for (int j = 0; j < 2 * n; ++j) out.lower[j] = std::conj(out.upper[j]);
    return out;
}

}  // namespace ngss
