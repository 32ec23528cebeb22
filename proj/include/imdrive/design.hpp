#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "imdrive/params.hpp"
#include "imdrive/regulator.hpp"

namespace imdrive {

/// First-order RL model of the current loop plant seen by each axis regulator,
/// with the speed-voltage coupling treated as a disturbance.
template <class Scalar = double>
struct PlantTf {
    Scalar r_eq;     // ohm
    Scalar l_sigma;  // H
};

template <class Scalar = double>
struct FrequencyResponsePoint {
    Scalar omega;         // rad/s
    Scalar magnitude_db;
    Scalar phase_deg;
};

/// R = rs + rr*(Lm/Lr)^2 and L' = Ls - Lm^2/Lr, with inductances taken from
/// the nameplate reactances at rated frequency.
template <class Scalar>
PlantTf<Scalar> plant_tf(const MachineParams<Scalar>& p) {
    p.validate();
    const Scalar omega_b = Scalar(2) * std::numbers::pi_v<Scalar> * p.f;
    const Scalar lm = p.xm / omega_b;
    const Scalar lr = (p.xlr + p.xm) / omega_b;
    const Scalar ls = (p.xls + p.xm) / omega_b;
    const Scalar ratio = lm / lr;
    return {p.rs + p.rr * ratio * ratio, ls - lm * lm / lr};
}

/// Pole-zero-cancelling gain selection: k_p = omega_c * L', k_i = omega_c * R,
/// so k_i/k_p equals the plant pole R/L' and the loop reduces to an integrator
/// crossing unity gain at omega_c.
template <class Scalar>
PiGains<Scalar> pi_gains(const PlantTf<Scalar>& plant, Scalar omega_c) {
    if (!(omega_c > Scalar(0))) throw std::domain_error("pi_gains: omega_c must be positive");
    return {omega_c * plant.l_sigma, omega_c * plant.r_eq};
}

template <class Scalar>
std::complex<Scalar> loop_gain_at(const PlantTf<Scalar>& plant, const PiGains<Scalar>& gains,
                                  Scalar omega) {
    if (!(omega > Scalar(0)))
        throw std::domain_error("loop_gain_at: omega must be positive (integrator pole at 0)");
    using C = std::complex<Scalar>;
    const C jw{Scalar(0), omega};
    return (gains.k_p + gains.k_i / jw) / (plant.r_eq + jw * plant.l_sigma);
}

/// T_cl = T_ol / (1 + T_ol), evaluated in the rational form
/// (k_p s + k_i) / (s(R + sL') + k_p s + k_i) which is stable down to omega = 0.
template <class Scalar>
std::complex<Scalar> closed_loop_at(const PlantTf<Scalar>& plant, const PiGains<Scalar>& gains,
                                    Scalar omega) {
    if (!(omega >= Scalar(0))) throw std::domain_error("closed_loop_at: omega must be >= 0");
    using C = std::complex<Scalar>;
    if (omega == Scalar(0)) return C{Scalar(1), Scalar(0)};
    const C s{Scalar(0), omega};
    const C num = gains.k_p * s + gains.k_i;
    return num / (s * (plant.r_eq + s * plant.l_sigma) + num);
}

template <class Scalar = double>
struct MarginReport {
    Scalar crossover;         // rad/s where |T_ol| = 1
    Scalar phase_margin_deg;  // 180 deg + phase at the crossover
};

/// Finds the unity-gain crossover by a coarse log-grid scan followed by
/// bisection, then reports the phase margin there.
template <class Scalar>
MarginReport<Scalar> margins(const PlantTf<Scalar>& plant, const PiGains<Scalar>& gains,
                             Scalar omega_lo = Scalar(1e-1), Scalar omega_hi = Scalar(1e8)) {
    auto mag = [&](Scalar w) { return std::abs(loop_gain_at(plant, gains, w)); };
    const int per_decade = 50;
    const Scalar decades = std::log10(omega_hi / omega_lo);
    const int n = static_cast<int>(decades * per_decade);
    Scalar w_prev = omega_lo;
    Scalar m_prev = mag(w_prev);
    Scalar lo = Scalar(0), hi = Scalar(0);
    for (int i = 1; i <= n; ++i) {
        const Scalar w = omega_lo * std::pow(Scalar(10), decades * Scalar(i) / Scalar(n));
        const Scalar mw = mag(w);
        if ((m_prev - Scalar(1)) * (mw - Scalar(1)) <= Scalar(0)) {
            lo = w_prev;
            hi = w;
            break;
        }
        w_prev = w;
        m_prev = mw;
    }
    if (hi == Scalar(0))
        throw std::runtime_error("margins: no unity-gain crossover in the search range");
    for (int it = 0; it < 200; ++it) {
        const Scalar mid = std::sqrt(lo * hi);
        if (mag(mid) > Scalar(1))
            lo = mid;
        else
            hi = mid;
    }
    MarginReport<Scalar> rep;
    rep.crossover = std::sqrt(lo * hi);
    const Scalar phase =
        std::arg(loop_gain_at(plant, gains, rep.crossover)) * Scalar(180) / std::numbers::pi_v<Scalar>;
    rep.phase_margin_deg = Scalar(180) + phase;
    return rep;
}

/// Log-spaced open-/closed-loop response table for CSV emission.
template <class Scalar>
std::vector<std::pair<FrequencyResponsePoint<Scalar>, FrequencyResponsePoint<Scalar>>> bode_table(
    const PlantTf<Scalar>& plant, const PiGains<Scalar>& gains, Scalar omega_min, Scalar omega_max,
    int points_per_decade) {
    if (!(omega_min > Scalar(0)) || !(omega_max > omega_min) || points_per_decade < 1)
        throw std::domain_error("bode_table: need 0 < omega_min < omega_max and points_per_decade >= 1");
    const Scalar decades = std::log10(omega_max / omega_min);
    const int n = std::max(1, static_cast<int>(std::ceil(decades * points_per_decade)));
    std::vector<std::pair<FrequencyResponsePoint<Scalar>, FrequencyResponsePoint<Scalar>>> rows;
    rows.reserve(n + 1);
    constexpr Scalar rad2deg = Scalar(180) / std::numbers::pi_v<Scalar>;
    auto to_db = [](Scalar m) { return Scalar(20) * std::log10(m); };
    for (int i = 0; i <= n; ++i) {
        const Scalar w = omega_min * std::pow(Scalar(10), decades * Scalar(i) / Scalar(n));
        const auto tol = loop_gain_at(plant, gains, w);
        const auto tcl = closed_loop_at(plant, gains, w);
        rows.push_back({{w, to_db(std::abs(tol)), std::arg(tol) * rad2deg},
                        {w, to_db(std::abs(tcl)), std::arg(tcl) * rad2deg}});
    }
    return rows;
}

}  // namespace imdrive
