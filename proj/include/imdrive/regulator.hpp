#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "imdrive/params.hpp"
#include "imdrive/qd.hpp"

namespace imdrive {

template <class Scalar = double>
struct PiGains {
    Scalar k_p{};  // V/A, or pu voltage per pu current after scaling
    Scalar k_i{};  // V/(A*s)

    PiGains per_unit(Scalar z_b) const { return {k_p / z_b, k_i / z_b}; }
};

/// Floor applied to the rotor-flux estimate before the slip division.
inline constexpr double kLambdaFloor = 1e-3;

template <class Scalar = double>
struct RegulatorState {
    Scalar int_q{};         // q-axis integrator accumulator
    Scalar int_d{};         // d-axis integrator accumulator
    Scalar theta{};         // transformation angle, [0, 2*pi)
    Scalar lambda_r_hat{};  // rotor flux estimate, pu (flux-linkage voltage)
};

template <class Scalar = double>
struct CurrentRefs {
    Scalar i_qs_ref{};
    Scalar i_ds_ref{};
};

/// Cosines and sines of the three phase-shifted frame angles, computed once
/// per simulation step and shared by all transformations at that instant.
template <class Scalar = double>
struct FrameTrig {
    Scalar c_a, c_b, c_c;
    Scalar s_a, s_b, s_c;

    explicit FrameTrig(Scalar theta) {
        constexpr Scalar third = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(3);
        c_a = std::cos(theta);
        s_a = std::sin(theta);
        c_b = std::cos(theta - third);
        s_b = std::sin(theta - third);
        c_c = std::cos(theta + third);
        s_c = std::sin(theta + third);
    }
};

/// Amplitude-invariant synchronous transformation; q axis aligned with phase a
/// at theta = 0. A balanced cosine set of amplitude A maps to (q, d) = (A, 0)
/// when theta tracks the phase.
template <class Scalar>
Qd<Scalar> abc_to_qd(const Eigen::Matrix<Scalar, 3, 1>& f, const FrameTrig<Scalar>& t) {
    constexpr Scalar k = Scalar(2) / Scalar(3);
    return {k * (f[0] * t.c_a + f[1] * t.c_b + f[2] * t.c_c),
            k * (f[0] * t.s_a + f[1] * t.s_b + f[2] * t.s_c)};
}

template <class Scalar>
Qd<Scalar> abc_to_qd(const Eigen::Matrix<Scalar, 3, 1>& f, Scalar theta) {
    return abc_to_qd(f, FrameTrig<Scalar>(theta));
}

/// Inverse transformation; produces zero-sum triples (no zero sequence).
template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> qd_to_abc(const Qd<Scalar>& f, const FrameTrig<Scalar>& t) {
    Eigen::Matrix<Scalar, 3, 1> out;
    out << f.q * t.c_a + f.d * t.s_a, f.q * t.c_b + f.d * t.s_b, f.q * t.c_c + f.d * t.s_c;
    return out;
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> qd_to_abc(const Qd<Scalar>& f, Scalar theta) {
    return qd_to_abc(f, FrameTrig<Scalar>(theta));
}

/// One forward-Euler step of the two PI regulators. Output uses the integrator
/// value before the update. No saturation and no anti-windup.
template <class Scalar>
Qd<Scalar> pi_step(RegulatorState<Scalar>& state, const CurrentRefs<Scalar>& refs,
                   const Qd<Scalar>& meas, const PiGains<Scalar>& gains, Scalar dt) {
    const Scalar e_q = refs.i_qs_ref - meas.q;
    const Scalar e_d = refs.i_ds_ref - meas.d;
    const Qd<Scalar> v{gains.k_p * e_q + state.int_q, gains.k_p * e_d + state.int_d};
    state.int_q += gains.k_i * e_q * dt;
    state.int_d += gains.k_i * e_d * dt;
    return v;
}

template <class Scalar = double>
struct SlipResult {
    Scalar omega_s{};   // synchronous (frame) speed, pu
    Scalar omega_sl{};  // slip speed, pu
};

/// Indirect field-orientation slip calculator. The rotor-flux estimate follows
/// Lm*i_ds_ref through a first-order lag with the rotor time constant, then
/// omega_sl = (rr/Lr)(Lm/lambda_r)*i_qs_ref, all expressed per-unit.
template <class Scalar>
SlipResult<Scalar> slip_calculator_step(RegulatorState<Scalar>& state,
                                        const CurrentRefs<Scalar>& refs, Scalar omega_r,
                                        const PuMachine<Scalar>& m, Scalar dt) {
    const Scalar tau_r = m.tau_r();
    state.lambda_r_hat += dt * (m.xm * refs.i_ds_ref - state.lambda_r_hat) / tau_r;
    state.lambda_r_hat = std::max(state.lambda_r_hat, Scalar(kLambdaFloor));
    SlipResult<Scalar> out;
    out.omega_sl = (m.rr / m.xr()) * m.xm * refs.i_qs_ref / state.lambda_r_hat;
    out.omega_s = out.omega_sl + omega_r;
    return out;
}

/// Advances the transformation angle and wraps it to [0, 2*pi).
template <class Scalar>
Scalar angle_step(Scalar theta, Scalar omega_s, Scalar omega_b, Scalar dt) {
    constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    Scalar t = std::fmod(theta + omega_s * omega_b * dt, two_pi);
    if (t < Scalar(0)) t += two_pi;
    if (t >= two_pi) t -= two_pi;
    return t;
}

}  // namespace imdrive
