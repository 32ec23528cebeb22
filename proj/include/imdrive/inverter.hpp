#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace imdrive {

struct SwitchState {
    int s_a{};
    int s_b{};
    int s_c{};
};

/// Per-phase duty commands. Values outside [0,1] are legal (overmodulation)
/// and are never clamped here; the comparator handles them by pulse dropping.
template <class Scalar = double>
struct DutyTriple {
    Scalar d_a{};
    Scalar d_b{};
    Scalar d_c{};

    bool overflows() const {
        const Scalar lo = std::min({d_a, d_b, d_c});
        const Scalar hi = std::max({d_a, d_b, d_c});
        return lo < Scalar(0) || hi > Scalar(1);
    }
};

template <class Scalar = double>
struct PhaseVoltages {
    Scalar v_am{}, v_bm{}, v_cm{};  // phase-to-negative-rail, V
    Scalar v_nm{};                  // neutral-to-negative-rail, V
    Scalar v_an{}, v_bn{}, v_cn{};  // line-to-neutral, V
};

/// Maps a switch state to the stator voltages. The line-to-neutral values are
/// built from integer multiples of v_dc/3 so their sum is bit-exact zero.
template <class Scalar>
PhaseVoltages<Scalar> vsi_map(const SwitchState& sw, Scalar v_dc) {
    if (!(v_dc > Scalar(0))) throw std::domain_error("vsi_map: v_dc must be positive");
    PhaseVoltages<Scalar> pv;
    pv.v_am = sw.s_a ? v_dc : Scalar(0);
    pv.v_bm = sw.s_b ? v_dc : Scalar(0);
    pv.v_cm = sw.s_c ? v_dc : Scalar(0);
    const int sum = sw.s_a + sw.s_b + sw.s_c;
    const Scalar third = v_dc / Scalar(3);
    pv.v_nm = Scalar(sum) * third;
    pv.v_an = Scalar(3 * sw.s_a - sum) * third;
    pv.v_bn = Scalar(3 * sw.s_b - sum) * third;
    pv.v_cn = Scalar(3 * sw.s_c - sum) * third;
    return pv;
}

/// d_i = v_i / v_dc + 1/2, unclamped.
template <class Scalar>
DutyTriple<Scalar> duty_from_refs(const Eigen::Matrix<Scalar, 3, 1>& v_refs, Scalar v_dc) {
    if (!(v_dc > Scalar(0))) throw std::domain_error("duty_from_refs: v_dc must be positive");
    return {v_refs[0] / v_dc + Scalar(0.5), v_refs[1] / v_dc + Scalar(0.5),
            v_refs[2] / v_dc + Scalar(0.5)};
}

/// Rising sawtooth in [0,1), period 1/f_sw.
template <class Scalar>
Scalar carrier(Scalar t, Scalar f_sw) {
    const Scalar x = t * f_sw;
    return x - std::floor(x);
}

/// s_i = 1 iff d_i > carrier. Duties above 1 stay on, below 0 stay off.
template <class Scalar>
SwitchState switch_decision(const DutyTriple<Scalar>& d, Scalar c) {
    return {d.d_a > c ? 1 : 0, d.d_b > c ? 1 : 0, d.d_c > c ? 1 : 0};
}

}  // namespace imdrive
