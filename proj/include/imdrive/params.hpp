#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace imdrive {

/// Nameplate and equivalent-circuit constants of the machine. Reactances are
/// given at the rated excitation frequency f; inductances follow as X / (2*pi*f).
template <class Scalar = double>
struct MachineParams {
    Scalar v_ll_rms;  // line-to-line rms voltage, V
    Scalar p_rated;   // rated power, W
    Scalar f;         // excitation frequency, Hz
    int poles;        // pole count (even, >= 2)
    Scalar rs;        // stator resistance, ohm
    Scalar rr;        // rotor resistance, ohm
    Scalar xls;       // stator leakage reactance at f, ohm
    Scalar xlr;       // rotor leakage reactance at f, ohm
    Scalar xm;        // magnetizing reactance at f, ohm
    Scalar m_mech;    // mechanical time constant, s
    Scalar i_b;       // base current (peak), A; nameplate value, not derived

    void validate() const {
        auto positive = [](Scalar v, const char* name) {
            if (!(v > Scalar(0)) || !std::isfinite(double(v)))
                throw std::invalid_argument(std::string("machine parameter '") + name +
                                            "' must be positive and finite");
        };
        positive(v_ll_rms, "v_ll_rms");
        positive(p_rated, "p_rated");
        positive(f, "f");
        positive(rs, "rs");
        positive(rr, "rr");
        positive(xls, "xls");
        positive(xlr, "xlr");
        positive(xm, "xm");
        positive(m_mech, "m_mech");
        positive(i_b, "i_b");
        if (poles < 2 || poles % 2 != 0)
            throw std::invalid_argument("machine parameter 'poles' must be even and >= 2");
    }
};

/// 460 V / 20 hp / 60 Hz four-pole machine used as the built-in default.
template <class Scalar = double>
MachineParams<Scalar> default_machine() {
    MachineParams<Scalar> p;
    p.v_ll_rms = Scalar(460);
    p.p_rated = Scalar(20) * Scalar(745.7);
    p.f = Scalar(60);
    p.poles = 4;
    p.rs = Scalar(0.355);
    p.rr = Scalar(0.355);
    p.xls = Scalar(1.42);
    p.xlr = Scalar(1.42);
    p.xm = Scalar(34.1);
    p.m_mech = Scalar(1.4);
    p.i_b = Scalar(26.5);
    return p;
}

/// Rated slip of the default machine; used to seed analytic initialization.
inline constexpr double kDefaultRatedSlip = 0.03135;

/// Peak-valued base system. All per-unit quantities in this project use the
/// peak (amplitude-invariant) convention: 1 pu voltage is the peak of the
/// rated line-to-neutral sinusoid.
template <class Scalar = double>
struct BaseSet {
    Scalar v_b;      // peak line-to-neutral voltage, V
    Scalar i_b;      // peak current, A
    Scalar z_b;      // ohm
    Scalar t_b;      // N*m
    Scalar omega_b;  // electrical rad/s
};

template <class Scalar>
BaseSet<Scalar> derive_bases(const MachineParams<Scalar>& p) {
    p.validate();
    BaseSet<Scalar> b;
    b.v_b = p.v_ll_rms * std::numbers::sqrt2_v<Scalar> / std::sqrt(Scalar(3));
    b.i_b = p.i_b;
    b.z_b = b.v_b / b.i_b;
    b.omega_b = Scalar(2) * std::numbers::pi_v<Scalar> * p.f;
    b.t_b = Scalar(1.5) * (Scalar(p.poles) / Scalar(2)) * b.v_b * b.i_b / b.omega_b;
    return b;
}

/// Cross-check of the nameplate base current against the rated apparent power:
/// i_b = sqrt(2) * P / (sqrt(3) * V_ll). Informational only; the base system
/// always uses the nameplate i_b.
template <class Scalar>
Scalar i_b_from_power(const MachineParams<Scalar>& p) {
    return std::numbers::sqrt2_v<Scalar> * p.p_rated / (std::sqrt(Scalar(3)) * p.v_ll_rms);
}

enum class Quantity { voltage, current, impedance, torque, speed };

template <class Scalar>
Scalar base_value(const BaseSet<Scalar>& b, Quantity q) {
    switch (q) {
        case Quantity::voltage: return b.v_b;
        case Quantity::current: return b.i_b;
        case Quantity::impedance: return b.z_b;
        case Quantity::torque: return b.t_b;
        case Quantity::speed: return b.omega_b;
    }
    throw std::invalid_argument("unknown per-unit quantity kind");
}

template <class Scalar>
Scalar to_per_unit(Scalar value, const BaseSet<Scalar>& b, Quantity q) {
    return value / base_value(b, q);
}

template <class Scalar>
Scalar from_per_unit(Scalar value, const BaseSet<Scalar>& b, Quantity q) {
    return value * base_value(b, q);
}

/// Machine constants reduced to per-unit for the dynamic model. Built once and
/// passed by const reference into the simulation hot path.
template <class Scalar = double>
struct PuMachine {
    Scalar rs, rr;            // pu resistances
    Scalar xls, xlr, xm;      // pu reactances
    Scalar xm_star;           // pu harmonic-sum reactance
    Scalar omega_b;           // electrical rad/s
    Scalar m_mech;            // s

    Scalar xr() const { return xlr + xm; }
    Scalar xs() const { return xls + xm; }
    /// Rotor time constant Lr / rr in seconds.
    Scalar tau_r() const { return xr() / (rr * omega_b); }
};

template <class Scalar>
PuMachine<Scalar> make_pu_machine(const MachineParams<Scalar>& p, const BaseSet<Scalar>& b) {
    PuMachine<Scalar> m;
    m.rs = p.rs / b.z_b;
    m.rr = p.rr / b.z_b;
    m.xls = p.xls / b.z_b;
    m.xlr = p.xlr / b.z_b;
    m.xm = p.xm / b.z_b;
    m.xm_star = Scalar(1) / (Scalar(1) / m.xm + Scalar(1) / m.xls + Scalar(1) / m.xlr);
    m.omega_b = b.omega_b;
    m.m_mech = p.m_mech;
    return m;
}

}  // namespace imdrive
