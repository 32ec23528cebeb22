#pragma once

#include <complex>
#include <stdexcept>

#include "imdrive/params.hpp"
#include "imdrive/qd.hpp"

namespace imdrive {

/// Balanced steady-state solution of the per-phase equivalent circuit, in the
/// peak per-unit phasor convention (voltage phasor at angle 0).
template <class Scalar = double>
struct PhasorSolution {
    Scalar slip;
    std::complex<Scalar> i_s;       // stator current, pu
    std::complex<Scalar> i_r;       // rotor current (coupled-circuit sign), pu
    std::complex<Scalar> psi_qds;   // stator flux-linkage voltage, pu
    Scalar power_factor;            // cos of stator voltage/current angle
    Scalar torque;                  // pu
};

/// Solves rs + j xls in series with ( j xm || (rr/slip + j xlr) ). slip = 0 is
/// handled by open-circuiting the rotor branch analytically.
template <class Scalar>
PhasorSolution<Scalar> steady_state_circuit(const MachineParams<Scalar>& params, Scalar slip,
                                            Scalar v_pu) {
    if (!(v_pu >= Scalar(0)))
        throw std::domain_error("steady_state_circuit: v_pu must be non-negative");
    const BaseSet<Scalar> b = derive_bases(params);
    const Scalar rs = params.rs / b.z_b;
    const Scalar rr = params.rr / b.z_b;
    const Scalar xls = params.xls / b.z_b;
    const Scalar xlr = params.xlr / b.z_b;
    const Scalar xm = params.xm / b.z_b;
    using C = std::complex<Scalar>;

    PhasorSolution<Scalar> sol;
    sol.slip = slip;
    const C v{v_pu, Scalar(0)};
    if (slip == Scalar(0)) {
        sol.i_s = v / C{rs, xls + xm};
        sol.i_r = C{};
        sol.torque = Scalar(0);
    } else {
        const C zm{Scalar(0), xm};
        const C zr{rr / slip, xlr};
        const C zp = zm * zr / (zm + zr);
        sol.i_s = v / (C{rs, xls} + zp);
        const C i2 = sol.i_s * zp / zr;  // branch current dissipating in rr/slip
        sol.i_r = -i2;
        sol.torque = std::norm(i2) * rr / slip;
    }
    sol.psi_qds = (xls + xm) * sol.i_s + xm * sol.i_r;
    const Scalar denom = std::abs(v) * std::abs(sol.i_s);
    sol.power_factor = denom > Scalar(0) ? (v * std::conj(sol.i_s)).real() / denom : Scalar(1);
    return sol;
}

/// Steady-state operating point expressed in the rotor-flux-aligned frame
/// (rotor flux on the positive d axis). Used to seed the dynamic model and the
/// regulator for transient-free starts.
template <class Scalar = double>
struct AlignedPoint {
    Qd<Scalar> i_s;        // stator current components, pu
    Qd<Scalar> v_s;        // stator voltage components, pu
    Qd<Scalar> psi_s;      // stator flux-linkage voltage, pu
    Qd<Scalar> psi_r;      // rotor flux-linkage voltage, pu (q component ~ 0)
    Scalar psi_r_mag;      // |rotor flux|, pu
    Scalar torque;         // pu
    Scalar omega_r;        // rotor electrical speed at this slip, pu
};

template <class Scalar>
AlignedPoint<Scalar> rotor_flux_aligned(const MachineParams<Scalar>& params, Scalar slip,
                                        Scalar v_pu) {
    const PhasorSolution<Scalar> sol = steady_state_circuit(params, slip, v_pu);
    const BaseSet<Scalar> b = derive_bases(params);
    const Scalar xm = params.xm / b.z_b;
    const Scalar xr = (params.xlr + params.xm) / b.z_b;
    using C = std::complex<Scalar>;

    const C psi_r = xm * sol.i_s + xr * sol.i_r;
    const Scalar mag = std::abs(psi_r);
    if (mag == Scalar(0))
        throw std::domain_error("rotor_flux_aligned: rotor flux is zero at this operating point");
    const C rot = C{Scalar(0), Scalar(-1)} * mag / psi_r;  // takes psi_r to -j*mag

    AlignedPoint<Scalar> op;
    op.i_s = from_complex(C(sol.i_s * rot));
    op.v_s = from_complex(C(C{v_pu, Scalar(0)} * rot));
    op.psi_s = from_complex(C(sol.psi_qds * rot));
    op.psi_r = from_complex(C(psi_r * rot));
    op.psi_r_mag = mag;
    op.torque = sol.torque;
    op.omega_r = Scalar(1) - slip;
    return op;
}

}  // namespace imdrive
