#pragma once

#include <Eigen/Dense>

#include "imdrive/params.hpp"
#include "imdrive/qd.hpp"

namespace imdrive {

/// Dynamic states of the machine: four per-unit flux-linkage voltages in the
/// synchronous frame plus the per-unit rotor electrical speed.
template <class Scalar = double>
struct ImState {
    Scalar psi_qs{};
    Scalar psi_ds{};
    Scalar psi_qr{};
    Scalar psi_dr{};
    Scalar omega_r{};

    using Vec = Eigen::Matrix<Scalar, 5, 1>;

    Vec vec() const {
        Vec v;
        v << psi_qs, psi_ds, psi_qr, psi_dr, omega_r;
        return v;
    }
    static ImState from_vec(const Vec& v) { return {v[0], v[1], v[2], v[3], v[4]}; }
};

/// Algebraic outputs of the flux-linkage model: magnetizing fluxes, branch
/// currents and electrical torque, all per-unit.
template <class Scalar = double>
struct AuxOutputs {
    Scalar psi_mq, psi_md;
    Scalar i_qs, i_ds;
    Scalar i_qr, i_dr;
    Scalar t_e;
};

/// Harmonic sum of magnetizing and leakage reactances, in the units of the
/// inputs (ohms for nameplate parameters).
template <class Scalar>
Scalar xm_star(const MachineParams<Scalar>& p) {
    return Scalar(1) / (Scalar(1) / p.xm + Scalar(1) / p.xls + Scalar(1) / p.xlr);
}

template <class Scalar>
AuxOutputs<Scalar> aux_outputs(const ImState<Scalar>& s, const PuMachine<Scalar>& m) {
    AuxOutputs<Scalar> a;
    a.psi_mq = m.xm_star * (s.psi_qs / m.xls + s.psi_qr / m.xlr);
    a.psi_md = m.xm_star * (s.psi_ds / m.xls + s.psi_dr / m.xlr);
    a.i_qs = (s.psi_qs - a.psi_mq) / m.xls;
    a.i_ds = (s.psi_ds - a.psi_md) / m.xls;
    a.i_qr = (s.psi_qr - a.psi_mq) / m.xlr;
    a.i_dr = (s.psi_dr - a.psi_md) / m.xlr;
    a.t_e = s.psi_ds * a.i_qs - s.psi_qs * a.i_ds;
    return a;
}

/// Time derivative of the state vector in per-unit per second. The stator is
/// driven by v_qds; rotor windings are shorted (squirrel cage). omega_e is the
/// per-unit speed of the reference frame, normally supplied by the slip
/// calculator.
template <class Scalar>
typename ImState<Scalar>::Vec state_derivative(const ImState<Scalar>& s, const Qd<Scalar>& v_qds,
                                               Scalar omega_e, Scalar t_load,
                                               const PuMachine<Scalar>& m) {
    const AuxOutputs<Scalar> a = aux_outputs(s, m);
    const Scalar w_slip = omega_e - s.omega_r;
    typename ImState<Scalar>::Vec d;
    d[0] = m.omega_b * (v_qds.q - m.rs * a.i_qs - omega_e * s.psi_ds);
    d[1] = m.omega_b * (v_qds.d - m.rs * a.i_ds + omega_e * s.psi_qs);
    d[2] = m.omega_b * (-m.rr * a.i_qr - w_slip * s.psi_dr);
    d[3] = m.omega_b * (-m.rr * a.i_dr + w_slip * s.psi_qr);
    d[4] = (a.t_e - t_load) / m.m_mech;
    return d;
}

}  // namespace imdrive
