#pragma once

#include <complex>

namespace imdrive {

/// Instantaneous pair of synchronous-frame components.
template <class Scalar = double>
struct Qd {
    Scalar q{};
    Scalar d{};
};

/// Complex space-vector convention used throughout: f = f_q - j*f_d. With the
/// amplitude-invariant transformation and the frame angle tracking the phase,
/// this equals the peak phasor of phase a.
template <class Scalar>
std::complex<Scalar> to_complex(const Qd<Scalar>& f) {
    return {f.q, -f.d};
}

template <class Scalar>
Qd<Scalar> from_complex(const std::complex<Scalar>& f) {
    return {f.real(), -f.imag()};
}

}  // namespace imdrive
