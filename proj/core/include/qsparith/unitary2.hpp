#pragma once

#include <algorithm>
#include <complex>
#include <cmath>
#include <stdexcept>

namespace qsparith {

using cplx = std::complex<double>;

/// A 2x2 complex matrix with a unitarity contract.  This is the object the
/// QSP protocol composes: signal operators, signal processors and their
/// products all live here.
struct Unitary2 {
    cplx u00{1.0, 0.0};
    cplx u01{0.0, 0.0};
    cplx u10{0.0, 0.0};
    cplx u11{1.0, 0.0};

    static Unitary2 identity() { return {}; }

    /// diag(e^{i*phi}, e^{-i*phi}); the Z-axis signal processor.
    static Unitary2 rz_exp(double phi) {
        return {std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi)};
    }

    Unitary2 operator*(const Unitary2& r) const {
        return {u00 * r.u00 + u01 * r.u10, u00 * r.u01 + u01 * r.u11,
                u10 * r.u00 + u11 * r.u10, u10 * r.u01 + u11 * r.u11};
    }

    Unitary2 dagger() const {
        return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
    }

    /// Max elementwise deviation of U * U^dagger from the identity.
    double unitarity_defect() const {
        Unitary2 p = *this * dagger();
        double d = std::abs(p.u00 - 1.0);
        d = std::max(d, std::abs(p.u01));
        d = std::max(d, std::abs(p.u10));
        d = std::max(d, std::abs(p.u11 - 1.0));
        return d;
    }

    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

    /// Strict elementwise distance.  Equality of QSP products is tested with
    /// no global-phase allowance; the conventions fix the phase.
    double distance(const Unitary2& r) const {
        double d = std::abs(u00 - r.u00);
        d = std::max(d, std::abs(u01 - r.u01));
        d = std::max(d, std::abs(u10 - r.u10));
        d = std::max(d, std::abs(u11 - r.u11));
        return d;
    }

    /// Diagnostic comparator: distance minimised over a global phase.
    double distance_up_to_phase(const Unitary2& r) const;
};

inline double Unitary2::distance_up_to_phase(const Unitary2& r) const {
    // Align on the largest entry of r, then compare strictly.
    const cplx* a = &u00;
    const cplx* b = &r.u00;
    int best = 0;
    double mag = 0.0;
    for (int i = 0; i < 4; ++i) {
        double m = std::abs((&r.u00)[i]);
        if (m > mag) { mag = m; best = i; }
    }
    if (mag == 0.0) return distance(r);
    cplx phase = (&u00)[best] / (&r.u00)[best];
    double p = std::abs(phase);
    if (p == 0.0) return distance(r);
    phase /= p;
    Unitary2 aligned{r.u00 * phase, r.u01 * phase, r.u10 * phase, r.u11 * phase};
    (void)a; (void)b;
    return distance(aligned);
}

}  // namespace qsparith
