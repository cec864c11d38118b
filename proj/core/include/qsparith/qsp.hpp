#pragma once

#include "qsparith/phase_schedule.hpp"
#include "qsparith/unitary2.hpp"

#include <string>
#include <vector>

namespace qsparith {

/// The QSP conventions of the standard table: each variant fixes the signal
/// operator, the signal processor, and the basis-change pair (Ua, Ub) so
/// that every convention realizes the same response polynomial.
struct QspConvention {
    enum Kind { Wx, Wy, Wz, Reflection, WxTwisted } kind = Wx;
    double twist = 0.0;  // used by WxTwisted only

    static QspConvention wx() { return {Wx, 0.0}; }
    static QspConvention wy() { return {Wy, 0.0}; }
    static QspConvention wz() { return {Wz, 0.0}; }
    static QspConvention reflection() { return {Reflection, 0.0}; }
    static QspConvention wx_twisted(double phi) { return {WxTwisted, phi}; }
};

/// Signal operator at signal value a in [-1, 1] for the given convention.
/// Domain error beyond 1e-12 slack.
Unitary2 signal_operator(double a, const QspConvention& conv);

/// Signal processor S(phi) for the given convention.
Unitary2 signal_processor(double phi, const QspConvention& conv);

/// Basis-change pair (Ua, Ub) of the convention.
Unitary2 basis_change_a(const QspConvention& conv);
Unitary2 basis_change_b(const QspConvention& conv);

/// The raw QSP product U_phi = S(phi_m) W S(phi_{m-1}) ... W S(phi_0),
/// evaluated at signal value a in the given convention (end offsets of the
/// schedule applied).
Unitary2 qsp_evaluate(const PhaseSchedule& phases, double a,
                      const QspConvention& conv = QspConvention::wx());

/// Like qsp_evaluate but with an arbitrary caller-supplied signal operator
/// (used for nested evaluation, where the inner QSP output is the signal).
Unitary2 qsp_evaluate_operator(const PhaseSchedule& phases, const Unitary2& signal_op,
                               const QspConvention& conv = QspConvention::wx());

/// Re of the (0,0) entry of Ua^dag * U_phi * Ub^dag; for antisymmetric
/// schedules this is the real polynomial P(a), identical across
/// conventions.
double qsp_response(const PhaseSchedule& phases, double a,
                    const QspConvention& conv = QspConvention::wx());

/// Phase nesting: composes outer-after-inner into a single schedule whose
/// evaluation equals running the outer protocol with the inner QSP output
/// as its signal operator.  Result degree = inner.degree * outer.degree.
/// Both inputs must be antisymmetric.
PhaseSchedule merge_phases(const PhaseSchedule& outer, const PhaseSchedule& inner);

/// One named check of an embeddability diagnostic.
struct EmbedCheck {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct EmbedReport {
    std::vector<EmbedCheck> checks;
    bool all_pass = true;
};

/// Antisymmetry (offsets stripped, mod 2*pi) plus the structural boundary
/// values P(+-1), P(0) that an antisymmetric schedule of this degree parity
/// and offset flag must attain exactly.
EmbedReport validate_embeddable(const PhaseSchedule& phases, double tol = 1e-9);

/// Eigenphase (in turns) of a signal-operator-shaped unitary with real
/// diagonal P: returns acos(P)/(2*pi), the principal value in [0, 1/2].
/// The QPE reader resolves the +- pair.
double phase_from_amplitude(double p);

/// Verifies A S0 A^dag S_psi = U^2 for U = W_{XY,phi}(a) with psi = |0>,
/// i.e. the Grover square identity on a twisted signal operator.
bool grover_square_check(double a, double phi, double tol = 1e-10);

}  // namespace qsparith
