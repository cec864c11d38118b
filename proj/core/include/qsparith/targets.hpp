#pragma once

#include <functional>
#include <string>

namespace qsparith {

/// Shift/scale pair selecting the working x-subspace of the signal window.
/// With delta = 0, alpha = 2 the window covers [-1, 0), the halved interval
/// used by the restricted-parity pipeline.
struct SubspaceWindow {
    double delta = 0.0;  // shift
    double alpha = 2.0;  // scaling coefficient, >= 1
};

enum class TargetParity { Odd, Even, None };

/// A scalar target for phase-angle synthesis: evaluator, closed domain
/// within [-1, 1], and declared parity.  The image must stay inside
/// [-1, 1] over the domain.
struct TargetFunction {
    std::function<double(double)> eval;
    double lo = -1.0;
    double hi = 1.0;
    TargetParity parity = TargetParity::None;
    std::string name;
};

/// (2/pi) * acos(x) - 1 = -(2/pi) * asin(x); linearizes a cosine-encoded
/// phase into the signal domain.
double p2a(double x);

/// sin(pi/2 * x); converts an amplitude into a proportional phase.
double a2p(double x);

/// x / |x|, with sgn(0) := +1 so the function is total.
double sgn(double x);

/// -1 if |x| < delta_s, else 1 (strict boundary).
double step(double x, double delta_s);

/// The worked pipeline example prepared on the larger space:
/// sin(30 x) * exp(-(1 + x)).
double example_f(double x);

/// The original form -cos(15 x) * exp(-x) (documentation plots only; its
/// range exceeds [-1, 1] so it is not fed to the pipeline directly).
double example_f_original(double x);

/// Linearized signal coordinate seen by the pipeline for register value a:
///   x = 2 * (a / (alpha * 2^N) + delta / alpha) - 1.
/// Affine and strictly increasing in a; the image for one window row covers
/// that row's x-subspace ([-1, 1) for alpha = 1, [-1, 0) for delta = 0,
/// alpha = 2, and so on).
double window_map(long long a, int n_qubits, const SubspaceWindow& w);

/// The raw signal value the rotation kickback presents for register value
/// a: cos((theta_a + Delta)/2) with theta_a = 2 pi a / (alpha 2^N) and
/// Delta = 2 pi delta / alpha.  Satisfies p2a(window_signal) == window_map.
double window_signal(long long a, int n_qubits, const SubspaceWindow& w);

/// Total rotation angle theta_a + Delta accumulated on the kickback
/// ancilla for register value a.
double window_rotation(long long a, int n_qubits, const SubspaceWindow& w);

// Ready-made TargetFunction wrappers for the named functions.
TargetFunction target_p2a();
TargetFunction target_a2p();
TargetFunction target_sgn();
TargetFunction target_step(double delta_s);
TargetFunction target_example_f();
TargetFunction target_chebyshev(int n);
TargetFunction target_identity();

}  // namespace qsparith
