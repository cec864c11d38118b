#pragma once

#include "qsparith/circuit.hpp"
#include "qsparith/phase_schedule.hpp"
#include "qsparith/statevector.hpp"
#include "qsparith/targets.hpp"

#include <functional>
#include <vector>

namespace qsparith {

/// Rotation kickback over registers N + ancilla A (qubits 0..N-1, N):
/// R_Y(Delta) on A plus one controlled R_Y(theta_i) per input qubit, with
/// theta_i = 2 pi 2^i / (alpha 2^N) and Delta = 2 pi delta / alpha.
/// Restricted to |bin[a]>, the ancilla sees R_Y(theta_a + Delta), i.e. the
/// W_Y signal operator at signal value window_signal(a, N, w).
Circuit build_wy_kickback(int n, const SubspaceWindow& w);

/// QSP over the kickback: signal processors R_Z(-2 phi_j) on A interleaved
/// with kickback blocks.  Restricted to |bin[a]> this is the 2x2 protocol
/// qsp_evaluate(phases, window_signal(a), Wy) on the ancilla.
Circuit build_qsp_over_kickback(const PhaseSchedule& phases, int n,
                                const SubspaceWindow& w);

/// Controlled signal operator over control + N + A (control = qubit N,
/// ancilla = qubit N+1): CZ-conjugated kickback pair exploiting
/// W_Y^dag = Z W_Y Z.  Control |0>: identity; control |1>: W_Y squared,
/// i.e. R_Y(2 (theta_a + Delta)).
Circuit build_controlled_wy(int n, const SubspaceWindow& w);

/// Controlled QSP over (N, A) with the control on `control_qubit`.
/// Control |0>: identity; control |1>: the uncontrolled QSP (the kickback
/// halves run at half angle so the pair reproduces one signal operator).
/// Schedules whose evaluation angles sum to pi (mod 2 pi) get one extra
/// R_Z(pi) on the control, which restores the branch structure up to an
/// unobservable global factor.
Circuit append_controlled_qsp(Circuit circuit, const PhaseSchedule& phases,
                              int n_first, int n, int a_qubit, int control_qubit,
                              const SubspaceWindow& w);

/// Standalone controlled QSP over N + control + A (layout N, F=1, A=1).
Circuit build_controlled_qsp(const PhaseSchedule& phases, int n,
                             const SubspaceWindow& w);

/// Phase-kickback adder core for a classical constant: phases
/// 2 pi c 2^j / 2^F per readout qubit, zero lines dropped.
Circuit build_phase_adder(int f, long long constant);

/// Register-addend variant over N + F: controlled phases
/// 2 pi 2^{i+j} / 2^F between input bit i and readout bit j; lines with
/// i + j >= F are multiples of 2 pi and dropped.
Circuit build_phase_adder_register(int n, int f);

struct QpeResult {
    Statevector state;               // post-QPE state
    std::vector<double> distribution;  // marginal over the F register
};

/// Standard additive QPE: forward QFT on F, controlled powers, inverse
/// QFT.  `controlled_power(k, control)` must append the circuit for
/// controlled-U^(2^k); control qubit k carries weight 2^k.  Exact
/// distribution, no sampling.
QpeResult qpe_read(Statevector state,
                   const std::function<void(Circuit&, int k, int control)>& controlled_power,
                   int f_first, int f);

/// Per-input-state interference values: for every value a of the N
/// register, Re[conj(<a,0_A|psi_in>) * <a,0_A| U |psi_in>], computed
/// analytically from the statevector.  On a basis input this is the QSP
/// response at that input; on the uniform input each value carries the
/// 1/2^N input weight.
std::vector<double> hadamard_test(const Circuit& qsp_circuit, const Statevector& input,
                                  int n, int a_qubit);

}  // namespace qsparith
