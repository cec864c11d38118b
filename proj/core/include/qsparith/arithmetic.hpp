#pragma once

#include "qsparith/builders.hpp"
#include "qsparith/circuit.hpp"
#include "qsparith/phase_schedule.hpp"
#include "qsparith/statevector.hpp"
#include "qsparith/targets.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsparith {

/// Total function from N-bit inputs to F-bit outputs (values reduced
/// mod 2^F when applied).
struct TruthTableFunction {
    int n = 1;
    int f = 1;
    std::function<long long(long long)> map;

    long long reduced(long long x) const {
        const long long dim = 1LL << f;
        long long v = map(x) % dim;
        return v < 0 ? v + dim : v;
    }
};

/// The basis permutation |x>|b> -> |x>|(b + f(x)) mod 2^F> applied
/// directly to a statevector over layout N + F (+ anything below).  This
/// is the ground-truth oracle for all equivalence tests.
Statevector apply_uf_permutation(const TruthTableFunction& f, Statevector state,
                                 int n_first, int f_first);

/// Explicit circuit realization of U_f over N + F + flag B built from
/// multi-controlled modular adders (QFT_F, per-input-pattern controlled
/// phase ladders through B, QFT_F^dag).  Intended for small demonstration
/// sizes; the permutation oracle above is the reference path.
Circuit build_uf(const TruthTableFunction& f);

/// Diagonal unitary with phase e^{2 pi i f(x)/normalizer} on |bin[x]>.
/// The default normalizer 2^F aligns the phase grid with the readout grid
/// so QPE recovers integer-valued f exactly; pass max|f| for the
/// real-valued form.  Built from per-qubit phase ladders when f is linear
/// (f(x) = c*x) and from flagged phase injections otherwise.
Circuit build_vf(const TruthTableFunction& f, double normalizer = 0.0);

/// Full QFT adder: prepares |b>_F, runs QFT, the phase ladder for the
/// classical addend, inverse QFT; returns the readout value (probability-1
/// outcome).
long long qft_add(long long a, long long b, int f);

/// Adder circuit for a classical addend (QFT + ladder + QFT^dag) over F.
Circuit build_qft_adder(long long addend, int f);

/// Applies the modular adder to QFT|bin[l]> and verifies the state picks
/// up phase e^{-2 pi i l f / 2^F} with unchanged amplitude profile.
bool adder_eigenphase_check(long long l, long long f_val, int f, double tol = 1e-9);

/// QPE of the diagonal simulation V_f on |bin[x]>|bin[b]> over layout
/// N + F + flag B.  With the 2^F normalizer the readout register ends in
/// |bin[(b + f(x)) mod 2^F]> exactly, reproducing U_f as a basis map.
QpeResult qpe_of_vf(const TruthTableFunction& f, long long x, long long b);

enum class OracleKind { Projector, Grover };

/// U_f, then the |bin[y]> selector (multi-controlled X onto flag B for the
/// projector, multi-controlled Z for the Grover oracle), then U_f^dag.
/// Layout: N + F + B (B present for the projector only).
Circuit build_projector_oracle(const TruthTableFunction& f, long long y, OracleKind kind);

enum class FilterKind { None, Sgn, Step };

struct QsoOptions {
    FilterKind filter = FilterKind::None;
    PhaseSchedule filter_schedule;  // required unless filter == None
    PhaseSchedule p2a_schedule;     // defaults to the bundled p2a 2x10
    bool has_p2a_default = true;
};

/// Quantum Signal Oraclization: one QSP over the rotation kickback with
/// merged phases (p2a then f, then the optional filter).  Without a
/// filter this is the Block-Encoding of the processed function; with one
/// it acts as an approximate oracle with ancilla-<0| amplitude near +-1.
Circuit build_qso(const PhaseSchedule& f_phases, int n, const SubspaceWindow& w,
                  const QsoOptions& opts = {});

/// Merged schedule used by build_qso (exposed for classical reference
/// evaluation).
PhaseSchedule qso_merged_schedule(const PhaseSchedule& f_phases,
                                  const QsoOptions& opts);

/// F-bit readout split per the quadrant rules: the two most significant
/// bits select direct read (11), implicit minus (01), one's complement
/// (00) or minus one's complement (10) of the remaining F-2 bits.
struct QuadrantReading {
    int msb_pair = 0;        // value of the two MSBs, 0..3
    long long raw_bits = 0;  // remaining F-2 bits
    int sign = +1;
    long long magnitude = 0;
    long long translated = 0;  // sign * magnitude
};

QuadrantReading quadrant_translate(long long f_bits, int f);

struct QseRow {
    long long input = 0;          // N register value a
    double window_x = 0.0;        // window_map(a)
    double p_classical = 0.0;     // 2x2 response of the merged schedule
    double phase = 0.0;           // acos(P)/2pi, turns
    long long argmax_bits = 0;    // most probable F outcome
    QuadrantReading reading;
    long long oracle_bin = 0;     // nearest bin to the classical phase
    long long oracle_translated = 0;
    bool matches_oracle = false;  // within the +-1-bin quantization slack
};

struct QseResult {
    PhaseSchedule merged;
    std::vector<QseRow> rows;
    /// Joint exact distribution over (a, F-outcome).
    std::vector<std::vector<double>> distribution;
};

/// Full Quantum Signal Estimation: QPE over the controlled QSP with the
/// pipeline schedule merge(a2p after merge(f after p2a)).  Runs all basis
/// inputs at once on the uniform superposition and reads each input's
/// conditional F distribution; F >= 3 (the quadrant rules need two MSBs).
QseResult run_qse(const PhaseSchedule& p2a_sched, const PhaseSchedule& f_sched,
                  const PhaseSchedule& a2p_sched, int n, int f,
                  const SubspaceWindow& w);

/// The merged pipeline schedule without running anything.
PhaseSchedule qse_merged_schedule(const PhaseSchedule& p2a_sched,
                                  const PhaseSchedule& f_sched,
                                  const PhaseSchedule& a2p_sched);

/// The QSE circuit itself (QFT_F, controlled-QSP powers, QFT_F^dag) over
/// N + F + A.
Circuit build_qse_circuit(const PhaseSchedule& merged, int n, int f,
                          const SubspaceWindow& w);

}  // namespace qsparith
