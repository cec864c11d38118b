#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsparith {

/// Gate vocabulary of the simulator.  QFT/QFT-inverse act on a whole
/// register span and count as single units in resource audits (their
/// internal depth is excluded by convention).
enum class GateKind {
    X, H, Z, S, Sdg,
    RY,        // standard rotation exp(-i theta Y / 2)
    RZ,        // standard rotation exp(-i theta Z / 2)
    Phase,     // diag(1, e^{i theta})
    CPhase,    // controlled diag(1, e^{i theta})
    CRY,       // controlled RY
    CZ,
    MCX,       // multi-controlled X
    MCZ,       // multi-controlled Z
    Toffoli,
    QFT,       // forward QFT with e^{+2 pi i jk / 2^n} on [target, target+span)
    QFTInv,
};

struct Gate {
    GateKind kind;
    int target = 0;                // for QFT: first (most significant) qubit
    std::vector<int> controls;     // empty for single-qubit gates
    double angle = 0.0;            // rotation/phase parameter
    int span = 0;                  // register width for QFT/QFTInv

    static Gate x(int t) { return {GateKind::X, t, {}, 0.0, 0}; }
    static Gate h(int t) { return {GateKind::H, t, {}, 0.0, 0}; }
    static Gate z(int t) { return {GateKind::Z, t, {}, 0.0, 0}; }
    static Gate s(int t) { return {GateKind::S, t, {}, 0.0, 0}; }
    static Gate sdg(int t) { return {GateKind::Sdg, t, {}, 0.0, 0}; }
    static Gate ry(int t, double a) { return {GateKind::RY, t, {}, a, 0}; }
    static Gate rz(int t, double a) { return {GateKind::RZ, t, {}, a, 0}; }
    static Gate phase(int t, double a) { return {GateKind::Phase, t, {}, a, 0}; }
    static Gate cphase(int c, int t, double a) { return {GateKind::CPhase, t, {c}, a, 0}; }
    static Gate cry(int c, int t, double a) { return {GateKind::CRY, t, {c}, a, 0}; }
    static Gate cz(int c, int t) { return {GateKind::CZ, t, {c}, 0.0, 0}; }
    static Gate mcx(std::vector<int> cs, int t) { return {GateKind::MCX, t, std::move(cs), 0.0, 0}; }
    static Gate mcz(std::vector<int> cs, int t) { return {GateKind::MCZ, t, std::move(cs), 0.0, 0}; }
    static Gate toffoli(int c0, int c1, int t) { return {GateKind::Toffoli, t, {c0, c1}, 0.0, 0}; }
    static Gate qft(int first, int span) { return {GateKind::QFT, first, {}, 0.0, span}; }
    static Gate qft_inv(int first, int span) { return {GateKind::QFTInv, first, {}, 0.0, span}; }
};

const char* gate_name(GateKind k);

/// Ordered list of gates over named registers.  Immutable once built;
/// shareable across threads.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void append(Gate g);
    void append(const Circuit& other);  // other must use the same qubit space
    /// Validates all qubit indices; throws std::out_of_range on a bad gate.
    void validate() const;

    /// One gate per line: name, angle, controls, target (netlist form).
    std::string to_netlist() const;
};

/// Named register layout: N (input), F (readout), A (QSP ancilla),
/// B (flag).  Qubit 0 is the most significant bit of the basis index, and
/// registers are MSB-first, concatenated in N, F, A, B order.
struct RegisterLayout {
    int n = 0;  // input register width
    int f = 0;  // readout register width
    int a = 0;  // 0 or 1
    int b = 0;  // 0 or 1

    int total() const { return n + f + a + b; }
    int n_first() const { return 0; }
    int f_first() const { return n; }
    int a_qubit() const { return n + f; }
    int b_qubit() const { return n + f + a; }

    /// Basis index with the N register holding value x, F holding y, etc.
    std::uint64_t index(std::uint64_t nx, std::uint64_t fy = 0, int av = 0,
                        int bv = 0) const;
    std::string label(std::uint64_t basis_index) const;
};

}  // namespace qsparith
