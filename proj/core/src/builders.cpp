#include "qsparith/builders.hpp"

#include <cmath>
#include <stdexcept>

namespace qsparith {

namespace {

double theta_bit(int bit, int n, const SubspaceWindow& w) {
    return 2.0 * M_PI * std::ldexp(1.0, bit) / (w.alpha * std::ldexp(1.0, n));
}

double theta_shift(const SubspaceWindow& w) { return 2.0 * M_PI * w.delta / w.alpha; }

// One W_Y block: R_Y(scale * Delta) on the ancilla plus CR_Y(scale *
// theta_i) from each input qubit.  Qubit q of the N register carries bit
// weight 2^(n-1-q).
void append_wy_block(Circuit& c, int n_first, int n, int a_qubit,
                     const SubspaceWindow& w, double scale) {
    c.append(Gate::ry(a_qubit, scale * theta_shift(w)));
    for (int q = 0; q < n; ++q) {
        int bit = n - 1 - q;
        c.append(Gate::cry(n_first + q, a_qubit, scale * theta_bit(bit, n, w)));
    }
}

// Controlled block {|0>: I, |1>: R_Y(2*scale*(theta_a + Delta))}:
// V(+scale), CZ, V(-scale), CZ, using Z W_Y Z = W_Y^dag.
void append_cw_block(Circuit& c, int n_first, int n, int a_qubit, int control,
                     const SubspaceWindow& w, double scale) {
    append_wy_block(c, n_first, n, a_qubit, w, scale);
    c.append(Gate::cz(control, a_qubit));
    append_wy_block(c, n_first, n, a_qubit, w, -scale);
    c.append(Gate::cz(control, a_qubit));
}

void append_processor(Circuit& c, int a_qubit, double phi) {
    // diag(e^{i phi}, e^{-i phi}) on the ancilla.
    c.append(Gate::rz(a_qubit, -2.0 * phi));
}

}  // namespace

Circuit build_wy_kickback(int n, const SubspaceWindow& w) {
    if (n < 1) throw std::invalid_argument("build_wy_kickback: need n >= 1");
    Circuit c;
    c.n_qubits = n + 1;
    append_wy_block(c, 0, n, n, w, 1.0);
    return c;
}

Circuit build_qsp_over_kickback(const PhaseSchedule& phases, int n,
                                const SubspaceWindow& w) {
    if (n < 1) throw std::invalid_argument("build_qsp_over_kickback: need n >= 1");
    Circuit c;
    c.n_qubits = n + 1;
    const std::vector<double> phis = phases.evaluation_angles();
    append_processor(c, n, phis[0]);
    for (std::size_t j = 1; j < phis.size(); ++j) {
        append_wy_block(c, 0, n, n, w, 1.0);
        append_processor(c, n, phis[j]);
    }
    return c;
}

Circuit build_controlled_wy(int n, const SubspaceWindow& w) {
    if (n < 1) throw std::invalid_argument("build_controlled_wy: need n >= 1");
    Circuit c;
    c.n_qubits = n + 2;  // N register, control (qubit n), ancilla (qubit n+1)
    append_cw_block(c, 0, n, n + 1, n, w, 1.0);
    return c;
}

Circuit append_controlled_qsp(Circuit circuit, const PhaseSchedule& phases,
                              int n_first, int n, int a_qubit, int control_qubit,
                              const SubspaceWindow& w) {
    if (!phases.antisymmetric)
        throw std::invalid_argument("controlled QSP: schedule must be antisymmetric");
    const std::vector<double> phis = phases.evaluation_angles();
    append_processor(circuit, a_qubit, phis[0]);
    double total = phis[0];
    for (std::size_t j = 1; j < phis.size(); ++j) {
        append_cw_block(circuit, n_first, n, a_qubit, control_qubit, w, 0.5);
        append_processor(circuit, a_qubit, phis[j]);
        total += phis[j];
    }
    // The processor chain contributes S(total) = -I on the idle branch when
    // total = pi (mod 2 pi); an R_Z(pi) on the control restores the branch
    // structure up to a global factor.
    if (std::abs(wrap_angle(total)) > 1e-9) {
        if (std::abs(std::abs(wrap_angle(total)) - M_PI) > 1e-9)
            throw std::logic_error("controlled QSP: angle sum neither 0 nor pi mod 2pi");
        circuit.append(Gate::rz(control_qubit, M_PI));
    }
    return circuit;
}

Circuit build_controlled_qsp(const PhaseSchedule& phases, int n,
                             const SubspaceWindow& w) {
    Circuit c;
    c.n_qubits = n + 2;
    return append_controlled_qsp(std::move(c), phases, 0, n, n + 1, n, w);
}

Circuit build_phase_adder(int f, long long constant) {
    if (f < 1) throw std::invalid_argument("build_phase_adder: need f >= 1");
    Circuit c;
    c.n_qubits = f;
    const long long dim = 1LL << f;
    long long a = ((constant % dim) + dim) % dim;
    for (int q = 0; q < f; ++q) {
        long long weight = (a << (f - 1 - q)) % dim;  // a * 2^j mod 2^F
        if (weight == 0) continue;                     // theta multiple of 2 pi
        c.append(Gate::phase(q, 2.0 * M_PI * static_cast<double>(weight) /
                                    static_cast<double>(dim)));
    }
    return c;
}

Circuit build_phase_adder_register(int n, int f) {
    if (n < 1 || f < 1) throw std::invalid_argument("phase adder: register widths");
    Circuit c;
    c.n_qubits = n + f;
    for (int qn = 0; qn < n; ++qn) {
        int i = n - 1 - qn;
        for (int qf = 0; qf < f; ++qf) {
            int j = f - 1 - qf;
            if (i + j >= f) continue;  // phase multiple of 2 pi, line dropped
            c.append(Gate::cphase(qn, n + qf,
                                  2.0 * M_PI * std::ldexp(1.0, i + j - f)));
        }
    }
    return c;
}

QpeResult qpe_read(Statevector state,
                   const std::function<void(Circuit&, int k, int control)>& controlled_power,
                   int f_first, int f) {
    if (f < 1) throw std::invalid_argument("qpe_read: need f >= 1");
    Circuit c;
    c.n_qubits = state.n_qubits();
    c.append(Gate::qft(f_first, f));
    for (int k = 0; k < f; ++k)
        controlled_power(c, k, f_first + f - 1 - k);  // qubit with weight 2^k
    c.append(Gate::qft_inv(f_first, f));

    QpeResult res{apply(std::move(state), c), {}};
    res.distribution.assign(std::size_t{1} << f, 0.0);
    const int n_total = res.state.n_qubits();
    const int below = n_total - (f_first + f);  // qubits less significant than F
    const std::uint64_t dim = res.state.dim();
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t fy = (i >> below) & ((std::uint64_t{1} << f) - 1);
        res.distribution[fy] += std::norm(res.state.amplitude(i));
    }
    return res;
}

std::vector<double> hadamard_test(const Circuit& qsp_circuit, const Statevector& input,
                                  int n, int a_qubit) {
    Statevector out = apply(input, qsp_circuit);
    const int n_total = input.n_qubits();
    const int below_n = n_total - n;  // bits after the N register
    std::vector<double> vals(std::size_t{1} << n, 0.0);
    const std::uint64_t a_bit = std::uint64_t{1} << (n_total - 1 - a_qubit);
    const std::uint64_t dim = input.dim();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & a_bit) continue;  // project on ancilla |0>
        std::uint64_t a = i >> below_n;
        vals[a] += (std::conj(input.amplitude(i)) * out.amplitude(i)).real();
    }
    return vals;
}

}  // namespace qsparith
