#pragma once

#include "qsparith/circuit.hpp"
#include "qsparith/unitary2.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qsparith {

/// Dense amplitude vector over up to 24 qubits.  Qubit 0 is the most
/// significant bit of the basis index.
class Statevector {
  public:
    explicit Statevector(int n_qubits);
    static Statevector basis(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    std::vector<cplx>& amplitudes() { return amp_; }
    cplx amplitude(std::uint64_t index) const { return amp_[index]; }
    void set_amplitude(std::uint64_t index, cplx v) { amp_[index] = v; }

    double norm() const;
    void normalize_check(double tol = 1e-10) const;  // throws when violated

    /// Applies one gate in place.
    void apply_gate(const Gate& g);

    /// Probability of each basis state.
    std::vector<double> probabilities() const;

  private:
    void apply_single(int qubit, const Unitary2& u);
    void apply_controlled_single(const std::vector<int>& controls, int qubit,
                                 const Unitary2& u);
    void apply_diag_masked(std::uint64_t mask, cplx factor);  // phase where all mask bits set
    void apply_qft(int first, int span, bool inverse);

    std::uint64_t bit_of(int qubit) const { return std::uint64_t{1} << (n_ - 1 - qubit); }

    int n_;
    std::vector<cplx> amp_;
};

/// Exact dense simulation of a whole circuit; norm is checked afterwards.
Statevector apply(Statevector state, const Circuit& circuit);

/// Uniform superposition over the first `width` qubits starting at
/// `first`, other qubits in |0>.
Statevector uniform_over_register(int n_qubits, int first, int width);

}  // namespace qsparith
