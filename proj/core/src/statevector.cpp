#include "qsparith/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qsparith {

Statevector::Statevector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 24)
        throw std::invalid_argument("statevector: qubit count must be in [1, 24]");
    amp_.assign(std::size_t{1} << n_qubits, cplx(0.0, 0.0));
    amp_[0] = 1.0;
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    if (index >= s.dim()) throw std::out_of_range("statevector: basis index");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double acc = 0.0;
    for (const cplx& a : amp_) acc += std::norm(a);
    return std::sqrt(acc);
}

void Statevector::normalize_check(double tol) const {
    if (std::abs(norm() - 1.0) > tol)
        throw std::runtime_error("statevector: norm drifted beyond tolerance");
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) p[i] = std::norm(amp_[i]);
    return p;
}

void Statevector::apply_single(int qubit, const Unitary2& u) {
    const std::uint64_t bit = bit_of(qubit);
    const std::uint64_t dim = amp_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const std::uint64_t j = i | bit;
        const cplx a0 = amp_[i], a1 = amp_[j];
        amp_[i] = u.u00 * a0 + u.u01 * a1;
        amp_[j] = u.u10 * a0 + u.u11 * a1;
    }
}

void Statevector::apply_controlled_single(const std::vector<int>& controls, int qubit,
                                          const Unitary2& u) {
    std::uint64_t cmask = 0;
    for (int c : controls) cmask |= bit_of(c);
    const std::uint64_t bit = bit_of(qubit);
    const std::uint64_t dim = amp_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        if ((i & cmask) != cmask) continue;
        const std::uint64_t j = i | bit;
        const cplx a0 = amp_[i], a1 = amp_[j];
        amp_[i] = u.u00 * a0 + u.u01 * a1;
        amp_[j] = u.u10 * a0 + u.u11 * a1;
    }
}

void Statevector::apply_diag_masked(std::uint64_t mask, cplx factor) {
    const std::uint64_t dim = amp_.size();
    for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) amp_[i] *= factor;
}

void Statevector::apply_qft(int first, int span, bool inverse) {
    // Textbook network: H plus controlled phases, then the bit-reversal
    // swaps.  Forward convention e^{+2 pi i jk / 2^span}.
    const double sign = inverse ? -1.0 : 1.0;
    auto cphase = [&](int cq, int tq, double theta) {
        apply_diag_masked(bit_of(cq) | bit_of(tq), std::polar(1.0, theta));
    };
    const Unitary2 h{cplx(M_SQRT1_2, 0), cplx(M_SQRT1_2, 0), cplx(M_SQRT1_2, 0),
                     cplx(-M_SQRT1_2, 0)};
    if (!inverse) {
        for (int q = 0; q < span; ++q) {
            apply_single(first + q, h);
            for (int k = 2; q + k <= span; ++k)
                cphase(first + q + k - 1, first + q, sign * M_PI / std::ldexp(1.0, k - 1));
        }
        for (int q = 0; q < span / 2; ++q) {
            int p = first + q, r = first + span - 1 - q;
            // swap via three CX equivalents: do it directly on amplitudes
            const std::uint64_t bp = bit_of(p), br = bit_of(r);
            for (std::uint64_t i = 0; i < amp_.size(); ++i) {
                bool vp = i & bp, vr = i & br;
                if (vp && !vr) std::swap(amp_[i], amp_[(i ^ bp) | br]);
            }
        }
    } else {
        for (int q = 0; q < span / 2; ++q) {
            int p = first + q, r = first + span - 1 - q;
            const std::uint64_t bp = bit_of(p), br = bit_of(r);
            for (std::uint64_t i = 0; i < amp_.size(); ++i) {
                bool vp = i & bp, vr = i & br;
                if (vp && !vr) std::swap(amp_[i], amp_[(i ^ bp) | br]);
            }
        }
        for (int q = span - 1; q >= 0; --q) {
            for (int k = span - q; k >= 2; --k)
                cphase(first + q + k - 1, first + q, sign * M_PI / std::ldexp(1.0, k - 1));
            apply_single(first + q, h);
        }
    }
}

void Statevector::apply_gate(const Gate& g) {
    switch (g.kind) {
        case GateKind::X:
            apply_single(g.target, Unitary2{0, 1, 1, 0});
            return;
        case GateKind::H:
            apply_single(g.target, Unitary2{cplx(M_SQRT1_2, 0), cplx(M_SQRT1_2, 0),
                                            cplx(M_SQRT1_2, 0), cplx(-M_SQRT1_2, 0)});
            return;
        case GateKind::Z:
            apply_diag_masked(bit_of(g.target), -1.0);
            return;
        case GateKind::S:
            apply_diag_masked(bit_of(g.target), cplx(0, 1));
            return;
        case GateKind::Sdg:
            apply_diag_masked(bit_of(g.target), cplx(0, -1));
            return;
        case GateKind::RY: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            apply_single(g.target, Unitary2{c, -s, s, c});
            return;
        }
        case GateKind::RZ: {
            const cplx em = std::polar(1.0, -g.angle / 2), ep = std::polar(1.0, g.angle / 2);
            apply_single(g.target, Unitary2{em, 0, 0, ep});
            return;
        }
        case GateKind::Phase:
            apply_diag_masked(bit_of(g.target), std::polar(1.0, g.angle));
            return;
        case GateKind::CPhase:
            apply_diag_masked(bit_of(g.target) | bit_of(g.controls.at(0)),
                              std::polar(1.0, g.angle));
            return;
        case GateKind::CRY: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            apply_controlled_single(g.controls, g.target, Unitary2{c, -s, s, c});
            return;
        }
        case GateKind::CZ:
            apply_diag_masked(bit_of(g.target) | bit_of(g.controls.at(0)), -1.0);
            return;
        case GateKind::MCX:
            apply_controlled_single(g.controls, g.target, Unitary2{0, 1, 1, 0});
            return;
        case GateKind::MCZ: {
            std::uint64_t mask = bit_of(g.target);
            for (int c : g.controls) mask |= bit_of(c);
            apply_diag_masked(mask, -1.0);
            return;
        }
        case GateKind::Toffoli:
            apply_controlled_single(g.controls, g.target, Unitary2{0, 1, 1, 0});
            return;
        case GateKind::QFT:
            apply_qft(g.target, g.span, false);
            return;
        case GateKind::QFTInv:
            apply_qft(g.target, g.span, true);
            return;
    }
    throw std::logic_error("unknown gate kind");
}

Statevector apply(Statevector state, const Circuit& circuit) {
    if (circuit.n_qubits != state.n_qubits())
        throw std::invalid_argument("apply: circuit and state sizes differ");
    circuit.validate();
    for (const Gate& g : circuit.gates) state.apply_gate(g);
    state.normalize_check(1e-10);
    return state;
}

Statevector uniform_over_register(int n_qubits, int first, int width) {
    Statevector s(n_qubits);
    for (int q = first; q < first + width; ++q) s.apply_gate(Gate::h(q));
    return s;
}

}  // namespace qsparith
