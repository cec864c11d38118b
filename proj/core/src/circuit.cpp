#include "qsparith/circuit.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsparith {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::Phase: return "phase";
        case GateKind::CPhase: return "cphase";
        case GateKind::CRY: return "cry";
        case GateKind::CZ: return "cz";
        case GateKind::MCX: return "mcx";
        case GateKind::MCZ: return "mcz";
        case GateKind::Toffoli: return "ccx";
        case GateKind::QFT: return "qft";
        case GateKind::QFTInv: return "qftinv";
    }
    return "?";
}

void Circuit::append(Gate g) { gates.push_back(std::move(g)); }

void Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits)
        throw std::invalid_argument("circuit append: qubit-count mismatch");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void Circuit::validate() const {
    for (const Gate& g : gates) {
        auto check = [&](int q) {
            if (q < 0 || q >= n_qubits)
                throw std::out_of_range("circuit: qubit index out of range");
        };
        std::set<int> seen;
        if (g.kind == GateKind::QFT || g.kind == GateKind::QFTInv) {
            if (g.span < 1 || g.target < 0 || g.target + g.span > n_qubits)
                throw std::out_of_range("circuit: QFT span out of range");
            continue;
        }
        check(g.target);
        seen.insert(g.target);
        for (int c : g.controls) {
            check(c);
            if (!seen.insert(c).second)
                throw std::out_of_range("circuit: duplicate qubit in one gate");
        }
    }
}

std::string Circuit::to_netlist() const {
    std::ostringstream os;
    char buf[64];
    for (const Gate& g : gates) {
        os << gate_name(g.kind);
        std::snprintf(buf, sizeof buf, " %.17g", g.angle);
        os << buf;
        os << " [";
        for (std::size_t i = 0; i < g.controls.size(); ++i)
            os << (i ? "," : "") << g.controls[i];
        os << "] " << g.target;
        if (g.kind == GateKind::QFT || g.kind == GateKind::QFTInv)
            os << " span=" << g.span;
        os << "\n";
    }
    return os.str();
}

std::uint64_t RegisterLayout::index(std::uint64_t nx, std::uint64_t fy, int av,
                                    int bv) const {
    if (n < 64 && nx >= (std::uint64_t{1} << n))
        throw std::out_of_range("register layout: N value out of range");
    if (f < 64 && fy >= (std::uint64_t{1} << f))
        throw std::out_of_range("register layout: F value out of range");
    std::uint64_t idx = nx;
    idx = (idx << f) | fy;
    idx = (idx << a) | static_cast<std::uint64_t>(a ? av : 0);
    idx = (idx << b) | static_cast<std::uint64_t>(b ? bv : 0);
    return idx;
}

std::string RegisterLayout::label(std::uint64_t basis_index) const {
    std::uint64_t rest = basis_index;
    const int bb = b, aa = a;
    std::uint64_t bv = bb ? (rest & 1) : 0; rest >>= bb;
    std::uint64_t av = aa ? (rest & 1) : 0; rest >>= aa;
    std::uint64_t fv = f ? (rest & ((std::uint64_t{1} << f) - 1)) : 0; rest >>= f;
    std::uint64_t nv = rest;
    std::ostringstream os;
    os << "N=" << nv;
    if (f) os << ",F=" << fv;
    if (aa) os << ",A=" << av;
    if (bb) os << ",B=" << bv;
    return os.str();
}

}  // namespace qsparith
