#include "qsparith/resources.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsparith {

std::string ResourceCount::to_string() const {
    std::ostringstream os;
    os << "qubits=" << qubits << " depth=" << depth << " qft=" << qft
       << " rz=" << rz << " ry=" << ry << " cz=" << cz << " cry=" << cry;
    return os.str();
}

CircuitFamily family_from_name(const std::string& name) {
    if (name == "wy") return CircuitFamily::Wy;
    if (name == "qso") return CircuitFamily::QSO;
    if (name == "cwy") return CircuitFamily::CWy;
    if (name == "cqsp") return CircuitFamily::CQSP;
    if (name == "qse") return CircuitFamily::QSE;
    throw std::invalid_argument("unknown circuit family '" + name + "'");
}

const char* family_name(CircuitFamily k) {
    switch (k) {
        case CircuitFamily::Wy: return "wy";
        case CircuitFamily::QSO: return "qso";
        case CircuitFamily::CWy: return "cwy";
        case CircuitFamily::CQSP: return "cqsp";
        case CircuitFamily::QSE: return "qse";
    }
    return "?";
}

ResourceCount estimate(CircuitFamily kind, int n, int f, int m) {
    if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
    ResourceCount r;
    const long long nn = n, mm = m;
    switch (kind) {
        case CircuitFamily::Wy:
            r.qubits = n + 1;
            r.depth = n + 1;
            r.ry = 1;
            r.cry = nn;
            return r;
        case CircuitFamily::QSO:
            if (m < 1) throw std::invalid_argument("estimate: m_phi must be >= 1");
            r.qubits = n + 1;
            r.depth = mm * (nn + 2) + 1;
            r.rz = mm + 1;
            r.ry = mm;
            r.cry = mm * nn;
            return r;
        case CircuitFamily::CWy:
            r.qubits = n + 2;
            r.depth = 2 * (nn + 2);
            r.ry = 2;
            r.cz = 2;
            r.cry = 2 * nn;
            return r;
        case CircuitFamily::CQSP:
            if (m < 1) throw std::invalid_argument("estimate: m_phi must be >= 1");
            r.qubits = n + 2;
            r.depth = mm * (2 * (nn + 2) + 1) + 1;
            r.rz = mm + 1;
            r.ry = 2 * mm;
            r.cz = 2 * mm;
            r.cry = 2 * mm * nn;
            return r;
        case CircuitFamily::QSE: {
            if (m < 1 || f < 1) throw std::invalid_argument("estimate: QSE needs f, m_phi");
            const long long copies = 1LL << (f + 1);  // reuse-based account
            r.qubits = f + n + 1;
            r.depth = copies * (mm * (2 * (nn + 2) + 1) + 1);
            r.qft = 2;
            r.rz = copies * (mm + 1);
            r.ry = 2 * copies * mm;
            r.cz = 2 * copies * mm;
            r.cry = 2 * copies * mm * nn;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

ResourceCount estimate_qse_sequential(int n, int f, int m) {
    if (n < 1 || f < 1 || m < 1)
        throw std::invalid_argument("estimate_qse_sequential: bad parameters");
    const long long copies = (1LL << f) - 1;
    const long long nn = n, mm = m;
    ResourceCount r;
    r.qubits = f + n + 1;
    r.depth = copies * (mm * (2 * (nn + 2) + 1) + 1);
    r.qft = 2;
    r.rz = copies * (mm + 1);
    r.ry = 2 * copies * mm;
    r.cz = 2 * copies * mm;
    r.cry = 2 * copies * mm * nn;
    return r;
}

AuditResult audit(const Circuit& circuit) {
    AuditResult res;
    res.count.qubits = circuit.n_qubits;
    std::vector<long long> wire(circuit.n_qubits, 0);
    std::set<std::string> unknown;
    for (const Gate& g : circuit.gates) {
        bool counted = true;
        switch (g.kind) {
            case GateKind::QFT:
            case GateKind::QFTInv: res.count.qft++; counted = false; break;
            case GateKind::RZ: res.count.rz++; break;
            case GateKind::RY: res.count.ry++; break;
            case GateKind::CZ: res.count.cz++; break;
            case GateKind::CRY: res.count.cry++; break;
            default:
                unknown.insert(gate_name(g.kind));
                counted = false;
                break;
        }
        if (!counted) continue;  // QFT blocks contribute no depth by convention
        long long level = 0;
        level = std::max(level, wire[g.target]);
        for (int c : g.controls) level = std::max(level, wire[c]);
        ++level;
        wire[g.target] = level;
        for (int c : g.controls) wire[c] = level;
    }
    res.count.depth = *std::max_element(wire.begin(), wire.end());
    res.unknown_kinds.assign(unknown.begin(), unknown.end());
    return res;
}

}  // namespace qsparith
