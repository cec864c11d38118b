#pragma once

#include "qsparith/circuit.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsparith {

/// Static gate/qubit/depth account for one circuit family.  Depth follows
/// the fully-connected convention (every counted gate is one depth unit);
/// QFT blocks count as gates of their own kind and contribute no depth.
struct ResourceCount {
    int qubits = 0;
    long long depth = 0;
    long long qft = 0;
    long long rz = 0;
    long long ry = 0;
    long long cz = 0;
    long long cry = 0;

    bool operator==(const ResourceCount&) const = default;
    std::string to_string() const;
};

enum class CircuitFamily { Wy, QSO, CWy, CQSP, QSE };

CircuitFamily family_from_name(const std::string& name);
const char* family_name(CircuitFamily k);

/// Closed-form scaling row for the family.  The QSE row uses the
/// reuse-based account with a 2^{F+1} copy factor across the controlled
/// powers.
ResourceCount estimate(CircuitFamily kind, int n, int f = 0, int m_phi = 0);

/// QSE account for the literal sequential construction actually emitted
/// (2^F - 1 controlled-QSP copies plus two QFTs).
ResourceCount estimate_qse_sequential(int n, int f, int m_phi);

struct AuditResult {
    ResourceCount count;
    std::vector<std::string> unknown_kinds;  // gate names outside the table
};

/// Counts a built circuit by gate kind and computes wire depth.  Must
/// equal estimate() for the matching family and parameters (QSE: the
/// sequential form).
AuditResult audit(const Circuit& circuit);

}  // namespace qsparith
