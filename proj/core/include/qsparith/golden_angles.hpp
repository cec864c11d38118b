#pragma once

#include "qsparith/phase_schedule.hpp"
#include "qsparith/targets.hpp"

#include <string>
#include <vector>

namespace qsparith {

/// One bundled phase-angle schedule with its target function and the grid
/// band (half-width around each discontinuity) excluded when certifying.
struct GoldenEntry {
    std::string name;        // e.g. "p2a_2x10"
    std::string family;      // p2a | a2p | sgn | step | f
    PhaseSchedule schedule;
    TargetFunction target;
    double exclude_band = 0.0;  // |response jump| half-width, 0 when none
    bool negated = false;       // schedule realizes -target on its domain
};

/// All bundled schedules, in table order.  The nine p2a/a2p/sgn entries
/// come first, then the two step filters and the worked example f.
const std::vector<GoldenEntry>& golden_table();

/// Lookup by name; throws std::out_of_range for unknown names.
const GoldenEntry& golden(const std::string& name);

/// The nine function schedules (p2a, a2p, sgn families).
std::vector<const GoldenEntry*> golden_function_entries();

/// Writes every bundled schedule as a .phase file into `dir`.
void write_golden_files(const std::string& dir);

}  // namespace qsparith
