#pragma once

#include <string>
#include <vector>
#include <iosfwd>

namespace qsparith {

enum class Parity { Odd, Even };

/// An ordered list of signal-processor angles plus the metadata needed to
/// evaluate and compose them.
///
/// Angles are stored bare: when `end_offset` is set, +pi/2 is added to the
/// first and last angle at evaluation time.  This keeps the antisymmetry
/// relation phi_j = -phi_{m-j} literally checkable on the stored list
/// (modulo 2*pi for schedules produced by merging).
struct PhaseSchedule {
    std::vector<double> angles;  // length degree + 1, radians
    int degree = 0;              // number of signal-operator applications
    bool end_offset = false;     // +pi/2 applied to both terminal angles
    Parity parity = Parity::Even;
    bool antisymmetric = false;

    /// Angles with the declared end offsets folded in.
    std::vector<double> evaluation_angles() const;

    /// Largest |phi_j + phi_{m-j}| mod 2*pi over the stored list.
    double antisymmetry_defect() const;

    /// Structural consistency: length, parity field vs degree, declared
    /// antisymmetry within `tol`.  Throws std::invalid_argument on failure.
    void validate(double tol = 1e-12) const;
};

/// Builds a schedule from bare angles, inferring degree and parity and
/// measuring antisymmetry.  `antisymmetric` is set when the defect is
/// below `tol`.
PhaseSchedule make_schedule(std::vector<double> bare_angles, bool end_offset,
                            double tol = 1e-12);

/// The all-zero schedule of a given degree (realizes the Chebyshev
/// polynomial T_degree).
PhaseSchedule zero_schedule(int degree);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

// --- text format ------------------------------------------------------
//
// Line-oriented: header lines `degree=`, `parity=`, `end_offset=`,
// `antisymmetric=`, then one angle per line with >= 15 significant digits.

std::string to_phase_text(const PhaseSchedule& s);
PhaseSchedule parse_phase_text(const std::string& text);

void save_phase_file(const PhaseSchedule& s, const std::string& path);
PhaseSchedule load_phase_file(const std::string& path);

}  // namespace qsparith
