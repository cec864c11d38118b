#pragma once

#include "qsparith/phase_schedule.hpp"
#include "qsparith/targets.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qsparith {

enum class LossKind { Amplitude, Phase };
enum class ScheduleConstraint { Antisymmetric, Free };

/// Classical phase-angle search problem: fit the QSP response of a
/// degree-m schedule to a target over a d+1 point grid.
struct OptimizationProblem {
    TargetFunction target;
    int degree = 1;        // m_phi
    int grid_size = 100;   // d; must exceed degree
    LossKind loss_kind = LossKind::Amplitude;
    ScheduleConstraint constraint = ScheduleConstraint::Antisymmetric;
    std::uint64_t seed = 1;
    bool end_offset = false;
    /// x-intervals dropped from the grid (transition bands of sgn/step).
    std::vector<std::pair<double, double>> excluded;

    void validate() const;
};

/// L(phi) = sum_j |response(x_j) - f(x_j)| with x_j = lo + (hi-lo) j/d,
/// excluded intervals skipped.  Phase kind uses Arg<0|U|0> instead of Re.
double loss(const PhaseSchedule& phases, const OptimizationProblem& prob);

struct OptimizeResult {
    PhaseSchedule schedule;
    double achieved_loss = 0.0;
    int best_restart = 0;
    bool converged = true;   // false when above the caller's threshold
    std::string note;        // parity-mismatch or phase-mode caveats
};

/// Quasi-Newton local search over the free half of the angles with
/// uniform-random restarts in [-pi, pi].  Deterministic for a fixed seed;
/// best loss is non-increasing in the restart count.  `threshold`, when
/// positive, marks the result non-converged if the loss stays above it.
OptimizeResult optimize(const OptimizationProblem& prob, int restarts,
                        double threshold = -1.0);

struct CertifyRow {
    double x = 0.0;
    double response = 0.0;
    double target = 0.0;
    double error = 0.0;
};

struct CertifyReport {
    double max_err = 0.0;
    double mean_err = 0.0;
    std::vector<CertifyRow> rows;
};

/// Exhaustive residual table of a schedule against a target over a grid.
CertifyReport certify(const PhaseSchedule& phases, const TargetFunction& target,
                      const std::vector<double>& grid);

/// Uniform grid of d+1 points over [lo, hi] minus excluded intervals.
std::vector<double> make_grid(double lo, double hi, int d,
                              const std::vector<std::pair<double, double>>& excluded = {});

}  // namespace qsparith
