#include "qsparith/angle_finder.hpp"

#include "qsparith/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qsparith {

namespace {

// Packs the free half of an antisymmetric schedule.  Odd degree: angles
// 0..(m-1)/2 are free and mirrored with negation; even degree: the middle
// angle is pinned to zero.
std::vector<double> unpack_antisymmetric(const std::vector<double>& p, int m) {
    std::vector<double> a(m + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        a[j] = p[j];
        a[m - j] = -p[j];
    }
    return a;
}

int free_count(const OptimizationProblem& prob) {
    if (prob.constraint == ScheduleConstraint::Free) return prob.degree + 1;
    return (prob.degree + 1) / 2;
}

PhaseSchedule to_schedule(const std::vector<double>& p, const OptimizationProblem& prob) {
    std::vector<double> angles = prob.constraint == ScheduleConstraint::Antisymmetric
                                     ? unpack_antisymmetric(p, prob.degree)
                                     : p;
    return make_schedule(std::move(angles), prob.end_offset, 1e-9);
}

double response_for_loss(const PhaseSchedule& s, double x, LossKind kind) {
    if (kind == LossKind::Amplitude) return qsp_response(s, x);
    return std::arg(qsp_evaluate(s, x).u00);
}

double grid_loss(const std::vector<double>& p, const OptimizationProblem& prob,
                 const std::vector<double>& grid, double smooth_eps) {
    PhaseSchedule s = to_schedule(p, prob);
    double total = 0.0;
    for (double x : grid) {
        double e = response_for_loss(s, x, prob.loss_kind) - prob.target.eval(x);
        total += smooth_eps > 0.0 ? std::sqrt(e * e + smooth_eps * smooth_eps)
                                  : std::abs(e);
    }
    return total;
}

// Dense BFGS with Armijo backtracking; the loss is smooth in the angles
// and the dimension stays small (<= ~25 free angles).
double bfgs(std::vector<double>& p, const OptimizationProblem& prob,
            const std::vector<double>& grid, int max_iters) {
    const double eps = 1e-9;  // smoothing inside gradient steps
    const int n = static_cast<int>(p.size());
    auto f = [&](const std::vector<double>& q) { return grid_loss(q, prob, grid, eps); };
    auto grad = [&](const std::vector<double>& q, std::vector<double>& g) {
        const double h = 1e-6;
        std::vector<double> qq = q;
        for (int i = 0; i < n; ++i) {
            qq[i] = q[i] + h;
            double fp = f(qq);
            qq[i] = q[i] - h;
            double fm = f(qq);
            qq[i] = q[i];
            g[i] = (fp - fm) / (2.0 * h);
        }
    };

    std::vector<double> hinv(n * n, 0.0);
    for (int i = 0; i < n; ++i) hinv[i * n + i] = 1.0;

    double fx = f(p);
    std::vector<double> g(n), gnew(n), d(n), pnew(n), s(n), y(n), hy(n);
    grad(p, g);
    for (int it = 0; it < max_iters; ++it) {
        double gnorm = 0.0;
        for (double v : g) gnorm = std::max(gnorm, std::abs(v));
        if (gnorm < 1e-10) break;

        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += hinv[i * n + j] * g[j];
            d[i] = -acc;
        }
        double dg = 0.0;
        for (int i = 0; i < n; ++i) dg += d[i] * g[i];
        if (dg >= 0.0) {  // not a descent direction: reset to steepest descent
            for (int i = 0; i < n; ++i) d[i] = -g[i];
            dg = 0.0;
            for (int i = 0; i < n; ++i) dg += d[i] * g[i];
            std::fill(hinv.begin(), hinv.end(), 0.0);
            for (int i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
        }

        double t = 1.0;
        double fnew = fx;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (int i = 0; i < n; ++i) pnew[i] = p[i] + t * d[i];
            fnew = f(pnew);
            if (fnew <= fx + 1e-4 * t * dg) { accepted = true; break; }
            t *= 0.5;
        }
        if (!accepted) break;

        grad(pnew, gnew);
        double sy = 0.0;
        for (int i = 0; i < n; ++i) {
            s[i] = pnew[i] - p[i];
            y[i] = gnew[i] - g[i];
            sy += s[i] * y[i];
        }
        p = pnew;
        fx = fnew;
        g = gnew;
        if (sy > 1e-14) {  // BFGS inverse update
            double yhy = 0.0;
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += hinv[i * n + j] * y[j];
                hy[i] = acc;
            }
            for (int i = 0; i < n; ++i) yhy += y[i] * hy[i];
            const double c1 = (sy + yhy) / (sy * sy);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    hinv[i * n + j] += c1 * s[i] * s[j] -
                                       (hy[i] * s[j] + s[i] * hy[j]) / sy;
        }
    }
    return grid_loss(p, prob, grid, 0.0);  // exact L1 of the final point
}

}  // namespace

void OptimizationProblem::validate() const {
    if (degree < 1) throw std::invalid_argument("optimize: degree must be >= 1");
    if (grid_size <= degree)
        throw std::invalid_argument("optimize: grid size d must exceed the degree");
    if (!target.eval) throw std::invalid_argument("optimize: target has no evaluator");
}

std::vector<double> make_grid(double lo, double hi, int d,
                              const std::vector<std::pair<double, double>>& excluded) {
    std::vector<double> g;
    g.reserve(d + 1);
    for (int j = 0; j <= d; ++j) {
        double x = lo + (hi - lo) * static_cast<double>(j) / d;
        bool drop = false;
        for (const auto& [a, b] : excluded)
            if (x >= a && x <= b) { drop = true; break; }
        if (!drop) g.push_back(x);
    }
    return g;
}

double loss(const PhaseSchedule& phases, const OptimizationProblem& prob) {
    prob.validate();
    if (phases.degree != prob.degree)
        throw std::invalid_argument("loss: schedule degree does not match problem");
    std::vector<double> grid =
        make_grid(prob.target.lo, prob.target.hi, prob.grid_size, prob.excluded);
    double total = 0.0;
    for (double x : grid)
        total += std::abs(response_for_loss(phases, x, prob.loss_kind) -
                          prob.target.eval(x));
    return total;
}

OptimizeResult optimize(const OptimizationProblem& prob, int restarts, double threshold) {
    prob.validate();
    if (restarts < 1) throw std::invalid_argument("optimize: restarts must be >= 1");

    const std::vector<double> grid =
        make_grid(prob.target.lo, prob.target.hi, prob.grid_size, prob.excluded);
    const int k = free_count(prob);

    std::mt19937_64 rng(prob.seed);
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);

    OptimizeResult best;
    best.achieved_loss = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> p(k);
        for (double& v : p) v = uni(rng);
        double l = bfgs(p, prob, grid, 300);
        if (l < best.achieved_loss) {
            // the processors are exactly 2 pi periodic, so wrapping the free
            // angles changes nothing but keeps the stored list canonical
            for (double& v : p) v = wrap_angle(v);
            best.achieved_loss = l;
            best.schedule = to_schedule(p, prob);
            best.best_restart = r;
        }
    }

    if (threshold > 0.0 && best.achieved_loss > threshold) best.converged = false;
    const Parity realized = (prob.degree % 2 != 0) ? Parity::Odd : Parity::Even;
    if ((prob.target.parity == TargetParity::Odd && realized == Parity::Even) ||
        (prob.target.parity == TargetParity::Even && realized == Parity::Odd))
        best.note = "parity mismatch: degree-" + std::to_string(prob.degree) +
                    " schedule realizes a polynomial of the opposite parity";
    if (prob.loss_kind == LossKind::Phase)
        best.note += std::string(best.note.empty() ? "" : "; ") +
                     "phase-mode loss: embedding constraints for direct phase "
                     "targets are not established, certify in amplitude mode";
    return best;
}

CertifyReport certify(const PhaseSchedule& phases, const TargetFunction& target,
                      const std::vector<double>& grid) {
    CertifyReport rep;
    rep.rows.reserve(grid.size());
    double total = 0.0;
    for (double x : grid) {
        CertifyRow row;
        row.x = x;
        row.response = qsp_response(phases, x);
        row.target = target.eval(x);
        row.error = std::abs(row.response - row.target);
        total += row.error;
        rep.max_err = std::max(rep.max_err, row.error);
        rep.rows.push_back(row);
    }
    rep.mean_err = grid.empty() ? 0.0 : total / static_cast<double>(grid.size());
    return rep;
}

}  // namespace qsparith
