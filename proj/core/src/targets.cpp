#include "qsparith/targets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsparith {

namespace {
double checked_unit(double x, const char* who) {
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error(std::string(who) + ": argument outside [-1, 1]");
    return std::clamp(x, -1.0, 1.0);
}
}  // namespace

double p2a(double x) {
    x = checked_unit(x, "p2a");
    return 2.0 / M_PI * std::acos(x) - 1.0;
}

double a2p(double x) {
    x = checked_unit(x, "a2p");
    return std::sin(M_PI / 2.0 * x);
}

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

double step(double x, double delta_s) {
    if (delta_s <= 0.0) throw std::domain_error("step: delta_s must be positive");
    return std::abs(x) < delta_s ? -1.0 : 1.0;
}

double example_f(double x) { return std::sin(30.0 * x) * std::exp(-(1.0 + x)); }

double example_f_original(double x) { return -std::cos(15.0 * x) * std::exp(-x); }

double window_rotation(long long a, int n_qubits, const SubspaceWindow& w) {
    if (n_qubits < 1) throw std::domain_error("window: need at least one qubit");
    if (w.alpha < 1.0) throw std::domain_error("window: alpha must be >= 1");
    const double dim = std::ldexp(1.0, n_qubits);
    return 2.0 * M_PI * (static_cast<double>(a) / (w.alpha * dim) + w.delta / w.alpha);
}

double window_map(long long a, int n_qubits, const SubspaceWindow& w) {
    const double dim = std::ldexp(1.0, n_qubits);
    return 2.0 * (static_cast<double>(a) / (w.alpha * dim) + w.delta / w.alpha) - 1.0;
}

double window_signal(long long a, int n_qubits, const SubspaceWindow& w) {
    return std::cos(window_rotation(a, n_qubits, w) / 2.0);
}

TargetFunction target_p2a() {
    return {[](double x) { return p2a(x); }, -1.0, 1.0, TargetParity::Odd, "p2a"};
}

TargetFunction target_a2p() {
    return {[](double x) { return a2p(x); }, -1.0, 1.0, TargetParity::Odd, "a2p"};
}

TargetFunction target_sgn() {
    return {[](double x) { return sgn(x); }, -1.0, 1.0, TargetParity::Odd, "sgn"};
}

TargetFunction target_step(double delta_s) {
    return {[delta_s](double x) { return step(x, delta_s); }, -1.0, 1.0,
            TargetParity::Even, "step"};
}

TargetFunction target_example_f() {
    return {[](double x) { return example_f(x); }, -1.0, 1.0, TargetParity::None, "f"};
}

TargetFunction target_chebyshev(int n) {
    return {[n](double x) { return std::cos(n * std::acos(std::clamp(x, -1.0, 1.0))); },
            -1.0, 1.0, (n % 2 != 0) ? TargetParity::Odd : TargetParity::Even,
            "T" + std::to_string(n)};
}

TargetFunction target_identity() {
    return {[](double x) { return x; }, -1.0, 1.0, TargetParity::Odd, "identity"};
}

}  // namespace qsparith
