#include "qsparith/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsparith {

namespace {

constexpr double kDomainSlack = 1e-12;

double checked_signal(double a) {
    if (std::abs(a) > 1.0 + kDomainSlack)
        throw std::domain_error("signal value outside [-1, 1]");
    return std::clamp(a, -1.0, 1.0);
}

const Unitary2 kSGate{1.0, 0.0, 0.0, cplx(0.0, 1.0)};          // diag(1, i)
const Unitary2 kSDagGate{1.0, 0.0, 0.0, cplx(0.0, -1.0)};      // diag(1, -i)
const Unitary2 kHGate{cplx(M_SQRT1_2, 0), cplx(M_SQRT1_2, 0),
                      cplx(M_SQRT1_2, 0), cplx(-M_SQRT1_2, 0)};

}  // namespace

Unitary2 signal_operator(double a, const QspConvention& conv) {
    a = checked_signal(a);
    const double root = std::sqrt(std::max(0.0, 1.0 - a * a));
    switch (conv.kind) {
        case QspConvention::Wx:
            return {a, cplx(0, root), cplx(0, root), a};
        case QspConvention::Wy:
            // R_Y(2 acos a): the Block-Encoding shape [[a, -r], [r, a]].
            return {a, -root, root, a};
        case QspConvention::Wz:
            return {std::polar(1.0, std::acos(a)), 0.0, 0.0,
                    std::polar(1.0, -std::acos(a))};
        case QspConvention::Reflection:
            // W_Y * Z, a reflection with determinant -1.
            return {a, root, root, -a};
        case QspConvention::WxTwisted: {
            cplx up = std::polar(1.0, conv.twist);
            return {a, cplx(0, root) * up, cplx(0, root) * std::conj(up), a};
        }
    }
    throw std::logic_error("unreachable");
}

Unitary2 signal_processor(double phi, const QspConvention& conv) {
    switch (conv.kind) {
        case QspConvention::Wx:
        case QspConvention::Wy:
        case QspConvention::WxTwisted:
            return Unitary2::rz_exp(phi);
        case QspConvention::Wz: {
            // exp(i*phi*X)
            double c = std::cos(phi), s = std::sin(phi);
            return {c, cplx(0, s), cplx(0, s), c};
        }
        case QspConvention::Reflection: {
            Unitary2 z{1.0, 0.0, 0.0, -1.0};
            return z * Unitary2::rz_exp(phi);
        }
    }
    throw std::logic_error("unreachable");
}

Unitary2 basis_change_a(const QspConvention& conv) {
    switch (conv.kind) {
        case QspConvention::Wx: return Unitary2::identity();
        case QspConvention::Wy: return kSGate;
        case QspConvention::Wz: return kHGate;
        case QspConvention::Reflection: return kSDagGate;
        case QspConvention::WxTwisted: return Unitary2::rz_exp(conv.twist / 2.0);
    }
    throw std::logic_error("unreachable");
}

Unitary2 basis_change_b(const QspConvention& conv) {
    switch (conv.kind) {
        case QspConvention::Wx: return Unitary2::identity();
        case QspConvention::Wy: return kSDagGate;
        case QspConvention::Wz: return kHGate;
        case QspConvention::Reflection: return kSDagGate;
        case QspConvention::WxTwisted: return Unitary2::rz_exp(-conv.twist / 2.0);
    }
    throw std::logic_error("unreachable");
}

Unitary2 qsp_evaluate_operator(const PhaseSchedule& phases, const Unitary2& signal_op,
                               const QspConvention& conv) {
    const std::vector<double> phis = phases.evaluation_angles();
    if (phis.empty()) throw std::invalid_argument("qsp: empty schedule");
    Unitary2 u = signal_processor(phis[0], conv);
    for (std::size_t j = 1; j < phis.size(); ++j)
        u = signal_processor(phis[j], conv) * (signal_op * u);
    return u;
}

Unitary2 qsp_evaluate(const PhaseSchedule& phases, double a, const QspConvention& conv) {
    return qsp_evaluate_operator(phases, signal_operator(a, conv), conv);
}

double qsp_response(const PhaseSchedule& phases, double a, const QspConvention& conv) {
    Unitary2 u = qsp_evaluate(phases, a, conv);
    Unitary2 normalized = basis_change_a(conv).dagger() * u * basis_change_b(conv).dagger();
    return normalized.u00.real();
}

PhaseSchedule merge_phases(const PhaseSchedule& outer, const PhaseSchedule& inner) {
    if (!inner.antisymmetric || !outer.antisymmetric)
        throw std::invalid_argument("merge_phases: both schedules must be antisymmetric");
    const std::vector<double> in = inner.evaluation_angles();
    const std::vector<double> out = outer.evaluation_angles();
    const int mi = inner.degree;
    const int mo = outer.degree;
    if (mi < 1 || mo < 1)
        throw std::invalid_argument("merge_phases: degree-0 schedule cannot be merged");

    // merge[phi_in, phi_out] =
    //   (phi_i0 + phi_o0, phi_i[1, mi-1], phi_o1 + (phi_i,mi + phi_i0), ...,
    //    phi_i[1, mi-1], phi_i,mi + phi_o,mo).
    // For offset-free antisymmetric inner lists phi_i0 + phi_i,mi = 0 and the
    // joints reduce to the outer angles; declared end offsets contribute pi.
    std::vector<double> merged;
    merged.reserve(static_cast<std::size_t>(mi) * mo + 1);
    merged.push_back(in[0] + out[0]);
    for (int k = 1; k <= mo; ++k) {
        for (int j = 1; j <= mi - 1; ++j) merged.push_back(in[j]);
        if (k < mo)
            merged.push_back(in[mi] + out[k] + in[0]);
        else
            merged.push_back(in[mi] + out[k]);
    }

    const bool res_offset = inner.end_offset != outer.end_offset;
    if (res_offset) {
        merged.front() -= M_PI / 2.0;
        merged.back() -= M_PI / 2.0;
    }
    for (double& a : merged) a = wrap_angle(a);
    PhaseSchedule s = make_schedule(std::move(merged), res_offset, 1e-9);
    if (!s.antisymmetric)
        throw std::logic_error("merge_phases: merged schedule lost antisymmetry");
    return s;
}

EmbedReport validate_embeddable(const PhaseSchedule& phases, double tol) {
    EmbedReport rep;
    auto add = [&rep](const std::string& name, double measured, double expected,
                      double tol_) {
        EmbedCheck c;
        c.name = name;
        c.measured = measured;
        c.expected = expected;
        c.residual = std::abs(measured - expected);
        c.pass = c.residual <= tol_;
        rep.all_pass = rep.all_pass && c.pass;
        rep.checks.push_back(c);
    };

    add("antisymmetry", phases.antisymmetry_defect(), 0.0, tol);

    // Structural boundary values of an antisymmetric schedule:
    //   P(1)  = -1 if end offsets else +1
    //   P(-1) = (-1)^m * P(1)
    //   P(0)  = 0 for odd m, otherwise +-1 with sign (-1)^(m/2) flipped by offsets
    const int m = phases.degree;
    const double p1 = phases.end_offset ? -1.0 : 1.0;
    const double pm1 = (m % 2 != 0) ? -p1 : p1;
    add("P(+1)", qsp_response(phases, 1.0), p1, tol);
    add("P(-1)", qsp_response(phases, -1.0), pm1, tol);
    if (m % 2 != 0) {
        add("P(0)", qsp_response(phases, 0.0), 0.0, tol);
    } else {
        double p0 = ((m / 2) % 2 == 0 ? 1.0 : -1.0) * (phases.end_offset ? -1.0 : 1.0);
        add("P(0)", qsp_response(phases, 0.0), p0, tol);
    }
    return rep;
}

double phase_from_amplitude(double p) {
    if (std::abs(p) > 1.0 + kDomainSlack)
        throw std::domain_error("phase_from_amplitude: |P| > 1");
    p = std::clamp(p, -1.0, 1.0);
    return std::acos(p) / (2.0 * M_PI);
}

bool grover_square_check(double a, double phi, double tol) {
    Unitary2 u = signal_operator(a, QspConvention::wx_twisted(phi));
    Unitary2 s0{-1.0, 0.0, 0.0, 1.0};  // I - 2|0><0|
    Unitary2 lhs = u * s0 * u.dagger() * s0;
    Unitary2 rhs = u * u;
    return lhs.distance(rhs) <= tol;
}

}  // namespace qsparith
