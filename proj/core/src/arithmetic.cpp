#include "qsparith/arithmetic.hpp"

#include "qsparith/golden_angles.hpp"
#include "qsparith/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qsparith {

namespace {

// Appends X gates flipping every zero bit of `value` over `width` qubits
// starting at `first` (MSB-first), so the pattern becomes all-ones.
void append_pattern_flips(Circuit& c, int first, int width, long long value) {
    for (int q = 0; q < width; ++q) {
        long long bit = 1LL << (width - 1 - q);
        if (!(value & bit)) c.append(Gate::x(first + q));
    }
}

std::vector<int> register_qubits(int first, int width) {
    std::vector<int> qs(width);
    for (int q = 0; q < width; ++q) qs[q] = first + q;
    return qs;
}

}  // namespace

Statevector apply_uf_permutation(const TruthTableFunction& f, Statevector state,
                                 int n_first, int f_first) {
    const int total = state.n_qubits();
    if (f_first != n_first + f.n)
        throw std::invalid_argument("apply_uf_permutation: F must follow N");
    const int below = total - (f_first + f.f);
    const std::uint64_t fdim = std::uint64_t{1} << f.f;
    const std::uint64_t below_dim = std::uint64_t{1} << below;
    const std::uint64_t ndim = std::uint64_t{1} << f.n;

    std::vector<cplx> out(state.dim(), cplx(0, 0));
    const auto& in = state.amplitudes();
    for (std::uint64_t x = 0; x < ndim; ++x) {
        const std::uint64_t add = static_cast<std::uint64_t>(f.reduced(static_cast<long long>(x)));
        for (std::uint64_t b = 0; b < fdim; ++b) {
            const std::uint64_t b2 = (b + add) % fdim;
            for (std::uint64_t r = 0; r < below_dim; ++r) {
                const std::uint64_t src = ((x << f.f) | b) << below | r;
                const std::uint64_t dst = ((x << f.f) | b2) << below | r;
                out[dst] = in[src];
            }
        }
    }
    state.amplitudes() = std::move(out);
    return state;
}

Circuit build_uf(const TruthTableFunction& f) {
    // Layout: N (0..n-1), F (n..n+f-1), flag B (n+f).  For every input
    // pattern x, an AND of the N register computed into B gates the phase
    // ladder that adds f(x) into the Fourier-transformed F register.
    Circuit c;
    c.n_qubits = f.n + f.f + 1;
    const int f_first = f.n;
    const int b_qubit = f.n + f.f;
    const long long fdim = 1LL << f.f;

    c.append(Gate::qft(f_first, f.f));
    for (long long x = 0; x < (1LL << f.n); ++x) {
        const long long add = f.reduced(x);
        if (add == 0) continue;
        append_pattern_flips(c, 0, f.n, x);
        c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
        for (int q = 0; q < f.f; ++q) {
            long long weight = (add << (f.f - 1 - q)) % fdim;
            if (weight == 0) continue;
            c.append(Gate::cphase(b_qubit, f_first + q,
                                  2.0 * M_PI * static_cast<double>(weight) /
                                      static_cast<double>(fdim)));
        }
        c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
        append_pattern_flips(c, 0, f.n, x);
    }
    c.append(Gate::qft_inv(f_first, f.f));
    return c;
}

Circuit build_vf(const TruthTableFunction& f, double normalizer) {
    if (normalizer == 0.0) normalizer = std::ldexp(1.0, f.f);
    if (normalizer <= 0.0) throw std::invalid_argument("build_vf: normalizer must be positive");

    // Linear truth tables f(x) = c * x (mod 2^F) admit the per-qubit phase
    // ladder; anything else goes through flagged phase injection.
    const long long dim = 1LL << f.n;
    const long long f0 = f.map(0);
    bool linear = f0 == 0;
    long long c1 = f.n >= 1 ? f.map(1) : 0;
    if (linear)
        for (long long x = 0; x < dim && linear; ++x)
            if (f.map(x) != c1 * x) linear = false;

    Circuit c;
    if (linear) {
        c.n_qubits = f.n;
        for (int q = 0; q < f.n; ++q) {
            double phase = 2.0 * M_PI * static_cast<double>(c1) *
                           std::ldexp(1.0, f.n - 1 - q) / normalizer;
            c.append(Gate::phase(q, phase));
        }
        return c;
    }

    c.n_qubits = f.n + 1;  // N + flag B
    const int b_qubit = f.n;
    for (long long x = 0; x < dim; ++x) {
        const double val = static_cast<double>(f.map(x));
        if (val == 0.0) continue;
        append_pattern_flips(c, 0, f.n, x);
        c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
        c.append(Gate::phase(b_qubit, 2.0 * M_PI * val / normalizer));
        c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
        append_pattern_flips(c, 0, f.n, x);
    }
    return c;
}

Circuit build_qft_adder(long long addend, int f) {
    Circuit c;
    c.n_qubits = f;
    c.append(Gate::qft(0, f));
    c.append(build_phase_adder(f, addend));
    c.append(Gate::qft_inv(0, f));
    return c;
}

long long qft_add(long long a, long long b, int f) {
    if (f < 1) throw std::invalid_argument("qft_add: need f >= 1");
    const long long dim = 1LL << f;
    if (a < 0 || a >= dim || b < 0 || b >= dim)
        throw std::invalid_argument("qft_add: inputs must lie in [0, 2^F)");
    Statevector s = Statevector::basis(f, static_cast<std::uint64_t>(b));
    s = apply(std::move(s), build_qft_adder(a, f));
    // probability-1 outcome
    std::uint64_t best = 0;
    double bp = -1.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        double p = std::norm(s.amplitude(i));
        if (p > bp) { bp = p; best = i; }
    }
    if (bp < 1.0 - 1e-9)
        throw std::runtime_error("qft_add: outcome was not deterministic");
    return static_cast<long long>(best);
}

bool adder_eigenphase_check(long long l, long long f_val, int f, double tol) {
    const long long dim = 1LL << f;
    if (l < 0 || l >= dim) throw std::invalid_argument("adder_eigenphase_check: l");
    Statevector in = Statevector::basis(f, static_cast<std::uint64_t>(l));
    Circuit qft;
    qft.n_qubits = f;
    qft.append(Gate::qft(0, f));
    in = apply(std::move(in), qft);

    Statevector out = apply(in, build_qft_adder(f_val, f));

    const double expected = -2.0 * M_PI * static_cast<double>(l) *
                            static_cast<double>(f_val) / static_cast<double>(dim);
    const cplx phase = std::polar(1.0, expected);
    for (std::uint64_t i = 0; i < in.dim(); ++i)
        if (std::abs(out.amplitude(i) - phase * in.amplitude(i)) > tol) return false;
    return true;
}

QpeResult qpe_of_vf(const TruthTableFunction& f, long long x, long long b) {
    const int total = f.n + f.f + 1;  // N + F + flag B
    const int b_qubit = f.n + f.f;
    const long long fdim = 1LL << f.f;
    Statevector in = Statevector::basis(
        total, (static_cast<std::uint64_t>(x) << (f.f + 1)) |
                   (static_cast<std::uint64_t>(b) << 1));
    auto power = [&](Circuit& c, int k, int control) {
        // controlled (V_f)^(2^k): one flagged phase per input pattern
        for (long long xx = 0; xx < (1LL << f.n); ++xx) {
            const long long val = f.reduced(xx);
            if (val == 0) continue;
            const double angle = 2.0 * M_PI * static_cast<double>(val) *
                                 std::ldexp(1.0, k) / static_cast<double>(fdim);
            append_pattern_flips(c, 0, f.n, xx);
            c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
            c.append(Gate::cphase(control, b_qubit, angle));
            c.append(Gate::mcx(register_qubits(0, f.n), b_qubit));
            append_pattern_flips(c, 0, f.n, xx);
        }
    };
    return qpe_read(std::move(in), power, f.n, f.f);
}

Circuit build_projector_oracle(const TruthTableFunction& f, long long y, OracleKind kind) {
    const long long fdim = 1LL << f.f;
    y = ((y % fdim) + fdim) % fdim;
    Circuit uf = build_uf(f);          // N + F + B(adder flag)
    const int f_first = f.n;
    const int adder_flag = f.n + f.f;

    Circuit c;
    // Projector layout: N + F + adder flag + result flag B.
    c.n_qubits = uf.n_qubits + (kind == OracleKind::Projector ? 1 : 0);
    Circuit uf_sized = c;  // same width, for re-appending
    uf_sized.gates = uf.gates;
    c.append(uf_sized);

    append_pattern_flips(c, f_first, f.f, y);
    if (kind == OracleKind::Projector) {
        c.append(Gate::mcx(register_qubits(f_first, f.f), uf.n_qubits));
    } else {
        std::vector<int> controls = register_qubits(f_first, f.f - 1);
        c.append(Gate::mcz(controls, f_first + f.f - 1));
    }
    append_pattern_flips(c, f_first, f.f, y);

    // Uncompute U_f: the adder circuit inverted is the same network with
    // negated addends; rebuild with -f.
    TruthTableFunction neg{f.n, f.f, [f](long long x) { return -f.map(x); }};
    Circuit ufdag = build_uf(neg);
    Circuit ufdag_sized = Circuit{c.n_qubits, ufdag.gates};
    c.append(ufdag_sized);
    (void)adder_flag;
    return c;
}

PhaseSchedule qso_merged_schedule(const PhaseSchedule& f_phases, const QsoOptions& opts) {
    const PhaseSchedule& p2a_sched =
        opts.has_p2a_default ? golden("p2a_2x10").schedule : opts.p2a_schedule;
    PhaseSchedule merged = merge_phases(f_phases, p2a_sched);  // f after p2a
    if (opts.filter != FilterKind::None)
        merged = merge_phases(opts.filter_schedule, merged);   // filter last
    return merged;
}

Circuit build_qso(const PhaseSchedule& f_phases, int n, const SubspaceWindow& w,
                  const QsoOptions& opts) {
    return build_qsp_over_kickback(qso_merged_schedule(f_phases, opts), n, w);
}

QuadrantReading quadrant_translate(long long f_bits, int f) {
    if (f < 3)
        throw std::invalid_argument("quadrant_translate: need F >= 3 (two MSBs + data)");
    const long long dim = 1LL << f;
    if (f_bits < 0 || f_bits >= dim)
        throw std::invalid_argument("quadrant_translate: value out of range");
    QuadrantReading r;
    r.msb_pair = static_cast<int>(f_bits >> (f - 2));
    const long long low_mask = (1LL << (f - 2)) - 1;
    r.raw_bits = f_bits & low_mask;
    switch (r.msb_pair) {
        case 0b11: r.sign = +1; r.magnitude = r.raw_bits; break;
        case 0b01: r.sign = -1; r.magnitude = r.raw_bits; break;
        case 0b00: r.sign = +1; r.magnitude = low_mask - r.raw_bits; break;
        case 0b10: r.sign = -1; r.magnitude = low_mask - r.raw_bits; break;
    }
    r.translated = r.sign * r.magnitude;
    return r;
}

PhaseSchedule qse_merged_schedule(const PhaseSchedule& p2a_sched,
                                  const PhaseSchedule& f_sched,
                                  const PhaseSchedule& a2p_sched) {
    return merge_phases(a2p_sched, merge_phases(f_sched, p2a_sched));
}

Circuit build_qse_circuit(const PhaseSchedule& merged, int n, int f,
                          const SubspaceWindow& w) {
    Circuit c;
    c.n_qubits = n + f + 1;  // N, F, ancilla A
    const int f_first = n;
    const int a_qubit = n + f;
    c.append(Gate::qft(f_first, f));
    for (int k = 0; k < f; ++k) {
        const int control = f_first + f - 1 - k;
        for (long long copy = 0; copy < (1LL << k); ++copy)
            c = append_controlled_qsp(std::move(c), merged, 0, n, a_qubit, control, w);
    }
    c.append(Gate::qft_inv(f_first, f));
    return c;
}

QseResult run_qse(const PhaseSchedule& p2a_sched, const PhaseSchedule& f_sched,
                  const PhaseSchedule& a2p_sched, int n, int f,
                  const SubspaceWindow& w) {
    if (f < 3) throw std::invalid_argument("run_qse: need F >= 3");
    if (n < 1 || n + f + 1 > 24) throw std::invalid_argument("run_qse: size");

    QseResult res;
    res.merged = qse_merged_schedule(p2a_sched, f_sched, a2p_sched);
    Circuit circuit = build_qse_circuit(res.merged, n, f, w);

    // One pass over the uniform superposition of N covers every basis
    // input: the circuit never moves the N register, so each input's
    // conditional F distribution sits in its own sector.
    Statevector in = uniform_over_register(n + f + 1, 0, n);
    Statevector out = apply(std::move(in), circuit);

    const long long ndim = 1LL << n;
    const long long fdim = 1LL << f;
    res.distribution.assign(ndim, std::vector<double>(fdim, 0.0));
    for (std::uint64_t i = 0; i < out.dim(); ++i) {
        const double p = std::norm(out.amplitude(i));
        const long long fy = static_cast<long long>((i >> 1) & (fdim - 1));
        const long long a = static_cast<long long>(i >> (1 + f));
        res.distribution[a][fy] += p;
    }

    for (auto& dist : res.distribution)
        for (double& p : dist) p *= static_cast<double>(ndim);  // conditional on N=a

    res.rows.reserve(ndim);
    for (long long a = 0; a < ndim; ++a) {
        QseRow row;
        row.input = a;
        row.window_x = window_map(a, n, w);
        row.p_classical = qsp_response(res.merged, window_signal(a, n, w));
        row.phase = phase_from_amplitude(row.p_classical);

        const std::vector<double>& dist = res.distribution[a];
        double top = 0.0;
        for (long long y = 0; y < fdim; ++y) top = std::max(top, dist[y]);
        long long best = 0;
        while (dist[best] < top - 1e-12) ++best;  // numeric ties: lowest bin
        row.argmax_bits = best;
        row.reading = quadrant_translate(best, f);

        // Classical reference: nearest bins to the +-phase pair, with the
        // same quadrant translation.  The circuit may land on either member
        // of the pair; quantization near a bin boundary may shift by one.
        const double scaled = row.phase * static_cast<double>(fdim);
        row.oracle_bin = static_cast<long long>(std::llround(scaled)) % fdim;
        row.oracle_translated = quadrant_translate(row.oracle_bin, f).translated;
        const long long mirror = (fdim - row.oracle_bin) % fdim;
        long long diff_direct = std::llabs(best - row.oracle_bin);
        long long diff_mirror = std::llabs(best - mirror);
        diff_direct = std::min(diff_direct, fdim - diff_direct);
        diff_mirror = std::min(diff_mirror, fdim - diff_mirror);
        row.matches_oracle = std::min(diff_direct, diff_mirror) <= 1;
        res.rows.push_back(row);
    }
    return res;
}

}  // namespace qsparith
