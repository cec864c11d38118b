// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with its measured runtime and budget.  Exit code
// is the number of failed criteria.
//
//   acceptance             runs criteria 1-13 (criterion 11 in its reduced form)
//   acceptance --qse-full  runs only the full-schedule variant of criterion 11

#include "qsparith/angle_finder.hpp"
#include "qsparith/arithmetic.hpp"
#include "qsparith/builders.hpp"
#include "qsparith/golden_angles.hpp"
#include "qsparith/qsp.hpp"
#include "qsparith/resources.hpp"
#include "qsparith/statevector.hpp"
#include "qsparith/targets.hpp"

#include "golden_fixtures.hpp"
#include "support/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace qsparith;

namespace {

int g_failures = 0;

void run_criterion(int number, const char* name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d  %-22s (%.2fs < %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name, secs, budget_seconds, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<long double> oracle_angles(const PhaseSchedule& s) {
    return oracle::eval_angles(s.angles, s.end_offset);
}

long double oracle_target(const std::string& family, long double x) {
    if (family == "p2a") return oracle::p2a(x);
    if (family == "a2p") return oracle::a2p(x);
    return oracle::sgn(x);
}

// ---- criterion bodies -------------------------------------------------

bool golden_angles(std::string& detail) {
    for (const GoldenEntry* e : golden_function_entries()) {
        auto eval = oracle_angles(e->schedule);
        double max_err = 0.0;
        for (int j = 0; j <= 1000; ++j) {
            double x = -1.0 + 2.0 * j / 1000.0;
            double lib = qsp_response(e->schedule, x);
            long double ref = oracle::response(eval, x);
            if (std::abs(lib - static_cast<double>(ref)) > 1e-9) {
                detail = e->name + " drifts from the oracle at x=" + std::to_string(x);
                return false;
            }
            max_err = std::max(max_err,
                               std::abs(lib - static_cast<double>(
                                                  oracle_target(e->family, x))));
        }
        bool found = false;
        for (const auto& fx : fixtures::kGoldenResiduals) {
            if (e->name != fx.name) continue;
            found = true;
            if (std::abs(max_err - fx.max_err) > 1e-9) {
                detail = e->name + " residual " + std::to_string(max_err) +
                         " != fixture " + std::to_string(fx.max_err);
                return false;
            }
        }
        if (!found) {
            detail = "no fixture for " + e->name;
            return false;
        }
    }
    detail = "9 schedules, 1001-point oracle agreement and frozen residuals";
    return true;
}

bool function_identities(std::string&) {
    for (int j = 0; j <= 1000; ++j) {
        double x = -1.0 + 2.0 * j / 1000.0;
        if (std::abs(a2p(p2a(x)) + x) > 1e-12) return false;
        if (std::abs(p2a(a2p(x)) + x) > 1e-12) return false;
        if (std::abs(phase_from_amplitude(a2p(x)) - (1.0 - x) / 4.0) > 1e-12)
            return false;
    }
    return true;
}

bool chebyshev_law(std::string&) {
    for (int m = 0; m <= 32; ++m) {
        PhaseSchedule z = zero_schedule(m);
        for (int j = 0; j <= 100; ++j) {
            double a = -1.0 + 2.0 * j / 100.0;
            if (std::abs(qsp_response(z, a) - std::cos(m * std::acos(a))) > 1e-9)
                return false;
        }
    }
    return true;
}

bool merge_law(std::string& detail) {
    const PhaseSchedule set[] = {golden("p2a_2x4").schedule, golden("a2p_2x3").schedule,
                                 golden("sgn_2x4").schedule};
    for (const PhaseSchedule& outer : set) {
        for (const PhaseSchedule& inner : set) {
            PhaseSchedule merged = merge_phases(outer, inner);
            if (merged.degree != outer.degree * inner.degree) {
                detail = "merged degree mismatch";
                return false;
            }
            for (int j = 0; j <= 100; ++j) {
                double a = -1.0 + 2.0 * j / 100.0;
                Unitary2 nested = qsp_evaluate_operator(outer, qsp_evaluate(inner, a));
                if (qsp_evaluate(merged, a).distance(nested) > 1e-9) {
                    detail = "merged != nested at a=" + std::to_string(a);
                    return false;
                }
            }
        }
    }
    // the trivial outer (0, 0) is the identity merge
    const PhaseSchedule& inner = golden("p2a_2x4").schedule;
    PhaseSchedule merged = merge_phases(zero_schedule(1), inner);
    for (std::size_t j = 0; j < inner.angles.size(); ++j)
        if (std::abs(merged.angles[j] - inner.angles[j]) > 1e-12) {
            detail = "identity merge changed the list";
            return false;
        }
    detail = "9 ordered pairs plus the identity merge";
    return true;
}

bool embedding_closure(std::string&) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), up(-M_PI, M_PI);
    for (int i = 0; i < 100; ++i) {
        int degree = 1 + static_cast<int>(rng() % 14);
        std::vector<double> angles(degree + 1, 0.0);
        for (int j = 0; j < (degree + 1) / 2; ++j) {
            angles[j] = up(rng);
            angles[degree - j] = -angles[j];
        }
        PhaseSchedule s = make_schedule(std::move(angles), rng() % 2 == 0);
        Unitary2 u = qsp_evaluate_operator(
            s, signal_operator(ua(rng), QspConvention::wx_twisted(up(rng))));
        double p = u.u00.real();
        double off = std::sqrt(std::max(0.0, 1.0 - p * p));
        if (std::abs(u.u00.imag()) > 1e-9 || std::abs(u.u11.imag()) > 1e-9 ||
            std::abs(u.u00.real() - u.u11.real()) > 1e-9 ||
            std::abs(std::abs(u.u01) - off) > 1e-9 ||
            std::abs(std::abs(u.u10) - off) > 1e-9)
            return false;
    }
    return true;
}

bool qft_adder(std::string& detail) {
    for (long long a = 0; a < 16; ++a)
        for (long long b = 0; b < 16; ++b)
            if (qft_add(a, b, 4) != ((a + b) & 15)) {
                detail = "wrong sum at " + std::to_string(a) + "+" + std::to_string(b);
                return false;
            }
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        long long x = static_cast<long long>(rng() % 16);
        long long y = static_cast<long long>(rng() % 16);
        if (x == y) y = (y + 1) & 15;
        long long c = static_cast<long long>(rng() % 16);
        double phase = 2.0 * M_PI * static_cast<double>(rng() % 360) / 360.0;
        Statevector s(4);
        s.set_amplitude(0, 0.0);
        s.set_amplitude(x, cplx(0.6, 0.0));
        s.set_amplitude(y, std::polar(0.8, phase));
        Statevector out = apply(std::move(s), build_qft_adder(c, 4));
        if (std::abs(out.amplitude((x + c) & 15) - cplx(0.6, 0.0)) > 1e-10 ||
            std::abs(out.amplitude((y + c) & 15) - std::polar(0.8, phase)) > 1e-10) {
            detail = "superposition not carried linearly";
            return false;
        }
    }
    detail = "256 exhaustive pairs, 20 superpositions";
    return true;
}

bool uf_equivalence(std::string& detail) {
    struct Case { const char* name; TruthTableFunction f; };
    const Case cases[] = {
        {"x", {4, 4, [](long long x) { return x; }}},
        {"2x+1", {4, 4, [](long long x) { return 2 * x + 1; }}},
        {"x^2", {4, 4, [](long long x) { return x * x; }}},
    };
    for (const Case& c : cases) {
        for (long long x = 0; x < 16; ++x) {
            for (long long b = 0; b < 16; ++b) {
                QpeResult res = qpe_of_vf(c.f, x, b);
                long long expect = (b + c.f.reduced(x)) & 15;
                if (std::abs(res.distribution[expect] - 1.0) > 1e-9) {
                    detail = std::string(c.name) + " misreads x=" + std::to_string(x) +
                             " b=" + std::to_string(b);
                    return false;
                }
                std::uint64_t idx = (static_cast<std::uint64_t>(x) << 5) |
                                    (static_cast<std::uint64_t>(expect) << 1);
                if (std::abs(std::abs(res.state.amplitude(idx)) - 1.0) > 1e-9) {
                    detail = "permutation broke the basis map";
                    return false;
                }
            }
        }
    }
    detail = "f in {x, 2x+1, x^2} at N=F=4, 256 inputs each";
    return true;
}

bool adder_eigenphases(std::string&) {
    for (long long l = 0; l < 8; ++l)
        for (long long fv = 0; fv < 8; ++fv)
            if (!adder_eigenphase_check(l, fv, 3)) return false;
    return true;
}

bool block_encoding_profile(std::string& detail) {
    const int n = 10;
    SubspaceWindow w{0.0, 2.0};
    PhaseSchedule merged =
        merge_phases(golden("f_2x22").schedule, golden("p2a_2x10").schedule);
    Circuit qso = build_qsp_over_kickback(merged, n, w);
    Statevector in = uniform_over_register(n + 1, 0, n);
    std::vector<double> vals = hadamard_test(qso, in, n, n);

    auto eval = oracle_angles(merged);
    const double scale = std::ldexp(1.0, n);
    double peak = 0.0;
    for (long long a = 0; a < (1LL << n); ++a) {
        long double ref = oracle::response(eval, window_signal(a, n, w));
        if (std::abs(vals[a] * scale - static_cast<double>(ref)) > 1e-9) {
            detail = "circuit/oracle mismatch at a=" + std::to_string(a);
            return false;
        }
        peak = std::max(peak, std::abs(vals[a]));
    }
    const double unit = 1.0 / scale;
    if (peak < 0.9 * unit || peak > 1.1 * unit) {
        detail = "peak " + std::to_string(peak) + " outside [0.9, 1.1]/2^10";
        return false;
    }
    detail = "1024 states, peak = " + std::to_string(peak);
    return true;
}

bool step_oracle_flags(std::string& detail) {
    const int n = 10;
    SubspaceWindow w{0.0, 2.0};
    const PhaseSchedule& p2a_s = golden("p2a_2x10").schedule;
    const PhaseSchedule& f_s = golden("f_2x22").schedule;
    const PhaseSchedule& step_s = golden("step_1_10_2x17").schedule;

    PhaseSchedule mid = merge_phases(f_s, p2a_s);
    PhaseSchedule full = merge_phases(step_s, mid);
    Circuit qso = build_qsp_over_kickback(full, n, w);
    Statevector in = uniform_over_register(n + 1, 0, n);
    std::vector<double> vals = hadamard_test(qso, in, n, n);

    const double scale = std::ldexp(1.0, n);
    int checked = 0, skipped = 0;
    for (long long a = 0; a < (1LL << n); ++a) {
        double v = qsp_response(mid, window_signal(a, n, w));
        if (std::abs(std::abs(v) - 0.1) < 0.02) { ++skipped; continue; }
        bool classical = std::abs(v) < 0.1;
        // the bundled step schedule realizes -step: flagged inputs map near +1
        bool circuit = vals[a] * scale > 0.0;
        if (circuit != classical) {
            detail = "flag mismatch at a=" + std::to_string(a);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " states checked, " +
             std::to_string(skipped) + " in the transition band";
    return true;
}

bool qse_end_to_end(std::string& detail, bool full) {
    const int n = 6, f = 5;
    SubspaceWindow w{0.0, 2.0};
    const PhaseSchedule& f_stage =
        full ? golden("f_2x22").schedule : golden("sgn_2x4").schedule;
    QseResult res = run_qse(golden("p2a_2x3").schedule, f_stage,
                            golden("a2p_2x3").schedule, n, f, w);
    int exact = 0;
    for (const QseRow& row : res.rows) {
        if (!row.matches_oracle) {
            detail = "input " + std::to_string(row.input) + " reads bin " +
                     std::to_string(row.argmax_bits) + " vs oracle " +
                     std::to_string(row.oracle_bin);
            return false;
        }
        long long diff = std::llabs(row.reading.translated - row.oracle_translated);
        if (diff > 1) {
            detail = "translated value drifts by " + std::to_string(diff) +
                     " at input " + std::to_string(row.input);
            return false;
        }
        const long long mirror = ((1LL << f) - row.oracle_bin) % (1LL << f);
        if (row.argmax_bits == row.oracle_bin || row.argmax_bits == mirror) ++exact;
    }
    detail = "merged degree " + std::to_string(res.merged.degree) + ", " +
             std::to_string(exact) + "/64 argmax bins exact";
    return true;
}

bool scaling_audit(std::string& detail) {
    SubspaceWindow w{0.0, 2.0};
    for (int n = 2; n <= 6; ++n) {
        if (!(audit(build_wy_kickback(n, w)).count == estimate(CircuitFamily::Wy, n))) {
            detail = "Wy row mismatch at N=" + std::to_string(n);
            return false;
        }
        if (!(audit(build_controlled_wy(n, w)).count ==
              estimate(CircuitFamily::CWy, n))) {
            detail = "CWy row mismatch at N=" + std::to_string(n);
            return false;
        }
        for (int m : {2, 4, 6, 8}) {
            if (!(audit(build_qsp_over_kickback(zero_schedule(m), n, w)).count ==
                  estimate(CircuitFamily::QSO, n, 0, m))) {
                detail = "QSO row mismatch";
                return false;
            }
            if (!(audit(build_controlled_qsp(zero_schedule(m), n, w)).count ==
                  estimate(CircuitFamily::CQSP, n, 0, m))) {
                detail = "CQSP row mismatch";
                return false;
            }
            for (int ff = 3; ff <= 5; ++ff) {
                AuditResult a = audit(build_qse_circuit(zero_schedule(m), n, ff, w));
                if (!(a.count == estimate_qse_sequential(n, ff, m))) {
                    detail = "QSE sequential mismatch at N=" + std::to_string(n) +
                             " F=" + std::to_string(ff) + " m=" + std::to_string(m);
                    return false;
                }
            }
        }
    }
    // the reuse-based QSE row presumes 2^{F+1} copies; the emitted circuit
    // uses 2^F - 1 -- reported here, not reconciled
    ResourceCount printed = estimate(CircuitFamily::QSE, 6, 5, 8);
    ResourceCount actual = estimate_qse_sequential(6, 5, 8);
    detail = "QSE copies: reuse row 2^{F+1}=64 vs sequential 2^F-1=31 (rz " +
             std::to_string(printed.rz) + " vs " + std::to_string(actual.rz) + ")";
    return true;
}

bool angle_resynthesis(std::string& detail) {
    OptimizationProblem p2a_prob;
    p2a_prob.target = target_p2a();
    p2a_prob.degree = golden("p2a_2x3").schedule.degree;
    p2a_prob.grid_size = 100;
    p2a_prob.seed = 1;
    p2a_prob.end_offset = true;

    OptimizeResult first = optimize(p2a_prob, 16);
    OptimizeResult second = optimize(p2a_prob, 16);
    for (std::size_t j = 0; j < first.schedule.angles.size(); ++j)
        if (first.schedule.angles[j] != second.schedule.angles[j]) {
            detail = "optimizer is not deterministic under a fixed seed";
            return false;
        }
    long double ref_p2a =
        oracle::residual_on_grid(oracle_angles(golden("p2a_2x3").schedule), oracle::p2a,
                                 -1.0L, 1.0L, 100)
            .loss_l1;
    if (first.achieved_loss > 1.5 * static_cast<double>(ref_p2a)) {
        detail = "p2a loss " + std::to_string(first.achieved_loss) + " > 1.5 x " +
                 std::to_string(static_cast<double>(ref_p2a));
        return false;
    }

    OptimizationProblem sgn_prob;
    sgn_prob.target = target_sgn();
    sgn_prob.degree = golden("sgn_2x4").schedule.degree;
    sgn_prob.grid_size = 200;
    sgn_prob.seed = 2;
    sgn_prob.excluded = {{-0.1, 0.1}};

    OptimizeResult sgn_res = optimize(sgn_prob, 16);
    std::vector<double> grid = make_grid(-1.0, 1.0, 200, sgn_prob.excluded);
    double mine = certify(sgn_res.schedule, target_sgn(), grid).max_err;
    double table = certify(golden("sgn_2x4").schedule, target_sgn(), grid).max_err;
    if (mine > 1.5 * table) {
        detail = "sgn max error " + std::to_string(mine) + " > 1.5 x " +
                 std::to_string(table);
        return false;
    }
    detail = "p2a loss " + std::to_string(first.achieved_loss) + " (table " +
             std::to_string(static_cast<double>(ref_p2a)) + "), sgn max " +
             std::to_string(mine) + " (table " + std::to_string(table) + ")";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const bool qse_full = argc > 1 && std::strcmp(argv[1], "--qse-full") == 0;
    if (qse_full) {
        run_criterion(11, "qse-end-to-end-full", 600,
                      [](std::string& d) { return qse_end_to_end(d, true); });
        return g_failures;
    }

    run_criterion(1, "golden-angles", 5, golden_angles);
    run_criterion(2, "function-identities", 1, function_identities);
    run_criterion(3, "chebyshev-law", 1, chebyshev_law);
    run_criterion(4, "merge-law", 5, merge_law);
    run_criterion(5, "embedding-closure", 2, embedding_closure);
    run_criterion(6, "qft-adder", 10, qft_adder);
    run_criterion(7, "uf-equivalence", 30, uf_equivalence);
    run_criterion(8, "adder-eigenphases", 5, adder_eigenphases);
    run_criterion(9, "block-encoding-profile", 60, block_encoding_profile);
    run_criterion(10, "step-oracle-flags", 60, step_oracle_flags);
    run_criterion(11, "qse-end-to-end", 120,
                  [](std::string& d) { return qse_end_to_end(d, false); });
    run_criterion(12, "scaling-audit", 5, scaling_audit);
    run_criterion(13, "angle-resynthesis", 300, angle_resynthesis);

    std::printf("%d/13 criteria passed\n", 13 - g_failures);
    return g_failures;
}
