#pragma once

// Independent extended-precision (80-bit long double) evaluation of the
// 2x2 QSP protocol and the scalar targets.  Deliberately shares no code
// with the library: every derived expected value is checked against this
// second route.

#include <complex>
#include <vector>

namespace oracle {

using lcplx = std::complex<long double>;

struct Mat2 {
    lcplx a, b, c, d;
    Mat2 operator*(const Mat2& r) const {
        return {a * r.a + b * r.c, a * r.b + b * r.d,
                c * r.a + d * r.c, c * r.b + d * r.d};
    }
};

/// Signal processor diag(e^{i phi}, e^{-i phi}).
Mat2 processor(long double phi);

/// W_X signal operator [[a, i r], [i r, a]].
Mat2 wx(long double a);

/// Full product for evaluation-time angles (offsets already folded in).
Mat2 qsp_product(const std::vector<long double>& eval_angles, long double a);

/// Re of the (0,0) entry of the product.
long double response(const std::vector<long double>& eval_angles, long double a);

/// Evaluation-time angles of a bare schedule (+pi/2 terminal offsets when
/// flagged).
std::vector<long double> eval_angles(const std::vector<double>& bare, bool end_offset);

// Targets in long double.
long double p2a(long double x);
long double a2p(long double x);
long double sgn(long double x);
long double step(long double x, long double delta_s);
long double example_f(long double x);

struct Residual {
    long double max_err = 0.0L;
    long double loss_l1 = 0.0L;  // sum of |response - target| over the grid
};

/// Residual of a schedule against a target over d+1 uniform points on
/// [lo, hi], skipping points within `band` of any value in `jumps`.
template <typename Target>
Residual residual_on_grid(const std::vector<long double>& eval, Target&& target,
                          long double lo, long double hi, int d,
                          const std::vector<long double>& jumps = {},
                          long double band = 0.0L) {
    Residual r;
    for (int j = 0; j <= d; ++j) {
        long double x = lo + (hi - lo) * static_cast<long double>(j) / d;
        bool skip = false;
        for (long double c : jumps)
            if (std::abs(std::abs(x) - c) < band) skip = true;
        if (skip) continue;
        long double e = std::abs(response(eval, x) - target(x));
        if (e > r.max_err) r.max_err = e;
        r.loss_l1 += e;
    }
    return r;
}

}  // namespace oracle
