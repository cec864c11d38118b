#pragma once

// Generated by gen_fixtures from the extended-precision oracle.
// Residuals of each bundled schedule against its target over the
// 1001-point grid on [-1, 1].  Do not edit by hand.

namespace fixtures {

struct GoldenResidual {
    const char* name;
    double max_err;
    double loss_l1;
};

inline constexpr GoldenResidual kGoldenResiduals[] = {
    {"p2a_2x3", 0.091408102042717519, 35.299939690333285},
    {"p2a_2x4", 0.058067764367472799, 7.3537888525380644},
    {"p2a_2x8", 0.036235687284706479, 1.5830483051406158},
    {"p2a_2x10", 0.031754066464252639, 1.0609750616911312},
    {"a2p_2x3", 0.039995531938123334, 25.963155866160319},
    {"a2p_2x4", 0.0031742929985109298, 2.0317846996231172},
    {"sgn_2x4", 1, 234.24123574487866},
    {"sgn_2x8", 1, 154.19334047818619},
    {"sgn_2x14", 1, 107.48932547310948},
};

}  // namespace fixtures
