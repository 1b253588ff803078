#pragma once

namespace decolab {

/// Numerical tolerances for validity checks on states and operators.
/// Defaults are close to machine epsilon and suit dense double-precision
/// algebra up to dimension of a few hundred.
struct Tolerances {
    double norm = 1e-12;  ///< unit-trace / unit-norm residual
    double herm = 1e-12;  ///< hermiticity residual (max entrywise)
    double pos = 1e-10;   ///< most negative admissible eigenvalue
};

}  // namespace decolab
