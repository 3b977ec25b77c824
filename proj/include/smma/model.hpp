#pragma once

#include <cmath>

namespace smma {

/// Parameters of the Menzerath-Altmann model  y(l) = A * l^b * exp(-c*l).
struct MaParams {
    double amplitude = 1.0; ///< A, > 0
    double exponent = 0.0;  ///< b
    double decay = 0.0;     ///< c, per letter

    /// The distribution has a finite sum over unbounded lengths iff c > 0.
    /// Checked as a validity flag after fitting, not at construction.
    bool normalizable() const { return decay > 0.0; }
};

/// Parameters of the statistical-mechanical MA model
///   n(l) = omega^l * exp(phi) * l^alpha * exp(-theta*l).
struct SmmaParams {
    double phi = 0.0;   ///< log amplitude, mu * theta
    double alpha = 0.0; ///< length-favorability exponent
    double theta = 0.0; ///< inverse temperature, per letter
    int omega = 1;      ///< structural degeneracy (alphabet size), fixed during fits

    /// Finite sum over unbounded lengths iff theta > ln(omega).
    bool normalizable() const { return theta > std::log(static_cast<double>(omega)); }
};

/// A * l^b * exp(-c*l) for a discrete length state l >= 1.
double ma_eval(const MaParams& p, int length);

/// omega^l * exp(phi) * l^alpha * exp(-theta*l) for l >= 1. Evaluated in log
/// space and exponentiated last, so omega^l never overflows on its own; the
/// result is +inf only when the combined log value exceeds double range.
double smma_eval(const SmmaParams& p, int length);

/// Continuous-length evaluation. The models are defined on integer states;
/// these exist for jacobians and dense plot grids.
double ma_eval_at(const MaParams& p, double length);
double smma_eval_at(const SmmaParams& p, double length);

/// Reparameterization alpha = b, phi = ln A, theta = c + ln(omega).
/// Requires A > 0.
SmmaParams ma_to_smma(const MaParams& p, int omega);

/// Exact inverse of ma_to_smma.
MaParams smma_to_ma(const SmmaParams& p);

/// Weighted degeneracy of a length state: omega^l * l^alpha. The integer
/// power is computed exactly while it fits a double; +inf past that.
double degeneracy(int length, int omega, double alpha);

/// l*ln(omega) + alpha*ln(l), the log of degeneracy(); never overflows.
double log_degeneracy(int length, int omega, double alpha);

} // namespace smma
