#pragma once

#include "steklov/field.hpp"

namespace steklov {

/// Forward averaging window h = k*dt.  h is restricted to exact integer
/// multiples of dt so that the discrete derivative and integral identities
/// hold at machine precision; fractional windows are rejected.
struct SteklovParams {
    std::size_t k = 1;
    double h = 0.0;

    /// From a window length in steps.
    static SteklovParams from_steps(std::size_t k, const TimeGrid& time);
    /// From a window length in seconds; throws unless h is a positive
    /// multiple of time.dt (within 1e-9 * dt).
    static SteklovParams from_seconds(double h, const TimeGrid& time);
};

/// The shrunk domain I_h = { t in I | t + h in I }: same t0 and dt, count
/// n - k.  Throws when k >= n (empty domain).
TimeGrid ih_domain(const TimeGrid& time, const SteklovParams& params);

/// Restricted forward window mean on I_h:
///   v_h(x, t_j) = (1/k) * sum_{i=0}^{k-1} v(x, t_{j+i}),
/// the left-Riemann realization of the sliding integral mean.  Computed with
/// the prefix-sum kernel, O(1) per output sample.
Field steklov_average(const Field& field, const SteklovParams& params);

/// Window mean of the zero extension of v, defined at every t_j in I.
///
/// Quadrature convention: sample m owns the cell [t_m, t_m + dt).  The cell
/// of the final sample lies beyond the right endpoint of I, where the
/// extension vanishes, so window sums read zeros from index n-1 on.  This
/// matches the left-Riemann Bochner norm (which gives the final sample zero
/// weight) and makes the norm contraction property exact on grids.
Field steklov_average_extended(const Field& field, const SteklovParams& params);

/// Scalar windowed mean at one (x, t) point of the extended operator; equal
/// bit-for-bit to the corresponding entry of steklov_average_extended.
double pointwise_average(const Field& field, std::size_t spatial_flat,
                         std::size_t t_index, const SteklovParams& params);

/// Exact discrete time derivative of the restricted average on I_h:
///   (v_h)_t(x, t_j) = (v(x, t_j + h) - v(x, t_j)) / h.
/// The forward difference of steklov_average reproduces this entrywise
/// because window sums telescope.
Field steklov_time_derivative(const Field& field, const SteklovParams& params);

/// Oracle: same contract as steklov_average, computed by direct per-window
/// summation, O(k) per output sample.
Field naive_average(const Field& field, const SteklovParams& params);

/// Oracle for the extended variant, O(k) per output sample.
Field naive_average_extended(const Field& field, const SteklovParams& params);

} // namespace steklov
