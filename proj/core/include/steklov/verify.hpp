#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steklov/calculus.hpp"
#include "steklov/corpus.hpp"
#include "steklov/norms.hpp"

namespace steklov {

/// Raw data of a convergence study: errors measured over a decreasing
/// geometric list of h (or dt) values, with a log-log least-squares order.
struct ConvergenceStudy {
    std::vector<double> xs;       // h or dt, strictly decreasing
    std::vector<double> errors;   // matching, nonnegative
    double fitted_order = 0.0;
    double order_target = 0.0;
    double order_window = 0.0;
};

/// Outcome record of one property check.
///
/// Inequality checks set margin = bound - measured (or measured - bound for
/// lower bounds); identity checks set margin = -|measured - target|.  Either
/// way: passed <=> margin >= -tolerance.
struct CheckResult {
    std::string check_id;
    std::string field_name;
    std::map<std::string, double> parameters;
    double measured = 0.0;
    double bound_or_target = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;
    std::optional<ConvergenceStudy> study;
    /// Grid indices found non-converging by the pointwise sweep.
    std::vector<std::size_t> exceptional_indices;
};

/// Least-squares slope of log(error) against log(x).  Points with error at
/// or below 1e-13 * scale are excluded; throws if fewer than 3 usable points
/// remain.  `scale` defaults to the largest error.
double estimate_order(const std::vector<double>& xs, const std::vector<double>& errors,
                      double scale = 0.0);

// Lemma checks.  Every check is deterministic given the entry, grids and
// parameters; tolerances follow one policy: exact discrete identities use
// 1e-12 relative to the field scale, quadrature-limited statements use
// convergence-order windows.

/// ||v_h|| <= ||v|| in L^r(I, L^q(E)) for the zero-extended average.
CheckResult check_contraction(const CorpusEntry& entry, const BochnerSpec& spec,
                              const SteklovParams& params);

/// sup_t ||v_h(.,t)||_q <= h^(-1/r) ||v||_{L^r(I,L^q)} (ess-sup bound for r = inf).
CheckResult check_pointwise_bound(const CorpusEntry& entry, const BochnerSpec& spec,
                                  const SteklovParams& params);

/// Difference quotients of the restricted average are bounded by 2M/h.
CheckResult check_lipschitz(const CorpusEntry& entry, const Exponent& q,
                            const SteklovParams& params);

/// sup over [a, T] of ||v_h - v||_q -> 0 as h -> 0, T = end - max(h).
/// Smooth classes must fit order 1 within [0.9, 1.1].
CheckResult check_uniform_convergence(const CorpusEntry& entry, const Exponent& q,
                                      const std::vector<std::size_t>& k_list);

/// ||v_h - v||_{L^r(I,L^q)} -> 0 (r < inf).  Step entries decay at order 1/r.
CheckResult check_lr_convergence(const CorpusEntry& entry, const BochnerSpec& spec,
                                 const std::vector<std::size_t>& k_list);

/// Pointwise convergence at every grid point away from declared jumps; the
/// sweep scans t <= end - max(h) so that every window in the list stays
/// inside I.  Reports the non-converging indices found.
CheckResult check_ae_convergence(const CorpusEntry& entry, const Exponent& q,
                                 const std::vector<std::size_t>& k_list);

/// Spatial derivative and window average commute entrywise on I_h.
CheckResult check_commutation(const CorpusEntry& entry, const SteklovParams& params,
                              std::size_t axis);

/// Forward difference of v_h equals (v(t+h) - v(t))/h entrywise.
CheckResult check_time_derivative(const CorpusEntry& entry, const SteklovParams& params);

/// Both discrete fundamental-theorem identities, exact:
/// forward difference of the cumulative integral reproduces f, and
/// integrate_time equals the endpoint difference.
CheckResult check_ftc_derivative(const CorpusEntry& entry);
CheckResult check_ftc_interval(const CorpusEntry& entry);

/// Pointwise scalar averages agree bit-for-bit with the field-level extended
/// operator.
CheckResult check_pointwise_values(const CorpusEntry& entry, const SteklovParams& params);

/// Prefix-sum kernel against the direct O(k) oracle.
CheckResult check_kernel_oracle(const CorpusEntry& entry, const SteklovParams& params);

/// Integration-by-parts residual under dt halving (order 1), plus the exact
/// discrete Abel identity at every level.
struct IbpInputs {
    std::string name;
    FieldSampler f;
    FieldSampler g;
    SpaceGrid space;
    double t_begin = 0.0;
    double t_end = 1.0;
};
CheckResult check_ibp_convergence(const IbpInputs& inputs, const std::vector<double>& dt_list);
CheckResult check_abel_identity(const IbpInputs& inputs, double dt);

/// Cantor counterexample: with G the level-`level` Cantor field and f = 0
/// (the a.e. derivative of the limit), the interval identity fails with
/// discrepancy exactly 1; restoring f = discrete difference of G brings the
/// discrepancy to 0.
CheckResult check_cantor_counterexample(int level, const SpaceGrid& space, const TimeGrid& time);
CheckResult check_cantor_restored(int level, const SpaceGrid& space, const TimeGrid& time);

} // namespace steklov
