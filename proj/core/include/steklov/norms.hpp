#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "steklov/field.hpp"

namespace steklov {

/// A Lebesgue exponent: a real >= 1, or infinity.  Fractional values are
/// allowed.  Infinity selects the max-over-samples norm, which coincides with
/// the essential supremum on finite grids.
class Exponent {
  public:
    explicit Exponent(double value);
    static Exponent inf() { return Exponent(std::numeric_limits<double>::infinity()); }

    bool is_inf() const { return std::isinf(value_); }
    double value() const { return value_; }

    std::string str() const;
    static Exponent parse(const std::string& text);

    bool operator==(const Exponent&) const = default;

  private:
    double value_;
};

/// Exponent pair (q, r) selecting the space-time norm ||.||_{L^r(I, L^q(E))}.
struct BochnerSpec {
    Exponent q;
    Exponent r;
};

/// Discrete L^q(E) norm of the time slice at t_index:
///   q < inf: (sum |v|^q * dV)^(1/q),  q = inf: max |v|.
double lq_space_norm(const Field& field, std::size_t t_index, const Exponent& q);

double lq_space_norm(const SpaceSlice& slice, const Exponent& q);

/// Discrete Bochner norm.  For r < inf the time integral is left-Riemann over
/// I, so the final grid point carries no weight; for r = inf it is the max of
/// the slice norms over every grid point.
double bochner_norm(const Field& field, const BochnerSpec& spec);

/// max over time indices of the L^q slice norm; equals bochner_norm with
/// r = inf.
double ess_sup_time(const Field& field, const Exponent& q);

/// Left-Riemann partial sum of ||v(.,t_j)||_q^r * dt for j < t_index
/// (requires r < inf).  Nondecreasing in t_index; at t_index = n-1 it equals
/// bochner_norm^r.
double cumulative_norm_V(const Field& field, const BochnerSpec& spec, std::size_t t_index);

} // namespace steklov
