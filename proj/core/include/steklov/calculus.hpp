#pragma once

#include "steklov/field.hpp"

namespace steklov {

/// Discrete test function: samples on a SpaceGrid whose boundary layer
/// (every outermost cell along each axis) is exactly zero, the grid analogue
/// of compact support.
struct TestFunction {
    SpaceGrid space;
    std::vector<double> values;
};

/// Builds a TestFunction from a sampler and verifies the boundary layer is
/// exactly zero; throws otherwise.
TestFunction make_test_function(const SpaceGrid& space,
                                const std::function<double(std::span<const double>)>& sampler);

/// Finite-difference realization of the weak spatial derivative along `axis`:
/// second-order central differences at interior points, one-sided
/// second-order stencils at the two boundary points, applied independently at
/// every time index.  Requires extent >= 3 along the axis.
Field weak_derivative(const Field& field, std::size_t axis);

/// Same stencil applied to a single spatial sample set.
std::vector<double> weak_derivative_slice(const SpaceGrid& space,
                                          std::span<const double> values, std::size_t axis);

/// Duality pairing <slice | phi> = sum slice * phi * dV.
double pairing(const SpaceSlice& slice, const TestFunction& phi);

/// F(., t_j) = F0 + left-Riemann sum of f from t0_index to j; sums negate for
/// j < t0_index.  The discrete forward difference of the result reproduces f
/// exactly.
Field cumulative_integral(const Field& f, const SpaceSlice& F0, std::size_t t0_index);

/// Left-Riemann time integral over [t_{j1}, t_{j2}); equals the difference of
/// cumulative_integral values at the endpoints.  Requires j1 <= j2.
SpaceSlice integrate_time(const Field& f, std::size_t j1, std::size_t j2);

/// Residual of the continuous integration-by-parts identity evaluated with
/// left-Riemann quadrature:
///   R = int_a^b f*G dt + int_a^b F*g dt - [F(b)G(b) - F(a)G(a)],
/// where F, G are cumulative integrals of f, g from base points t0, t1.
/// ||R|| is O(dt) for bounded f, g; the grid-native exact counterpart is
/// abel_identity_residual below.
SpaceSlice integration_by_parts_residual(const Field& f, const Field& g,
                                         const SpaceSlice& F0, const SpaceSlice& G1,
                                         std::size_t t0_index, std::size_t t1_index,
                                         std::size_t a_index, std::size_t b_index);

/// Deviation from the exact discrete Abel summation identity
///   sum (F_{j+1}-F_j) G_j  =  F_b G_b - F_a G_a - sum F_{j+1} (G_{j+1}-G_j)
/// over [a_index, b_index); zero up to floating-point roundoff.
SpaceSlice abel_identity_residual(const Field& f, const Field& g,
                                  const SpaceSlice& F0, const SpaceSlice& G1,
                                  std::size_t t0_index, std::size_t t1_index,
                                  std::size_t a_index, std::size_t b_index);

} // namespace steklov
