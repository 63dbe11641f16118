#include "steklov/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace steklov {

namespace {

std::size_t axis_stride(const SpaceGrid& space, std::size_t axis) {
    std::size_t stride = 1;
    for (std::size_t a = space.ndim(); a-- > axis + 1;) stride *= space.shape[a];
    return stride;
}

bool on_boundary_layer(const SpaceGrid& space, std::size_t flat) {
    for (std::size_t a = space.ndim(); a-- > 0;) {
        const std::size_t idx = flat % space.shape[a];
        flat /= space.shape[a];
        if (idx == 0 || idx + 1 == space.shape[a]) return true;
    }
    return false;
}

void require_same_space(const SpaceGrid& a, const SpaceGrid& b, const char* op_name) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(op_name) + ": spatial grids do not match");
    }
}

void require_same_grids(const Field& a, const Field& b, const char* op_name) {
    if (!(a.space == b.space) || !(a.time == b.time)) {
        throw std::invalid_argument(std::string(op_name) + ": field grids do not match");
    }
}

} // namespace

TestFunction make_test_function(
    const SpaceGrid& space, const std::function<double(std::span<const double>)>& sampler) {
    TestFunction phi{space, std::vector<double>(space.point_count())};
    for (std::size_t s = 0; s < phi.values.size(); ++s) {
        const std::vector<double> x = space.coords(s);
        phi.values[s] = sampler(x);
        if (!std::isfinite(phi.values[s])) {
            throw std::invalid_argument("make_test_function: non-finite sample");
        }
        if (on_boundary_layer(space, s) && phi.values[s] != 0.0) {
            throw std::invalid_argument(
                "make_test_function: boundary layer must be exactly zero (discrete compact "
                "support)");
        }
    }
    return phi;
}

std::vector<double> weak_derivative_slice(const SpaceGrid& space,
                                          std::span<const double> values, std::size_t axis) {
    if (axis >= space.ndim()) {
        throw std::invalid_argument("weak_derivative: axis out of range");
    }
    if (space.shape[axis] < 3) {
        throw std::invalid_argument("weak_derivative: axis extent must be >= 3");
    }
    if (values.size() != space.point_count()) {
        throw std::invalid_argument("weak_derivative: slice length does not match grid");
    }
    const std::size_t stride = axis_stride(space, axis);
    const std::size_t extent = space.shape[axis];
    const double inv_2dx = 1.0 / (2.0 * space.spacing[axis]);

    std::vector<double> out(values.size());
    for (std::size_t s = 0; s < values.size(); ++s) {
        const std::size_t idx = (s / stride) % extent;
        if (idx == 0) {
            out[s] = (-3.0 * values[s] + 4.0 * values[s + stride] - values[s + 2 * stride]) *
                     inv_2dx;
        } else if (idx + 1 == extent) {
            out[s] = (3.0 * values[s] - 4.0 * values[s - stride] + values[s - 2 * stride]) *
                     inv_2dx;
        } else {
            out[s] = (values[s + stride] - values[s - stride]) * inv_2dx;
        }
    }
    return out;
}

Field weak_derivative(const Field& field, std::size_t axis) {
    if (axis >= field.space.ndim()) {
        throw std::invalid_argument("weak_derivative: axis out of range");
    }
    if (field.space.shape[axis] < 3) {
        throw std::invalid_argument("weak_derivative: axis extent must be >= 3");
    }
    const std::size_t stride = axis_stride(field.space, axis) * field.time.n;
    const std::size_t extent = field.space.shape[axis];
    const double inv_2dx = 1.0 / (2.0 * field.space.spacing[axis]);
    const std::size_t n = field.time.n;

    Field out{field.space, field.time, std::vector<double>(field.values.size())};
    const std::size_t ns = field.spatial_count();
    for (std::size_t s = 0; s < ns; ++s) {
        const std::size_t idx = (s * n / stride) % extent;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t at = s * n + j;
            if (idx == 0) {
                out.values[at] = (-3.0 * field.values[at] + 4.0 * field.values[at + stride] -
                                  field.values[at + 2 * stride]) *
                                 inv_2dx;
            } else if (idx + 1 == extent) {
                out.values[at] = (3.0 * field.values[at] - 4.0 * field.values[at - stride] +
                                  field.values[at - 2 * stride]) *
                                 inv_2dx;
            } else {
                out.values[at] =
                    (field.values[at + stride] - field.values[at - stride]) * inv_2dx;
            }
        }
    }
    return out;
}

double pairing(const SpaceSlice& slice, const TestFunction& phi) {
    require_same_space(slice.space, phi.space, "pairing");
    double sum = 0.0;
    for (std::size_t s = 0; s < slice.values.size(); ++s) {
        sum += slice.values[s] * phi.values[s];
    }
    return sum * slice.space.cell_volume();
}

Field cumulative_integral(const Field& f, const SpaceSlice& F0, std::size_t t0_index) {
    require_same_space(f.space, F0.space, "cumulative_integral");
    if (t0_index >= f.time.n) {
        throw std::invalid_argument("cumulative_integral: base index out of range");
    }
    const std::size_t ns = f.spatial_count();
    const std::size_t n = f.time.n;
    const double dt = f.time.dt;

    Field out{f.space, f.time, std::vector<double>(f.values.size())};
    for (std::size_t s = 0; s < ns; ++s) {
        out.at(s, t0_index) = F0.values[s];
        for (std::size_t j = t0_index; j + 1 < n; ++j) {
            out.at(s, j + 1) = out.at(s, j) + dt * f.at(s, j);
        }
        for (std::size_t j = t0_index; j-- > 0;) {
            out.at(s, j) = out.at(s, j + 1) - dt * f.at(s, j);
        }
    }
    return out;
}

SpaceSlice integrate_time(const Field& f, std::size_t j1, std::size_t j2) {
    if (j1 > j2) {
        throw std::invalid_argument("integrate_time: j1 must not exceed j2");
    }
    if (j2 >= f.time.n) {
        throw std::invalid_argument("integrate_time: index out of range");
    }
    const std::size_t ns = f.spatial_count();
    SpaceSlice out{f.space, std::vector<double>(ns, 0.0)};
    for (std::size_t s = 0; s < ns; ++s) {
        double sum = 0.0;
        for (std::size_t m = j1; m < j2; ++m) sum += f.at(s, m);
        out.values[s] = sum * f.time.dt;
    }
    return out;
}

namespace {

struct IbpOperands {
    Field F;
    Field G;
};

IbpOperands build_antiderivatives(const Field& f, const Field& g, const SpaceSlice& F0,
                                  const SpaceSlice& G1, std::size_t t0_index,
                                  std::size_t t1_index, std::size_t a_index,
                                  std::size_t b_index, const char* op_name) {
    require_same_grids(f, g, op_name);
    if (a_index > b_index || b_index >= f.time.n) {
        throw std::invalid_argument(std::string(op_name) + ": need a_index <= b_index < n");
    }
    return IbpOperands{cumulative_integral(f, F0, t0_index),
                       cumulative_integral(g, G1, t1_index)};
}

} // namespace

SpaceSlice integration_by_parts_residual(const Field& f, const Field& g, const SpaceSlice& F0,
                                         const SpaceSlice& G1, std::size_t t0_index,
                                         std::size_t t1_index, std::size_t a_index,
                                         std::size_t b_index) {
    const IbpOperands ops = build_antiderivatives(f, g, F0, G1, t0_index, t1_index, a_index,
                                                  b_index, "integration_by_parts_residual");
    const std::size_t ns = f.spatial_count();
    const double dt = f.time.dt;

    SpaceSlice residual{f.space, std::vector<double>(ns, 0.0)};
    for (std::size_t s = 0; s < ns; ++s) {
        double lhs = 0.0;
        for (std::size_t j = a_index; j < b_index; ++j) {
            lhs += f.at(s, j) * ops.G.at(s, j) + ops.F.at(s, j) * g.at(s, j);
        }
        lhs *= dt;
        const double boundary = ops.F.at(s, b_index) * ops.G.at(s, b_index) -
                                ops.F.at(s, a_index) * ops.G.at(s, a_index);
        residual.values[s] = lhs - boundary;
    }
    return residual;
}

SpaceSlice abel_identity_residual(const Field& f, const Field& g, const SpaceSlice& F0,
                                  const SpaceSlice& G1, std::size_t t0_index,
                                  std::size_t t1_index, std::size_t a_index,
                                  std::size_t b_index) {
    const IbpOperands ops = build_antiderivatives(f, g, F0, G1, t0_index, t1_index, a_index,
                                                  b_index, "abel_identity_residual");
    const std::size_t ns = f.spatial_count();

    SpaceSlice residual{f.space, std::vector<double>(ns, 0.0)};
    for (std::size_t s = 0; s < ns; ++s) {
        double sum = 0.0;
        for (std::size_t j = a_index; j < b_index; ++j) {
            sum += (ops.F.at(s, j + 1) - ops.F.at(s, j)) * ops.G.at(s, j) +
                   ops.F.at(s, j + 1) * (ops.G.at(s, j + 1) - ops.G.at(s, j));
        }
        const double boundary = ops.F.at(s, b_index) * ops.G.at(s, b_index) -
                                ops.F.at(s, a_index) * ops.G.at(s, a_index);
        residual.values[s] = sum - boundary;
    }
    return residual;
}

} // namespace steklov
