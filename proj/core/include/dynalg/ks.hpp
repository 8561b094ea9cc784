#pragma once

// Kustaanheimo-Stiefel map R^4 -> R^3, its constraint 1-form, and the
// Hopf circle acting on the fibers.

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dynalg::ks {

using Point = std::array<double, 4>;
using Tangent = std::array<double, 4>;
using Image = std::array<double, 3>;

Image ks_map(const Point& u);

/// -u1 du2 + u2 du1 + u3 du4 - u4 du3
double constraint_form(const Point& u, const Tangent& du);

/// (z1, z2) -> (e^{i theta} z1, e^{-i theta} z2), z1 = u1 + i u2, z2 = u3 + i u4.
Point fiber_action(const Point& u, double theta);

/// d/dtheta of fiber_action at 0: (-u2, u1, u4, -u3).
Tangent fiber_tangent(const Point& u);

/// Generator K of the fiber circle, fiber_tangent(u) = K u.
Eigen::Matrix4d fiber_generator_matrix();

Eigen::Matrix<double, 3, 4> jacobian(const Point& u);
/// Central differences with step h.
Eigen::Matrix<double, 3, 4> jacobian_fd(const Point& u, double h = 1e-6);

double norm(const Point& u);
double norm(const Image& x);

struct PropertyResult {
    std::string property;
    std::size_t samples = 0;
    double max_error = 0.0;
    double tol = 0.0;

    [[nodiscard]] bool ok() const { return max_error <= tol; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Seeded random-point checks of every identity above.
std::vector<PropertyResult> check_suite(std::uint64_t seed, std::size_t samples = 1000);

nlohmann::json conventions();

}  // namespace dynalg::ks
