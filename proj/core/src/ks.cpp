#include "dynalg/ks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dynalg::ks {

Image ks_map(const Point& u) {
    return {2.0 * (u[0] * u[2] - u[1] * u[3]), 2.0 * (u[0] * u[3] + u[1] * u[2]),
            u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3]};
}

double constraint_form(const Point& u, const Tangent& du) {
    return -u[0] * du[1] + u[1] * du[0] + u[2] * du[3] - u[3] * du[2];
}

Point fiber_action(const Point& u, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * u[0] - s * u[1], s * u[0] + c * u[1], c * u[2] + s * u[3], -s * u[2] + c * u[3]};
}

Tangent fiber_tangent(const Point& u) { return {-u[1], u[0], u[3], -u[2]}; }

Eigen::Matrix4d fiber_generator_matrix() {
    Eigen::Matrix4d k;
    k << 0, -1, 0, 0,
         1, 0, 0, 0,
         0, 0, 0, 1,
         0, 0, -1, 0;
    return k;
}

Eigen::Matrix<double, 3, 4> jacobian(const Point& u) {
    Eigen::Matrix<double, 3, 4> j;
    j << 2 * u[2], -2 * u[3], 2 * u[0], -2 * u[1],
         2 * u[3], 2 * u[2], 2 * u[1], 2 * u[0],
         2 * u[0], 2 * u[1], -2 * u[2], -2 * u[3];
    return j;
}

Eigen::Matrix<double, 3, 4> jacobian_fd(const Point& u, double h) {
    Eigen::Matrix<double, 3, 4> j;
    for (int c = 0; c < 4; ++c) {
        Point up = u, dn = u;
        up[c] += h;
        dn[c] -= h;
        const Image xp = ks_map(up), xm = ks_map(dn);
        for (int r = 0; r < 3; ++r) j(r, c) = (xp[r] - xm[r]) / (2 * h);
    }
    return j;
}

double norm(const Point& u) { return std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]); }
double norm(const Image& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); }

nlohmann::json PropertyResult::to_json() const {
    return {{"property", property}, {"samples", samples}, {"max_error", max_error}, {"tol", tol}, {"ok", ok()}};
}

std::vector<PropertyResult> check_suite(std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);

    PropertyResult norm_id{"norm_identity", samples, 0.0, 1e-12};
    PropertyResult invariance{"fiber_invariance", samples, 0.0, 1e-12};
    PropertyResult periodic{"fiber_periodicity", samples, 0.0, 1e-12};
    PropertyResult along{"constraint_along_fiber", samples, 0.0, 1e-12};
    PropertyResult tangent_fd{"fiber_tangent_fd", samples, 0.0, 1e-9};
    PropertyResult ks_flat{"ks_derivative_along_fiber", samples, 0.0, 1e-12};
    PropertyResult jac_fd{"jacobian_fd", samples, 0.0, 1e-8};
    PropertyResult jac_rank{"jacobian_rank_deficit", samples, 0.0, 0.0};
    PropertyResult generator{"fiber_generator_matrix", samples, 0.0, 1e-15};

    const Eigen::Matrix4d k = fiber_generator_matrix();
    for (std::size_t s = 0; s < samples; ++s) {
        Point u;
        for (auto& c : u) c = coord(rng);
        const double theta = angle(rng);
        const double r2 = norm(u) * norm(u);
        const double scale = std::max(1.0, r2);

        const Image x = ks_map(u);
        norm_id.max_error = std::max(norm_id.max_error, std::abs(norm(x) - r2) / scale);

        const Image y = ks_map(fiber_action(u, theta));
        for (int i = 0; i < 3; ++i) invariance.max_error = std::max(invariance.max_error, std::abs(y[i] - x[i]) / scale);

        const Point w = fiber_action(u, 2 * std::numbers::pi);
        for (int i = 0; i < 4; ++i) periodic.max_error = std::max(periodic.max_error, std::abs(w[i] - u[i]) / std::max(1.0, norm(u)));

        const Tangent t = fiber_tangent(u);
        along.max_error = std::max(along.max_error, std::abs(constraint_form(u, t) + r2) / scale);

        const double h = 1e-6;
        const Point fp = fiber_action(u, h), fm = fiber_action(u, -h);
        for (int i = 0; i < 4; ++i)
            tangent_fd.max_error = std::max(tangent_fd.max_error, std::abs((fp[i] - fm[i]) / (2 * h) - t[i]));

        const Eigen::Matrix<double, 3, 4> j = jacobian(u);
        const Eigen::Vector4d tv(t[0], t[1], t[2], t[3]);
        ks_flat.max_error = std::max(ks_flat.max_error, (j * tv).cwiseAbs().maxCoeff() / scale);

        const Eigen::Matrix<double, 3, 4> jf = jacobian_fd(u);
        jac_fd.max_error = std::max(jac_fd.max_error, (jf - j).cwiseAbs().maxCoeff() / scale);
        Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(jf);
        svd.setThreshold(1e-8);
        jac_rank.max_error = std::max(jac_rank.max_error, 3.0 - static_cast<double>(svd.rank()));

        const Eigen::Vector4d uv(u[0], u[1], u[2], u[3]);
        generator.max_error = std::max(generator.max_error, (k * uv - tv).cwiseAbs().maxCoeff());
    }
    return {norm_id, invariance, periodic, along, tangent_fd, ks_flat, jac_fd, jac_rank, generator};
}

nlohmann::json conventions() {
    return {{"fiber_orientation", "(z1, z2) -> (exp(i theta) z1, exp(-i theta) z2)"},
            {"z", "z1 = u1 + i u2, z2 = u3 + i u4"}};
}

}  // namespace dynalg::ks
