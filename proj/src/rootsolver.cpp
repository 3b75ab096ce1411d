#include "palinform/rootsolver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "palinform/error.hpp"

namespace palinform {

namespace {

using CD = std::complex<double>;

CD horner(const std::vector<CD>& c, CD z) {
    CD acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CD horner_derivative(const std::vector<CD>& c, CD z) {
    CD acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

std::vector<CD> companion_eigenvalues(const std::vector<CD>& monic) {
    const int m = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) companion(i, m - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<CD> roots(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

// A few Newton steps to polish eigenvalue output (no-op at a converged root).
void polish(const std::vector<CD>& monic, std::vector<CD>& roots) {
    for (CD& z : roots) {
        for (int step = 0; step < 4; ++step) {
            CD d = horner_derivative(monic, z);
            if (std::abs(d) < 1e-300) break;
            CD delta = horner(monic, z) / d;
            z -= delta;
            if (std::abs(delta) < 1e-14 * (1.0 + std::abs(z))) break;
        }
    }
}

bool aberth(const std::vector<CD>& monic, std::vector<CD>& z, const RootOptions& opt) {
    const std::size_t m = z.size();
    for (int iter = 0; iter < opt.max_iters; ++iter) {
        double worst = 0;
        for (std::size_t j = 0; j < m; ++j) {
            CD p = horner(monic, z[j]);
            CD dp = horner_derivative(monic, z[j]);
            if (std::abs(dp) < 1e-300) {
                z[j] += CD(1e-6, 1e-6);
                worst = 1;
                continue;
            }
            CD w = p / dp;
            CD repulsion = 0;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                CD diff = z[j] - z[k];
                if (std::abs(diff) < 1e-300) diff = CD(1e-30, 0);
                repulsion += 1.0 / diff;
            }
            CD denom = 1.0 - w * repulsion;
            CD delta = std::abs(denom) < 1e-300 ? w : w / denom;
            z[j] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[j])));
            if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) return false;
        }
        if (worst <= opt.tol) return true;
    }
    return false;
}

}  // namespace

RootSet find_roots(const std::vector<CD>& coeffs, RootOptions opt) {
    std::vector<CD> c = coeffs;
    while (!c.empty() && c.back() == CD(0)) c.pop_back();
    if (c.size() < 2) fail("BadParameters", "find_roots needs degree >= 1");

    double scale = 0;
    for (CD v : c) scale = std::max(scale, std::abs(v));

    RootSet out;
    out.scale = scale;
    out.tol = opt.tol;

    // Exact zero coefficients at the bottom are roots at the origin.
    std::size_t origin_roots = 0;
    while (origin_roots + 1 < c.size() && c[origin_roots] == CD(0)) ++origin_roots;
    for (std::size_t i = 0; i < origin_roots; ++i) out.roots.emplace_back(0.0, 0.0);
    if (origin_roots) c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(origin_roots));

    const std::size_t m = c.size() - 1;
    std::vector<CD> monic(c);
    for (CD& v : monic) v /= c.back();

    if (m == 1) {
        out.roots.push_back(-monic[0]);
    } else if (m == 2) {
        CD b = monic[1], a0 = monic[0];
        CD disc = std::sqrt(b * b - 4.0 * a0);
        CD r1 = (-b + disc) / 2.0;
        CD r2 = (-b - disc) / 2.0;
        // Pick the larger root first, divide for the smaller one when possible.
        if (std::abs(r1) < std::abs(r2)) std::swap(r1, r2);
        if (std::abs(r1) > 1e-300) r2 = a0 / r1;
        out.roots.push_back(r1);
        out.roots.push_back(r2);
    } else {
        std::mt19937 rng(opt.seed);
        std::uniform_real_distribution<double> jitter(0.0, 1.0);
        double radius = std::pow(std::max(std::abs(monic[0]), 1e-12), 1.0 / static_cast<double>(m));
        double cauchy = 0;
        for (std::size_t i = 0; i < m; ++i) cauchy = std::max(cauchy, std::abs(monic[i]));
        radius = std::clamp(radius, 0.3, 1.0 + cauchy);
        double phase = 2.0 * std::numbers::pi * jitter(rng);

        std::vector<CD> z(m);
        for (std::size_t j = 0; j < m; ++j) {
            double angle = phase + 0.37 + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
            z[j] = std::polar(radius * (1.0 + 0.05 * static_cast<double>(j) / static_cast<double>(m)), angle);
        }

        if (!aberth(monic, z, opt)) {
            z = companion_eigenvalues(monic);
            polish(monic, z);
        }
        out.roots.insert(out.roots.end(), z.begin(), z.end());
    }

    double residual = 0;
    for (CD r : out.roots) residual = std::max(residual, std::abs(horner(coeffs, r)));
    out.residual = residual;

    // Multiple roots cap plain backward-error analysis at ~eps^(1/k); accept a
    // residual consistent with coefficient-level noise, else report failure.
    double budget = std::max(1e-8, opt.tol) * scale;
    double growth = 1.0;
    for (CD r : out.roots) growth = std::max(growth, std::pow(1.0 + std::abs(r), 2.0));
    if (residual > budget * growth * 1e4)
        fail("NoConvergence", "root residual " + std::to_string(residual) + " exceeds budget (scale " +
                                  std::to_string(scale) + ")");
    return out;
}

}  // namespace palinform
