#pragma once

#include <complex>
#include <vector>

namespace palinform {

struct RootOptions {
    double tol = 1e-12;      // convergence threshold on Aberth corrections
    int max_iters = 400;
    unsigned seed = 0;       // fixed seed -> deterministic starting circle
};

struct RootSet {
    std::vector<std::complex<double>> roots;  // all deg(p) roots, with multiplicity
    double residual = 0;                      // max |p(root)| over the returned roots
    double scale = 0;                         // max |a_i|; residual <= tol_effective * scale
    double tol = 0;                           // the tolerance the solve ran with
};

// Simultaneous (Aberth-Ehrlich) iteration on the monic normalization, with a
// companion-matrix eigenvalue fallback. Coefficients low-to-high; deg >= 1.
RootSet find_roots(const std::vector<std::complex<double>>& coeffs, RootOptions opt = {});

}  // namespace palinform
