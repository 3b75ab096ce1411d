#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "palinform/poly.hpp"
#include "palinform/quadrat.hpp"

namespace palinform::codes {

// Homogeneous enumerator sum_i A_i x^{n-i} y^i. Coefficients live in QuadRat so
// MacWilliams images (which carry q^{n/2}) stay exact for every n.
struct WeightEnumerator {
    int n = 0;
    long q = 2;
    std::vector<QuadRat> A;  // size n+1

    static WeightEnumerator from_rationals(int n, long q, std::vector<Rational> coeffs);
};

struct ZetaPolynomial {
    std::vector<Rational> a;  // low-to-high, trimmed
    long q = 2;
    int d = 1;
    int n = 0;

    int degree() const { return static_cast<int>(a.size()) - 1; }
};

enum class CodeType { I, II, III, IV };

struct TypeTag {
    CodeType type = CodeType::I;
    long q = 2;
    int b = 2;
};

std::string type_name(CodeType t);
CodeType type_from_name(const std::string& name);
TypeTag tag_for(CodeType t);

// Least i >= 1 with A_i != 0; n+1 when the support is {0} (the x^n case).
int min_distance(const WeightEnumerator& F);

// Weight enumerator of an MDS code of length n and minimum distance d over
// F_q; d = n+1 gives x^n.
WeightEnumerator mds_enumerator(int n, int d, long q);

// Coordinates (a_0, ..., a_{n+1-d}) of F over {M_{n,d}, ..., M_{n,n}, M_{n,n+1}}.
std::vector<Rational> mds_expand(const WeightEnumerator& F);

// (x, y) -> ((x + (q-1)y)/sqrt q, (x - y)/sqrt q); exact, an exact involution.
WeightEnumerator macwilliams(const WeightEnumerator& F);

bool is_virtually_self_dual(const WeightEnumerator& F);
int genus(const WeightEnumerator& F);  // n/2 + 1 - d

// Unique P of degree <= n-d with [T^{n-d}] (y(1-T)+xT)^n/((1-T)(1-qT)) P(T)
// = (F - x^n)/(q-1), solved exactly over the rationals.
ZetaPolynomial zeta_polynomial(const WeightEnumerator& F);

// p(T) = P(T / sqrt q), exact in Q(sqrt q).
PolyX normalized_zeta(const ZetaPolynomial& P);
bool self_reciprocal_check(const ZetaPolynomial& P);

// max |Z(T) - q^{g-1} T^{2g-2} Z(1/(qT))| over sample points off the poles.
double functional_equation_residual(const ZetaPolynomial& P, int genus_value,
                                    const std::vector<std::complex<double>>& samples);

struct RhReport {
    bool pass = false;
    double max_radius_dev = 0;  // max | |T_i| - 1/sqrt q |
    double radius = 0;          // 1/sqrt q
    std::vector<std::complex<double>> zeros;
};

RhReport rh_check(const ZetaPolynomial& P, double tol = 1e-9);

struct DFromZerosReport {
    int d = 0;
    Rational sum_inverse_zeros;   // sum alpha_i^{-1} = -a_1/a_0, exact
    Rational rhs_exact;           // q - sum - (A_{d+1}/A_d)(d+1)/(n-d)
    double sum_inverse_numeric = 0;  // same sum from the numeric zeros
    bool identity_ok = false;     // d == rhs (exact, and numerically to 1e-8)
    bool inequality_ok = false;   // d <= q - sum
};

DFromZerosReport d_from_zeros_identity(const WeightEnumerator& F);

TypeTag type_classify(const WeightEnumerator& F);
int msd_bound(CodeType type, int n);
int msd_bound(const TypeTag& tag, int n);
bool admissible_length(CodeType type, int n);

// The unique extremal enumerator of the given type and length, by exact linear
// solve on the b-divisible MacWilliams-fixed subspace with A_i = 0 below the
// bound. NoSolution / NonUnique report the solution-space dimension.
WeightEnumerator extremal_enumerator(CodeType type, int n);

bool is_extremal(const WeightEnumerator& F, const TypeTag& tag);

struct ScanRow {
    CodeType type = CodeType::I;
    int n = 0;
    int d = 0;
    bool extremal = false;
    bool self_reciprocal = false;   // asserted (must hold)
    bool rh_pass = false;           // reported
    double max_radius_dev = 0;
    bool symmetric_increasing = false;  // reported, on p(T)
    bool coeffs_nonneg_integral = false;
    std::vector<Rational> P;
    std::string error;  // per-instance failure, scan continues
};

// Builds every extremal enumerator of the given types with admissible n <=
// n_max and runs the zeta pipeline on it. Conjecture outcomes are reported,
// never asserted; self-reciprocity is asserted.
std::vector<ScanRow> conjecture_scan(const std::vector<CodeType>& types, int n_max, int jobs = 1);

}  // namespace palinform::codes
