#include "palinform/codes.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "palinform/error.hpp"
#include "palinform/rootloc.hpp"
#include "palinform/rootsolver.hpp"

namespace palinform::codes {

namespace {

using CD = std::complex<double>;

Rational quad_to_rational(const QuadRat& v, const char* who) {
    if (!v.is_rational()) fail("BadParameters", std::string(who) + " needs rational coefficients");
    return v.rational_part();
}

// Exact dense Gaussian elimination for (possibly overdetermined) systems.
struct LinSolve {
    bool consistent = true;
    int rank = 0;
    int kernel_dim = 0;
    std::vector<Rational> solution;
};

LinSolve solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(row)]);
        std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(row)]);
        Rational lead = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int c = col; c < cols; ++c) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] /= lead;
        rhs[static_cast<std::size_t>(row)] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(row)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    LinSolve out;
    out.rank = row;
    out.kernel_dim = cols - row;
    for (int r = row; r < rows; ++r)
        if (rhs[static_cast<std::size_t>(r)] != 0) out.consistent = false;
    if (!out.consistent) return out;
    out.solution.assign(static_cast<std::size_t>(cols), Rational(0));
    for (int r = 0; r < row; ++r)
        out.solution[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] =
            rhs[static_cast<std::size_t>(r)];
    return out;
}

Rational krawtchouk(int v, int w, int n, long q) {
    Rational sum = 0;
    for (int j = 0; j <= v; ++j) {
        if (j > w || v - j > n - w) continue;
        Rational term = Rational(binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(j))) *
                        Rational(binomial(static_cast<unsigned long>(n - w), static_cast<unsigned long>(v - j))) *
                        rational_pow(Rational(q - 1), v - j);
        if (j % 2) term = -term;
        sum += term;
    }
    return sum;
}

}  // namespace

WeightEnumerator WeightEnumerator::from_rationals(int n, long q, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != n + 1) fail("BadParameters", "enumerator needs n+1 coefficients");
    WeightEnumerator F;
    F.n = n;
    F.q = q;
    F.A.reserve(coeffs.size());
    for (Rational& c : coeffs) F.A.emplace_back(std::move(c));
    return F;
}

std::string type_name(CodeType t) {
    switch (t) {
        case CodeType::I: return "I";
        case CodeType::II: return "II";
        case CodeType::III: return "III";
        case CodeType::IV: return "IV";
    }
    return "?";
}

CodeType type_from_name(const std::string& name) {
    if (name == "I") return CodeType::I;
    if (name == "II") return CodeType::II;
    if (name == "III") return CodeType::III;
    if (name == "IV") return CodeType::IV;
    fail("NoMatchingType", "unknown type '" + name + "'");
}

TypeTag tag_for(CodeType t) {
    switch (t) {
        case CodeType::I: return {t, 2, 2};
        case CodeType::II: return {t, 2, 4};
        case CodeType::III: return {t, 3, 3};
        case CodeType::IV: return {t, 4, 2};
    }
    fail("NoMatchingType", "unknown type");
}

int min_distance(const WeightEnumerator& F) {
    for (int i = 1; i <= F.n; ++i)
        if (!F.A[static_cast<std::size_t>(i)].is_zero()) return i;
    return F.n + 1;
}

WeightEnumerator mds_enumerator(int n, int d, long q) {
    if (n < 1 || d < 1 || d > n + 1 || q < 2) fail("BadParameters", "mds_enumerator needs 1 <= d <= n+1, q >= 2");
    WeightEnumerator F;
    F.n = n;
    F.q = q;
    F.A.assign(static_cast<std::size_t>(n) + 1, QuadRat(Rational(0)));
    F.A[0] = QuadRat(Rational(1));
    for (int w = d; w <= n; ++w) {
        Rational inner = 0;
        for (int j = 0; j <= w - d; ++j) {
            Rational term = Rational(binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(j))) *
                            (rational_pow(Rational(q), w - d + 1 - j) - 1);
            if (j % 2) term = -term;
            inner += term;
        }
        F.A[static_cast<std::size_t>(w)] =
            QuadRat(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(w))) * inner);
    }
    return F;
}

std::vector<Rational> mds_expand(const WeightEnumerator& F) {
    const int n = F.n;
    const int d = min_distance(F);
    std::vector<Rational> fw(static_cast<std::size_t>(n) + 1);
    for (int w = 0; w <= n; ++w) fw[static_cast<std::size_t>(w)] = quad_to_rational(F.A[static_cast<std::size_t>(w)], "mds_expand");

    // Triangular in w: M_{n,i} has its first y-term at w = i with value C(n,i)(q-1).
    std::vector<WeightEnumerator> basis;
    std::vector<Rational> coords;
    for (int i = d; i <= n; ++i) basis.push_back(mds_enumerator(n, i, F.q));
    for (int w = d; w <= n; ++w) {
        Rational acc = fw[static_cast<std::size_t>(w)];
        for (int i = d; i < w; ++i)
            acc -= coords[static_cast<std::size_t>(i - d)] *
                   quad_to_rational(basis[static_cast<std::size_t>(i - d)].A[static_cast<std::size_t>(w)], "mds_expand");
        Rational diag = quad_to_rational(basis[static_cast<std::size_t>(w - d)].A[static_cast<std::size_t>(w)], "mds_expand");
        require(diag != 0, "SingularSystem", "MDS basis lost triangularity (implementation fault)");
        coords.push_back(acc / diag);
    }
    // Coordinate on M_{n,n+1} = x^n from the w = 0 row (every M_{n,i} has A_0 = 1).
    Rational top = fw[0];
    for (const Rational& c : coords) top -= c;
    coords.push_back(top);
    return coords;  // (a_0, ..., a_{n+1-d})
}

WeightEnumerator macwilliams(const WeightEnumerator& F) {
    const int n = F.n;
    WeightEnumerator out;
    out.n = n;
    out.q = F.q;
    out.A.assign(static_cast<std::size_t>(n) + 1, QuadRat(Rational(0)));
    QuadRat norm = QuadRat(1) / QuadRat::half_power(F.q, n);  // q^{-n/2}
    for (int v = 0; v <= n; ++v) {
        QuadRat acc = QuadRat(Rational(0));
        for (int w = 0; w <= n; ++w) {
            if (F.A[static_cast<std::size_t>(w)].is_zero()) continue;
            acc += F.A[static_cast<std::size_t>(w)] * QuadRat(krawtchouk(v, w, n, F.q));
        }
        out.A[static_cast<std::size_t>(v)] = acc * norm;
    }
    return out;
}

bool is_virtually_self_dual(const WeightEnumerator& F) {
    if (F.n % 2 != 0) fail("OddLength", "virtual self-duality needs even length");
    WeightEnumerator M = macwilliams(F);
    for (int i = 0; i <= F.n; ++i)
        if (M.A[static_cast<std::size_t>(i)] != F.A[static_cast<std::size_t>(i)]) return false;
    return true;
}

int genus(const WeightEnumerator& F) {
    if (F.n % 2 != 0) fail("OddLength", "genus needs even length");
    return F.n / 2 + 1 - min_distance(F);
}

ZetaPolynomial zeta_polynomial(const WeightEnumerator& F) {
    const int n = F.n;
    const long q = F.q;
    if (q < 2) fail("BadParameters", "zeta_polynomial needs q > 1");
    if (!(F.A[0] == QuadRat(1))) fail("BadParameters", "virtual weight enumerator needs A_0 = 1");
    const int d = min_distance(F);
    if (d > n) fail("BadParameters", "zeta_polynomial needs d <= n");

    // geo_j = (q^{j+1}-1)/(q-1); E_{s,w} = C(n,w) (-1)^{s-(n-w)} C(w, s-(n-w)).
    auto geo = [&](int j) -> Rational { return (rational_pow(Rational(q), j + 1) - 1) / Rational(q - 1); };
    auto series_coeff = [&](int w, int u) -> Rational {  // [x^{n-w} y^w T^u] of E(T)/((1-T)(1-qT))
        Rational acc = 0;
        for (int s = n - w; s <= n - w + w && s <= u; ++s) {
            int k = s - (n - w);
            Rational e = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(w))) *
                         Rational(binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(k)));
            if (k % 2) e = -e;
            acc += e * geo(u - s);
        }
        return acc;
    };

    auto build = [&](int deg) {
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(deg) + 1, Rational(0)));
        std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int w = 0; w <= n; ++w) {
            for (int r = 0; r <= deg; ++r) {
                int u = n - d - r;
                if (u < 0) continue;
                m[static_cast<std::size_t>(w)][static_cast<std::size_t>(r)] = series_coeff(w, u);
            }
            Rational fw = quad_to_rational(F.A[static_cast<std::size_t>(w)], "zeta_polynomial");
            if (w == 0) fw -= 1;  // F - x^n
            rhs[static_cast<std::size_t>(w)] = fw / Rational(q - 1);
        }
        return solve_exact(std::move(m), std::move(rhs));
    };

    LinSolve solved = build(n - d);
    if (!solved.consistent) {
        LinSolve extended = build(n - d + 1);
        if (extended.consistent)
            fail("InconsistentSystem",
                 "zeta system needs degree n-d+1 (degree-bound ambiguity); n-d is inconsistent");
        fail("InconsistentSystem", "zeta system inconsistent at both degree bounds");
    }
    require(solved.kernel_dim == 0, "InconsistentSystem", "zeta polynomial is not unique");

    ZetaPolynomial P;
    P.q = q;
    P.d = d;
    P.n = n;
    P.a = solved.solution;
    while (!P.a.empty() && P.a.back() == 0) P.a.pop_back();
    if (P.a.empty()) P.a.push_back(Rational(0));

    // Independent witness: the MDS-basis coordinates a_0..a_{n-d} must agree
    // with the generating-function solve (they do whenever the degree bound
    // n-d suffices; a mismatch flags the n-d vs n-d+1 ambiguity).
    std::vector<Rational> coords = mds_expand(F);
    for (int j = 0; j <= n - d; ++j) {
        Rational pj = j < static_cast<int>(P.a.size()) ? P.a[static_cast<std::size_t>(j)] : Rational(0);
        if (coords[static_cast<std::size_t>(j)] != pj)
            fail("InconsistentSystem", "MDS-expansion coordinates disagree with the zeta solve at T^" +
                                           std::to_string(j));
    }
    return P;
}

PolyX normalized_zeta(const ZetaPolynomial& P) {
    std::vector<ExactComplex> coeffs;
    coeffs.reserve(P.a.size());
    for (std::size_t i = 0; i < P.a.size(); ++i) {
        QuadRat scale = QuadRat::half_power(P.q, -static_cast<long>(i));  // q^{-i/2}
        coeffs.emplace_back(QuadRat(P.a[i]) * scale, QuadRat(Rational(0)));
    }
    return PolyX(std::move(coeffs));
}

bool self_reciprocal_check(const ZetaPolynomial& P) {
    PolyX p = normalized_zeta(P);
    if (p.is_zero()) return false;
    const int r = p.degree();
    for (int i = 0; i <= r; ++i)
        if (p[i] != p[r - i]) return false;
    return true;
}

double functional_equation_residual(const ZetaPolynomial& P, int genus_value,
                                    const std::vector<CD>& samples) {
    std::vector<CD> coeffs;
    coeffs.reserve(P.a.size());
    for (const Rational& a : P.a) coeffs.emplace_back(to_double(a), 0.0);
    auto zeta = [&](CD t) {
        CD num = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) num = num * t + *it;
        return num / ((1.0 - t) * (1.0 - static_cast<double>(P.q) * t));
    };
    double worst = 0;
    const double q = static_cast<double>(P.q);
    for (CD t : samples) {
        CD lhs = zeta(t);
        CD rhs = std::pow(q, genus_value - 1) * std::pow(t, 2 * genus_value - 2) * zeta(1.0 / (q * t));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

RhReport rh_check(const ZetaPolynomial& P, double tol) {
    RhReport rep;
    rep.radius = 1.0 / std::sqrt(static_cast<double>(P.q));
    if (static_cast<int>(P.a.size()) - 1 < 1) fail("DegenerateZeta", "rh_check needs deg P >= 1");
    std::vector<CD> coeffs;
    coeffs.reserve(P.a.size());
    for (const Rational& a : P.a) coeffs.emplace_back(to_double(a), 0.0);
    RootSet rs = find_roots(coeffs);
    rep.zeros = rs.roots;
    for (const CD& z : rs.roots)
        rep.max_radius_dev = std::max(rep.max_radius_dev, std::abs(std::abs(z) - rep.radius));
    rep.pass = rep.max_radius_dev <= tol;
    return rep;
}

DFromZerosReport d_from_zeros_identity(const WeightEnumerator& F) {
    ZetaPolynomial P = zeta_polynomial(F);
    if (P.degree() < 1) fail("DegenerateZeta", "d_from_zeros_identity needs a nonconstant zeta polynomial");
    if (P.a[0] == 0) fail("DegenerateZeta", "zeta polynomial vanishes at 0");

    DFromZerosReport rep;
    rep.d = P.d;
    rep.sum_inverse_zeros = -P.a[1] / P.a[0];

    Rational ad = quad_to_rational(F.A[static_cast<std::size_t>(P.d)], "d_from_zeros");
    require(ad != 0, "DegenerateZeta", "A_d vanishes");
    Rational ad1 = P.d + 1 <= F.n ? quad_to_rational(F.A[static_cast<std::size_t>(P.d + 1)], "d_from_zeros")
                                  : Rational(0);
    rep.rhs_exact = Rational(P.q) - rep.sum_inverse_zeros -
                    (ad1 / ad) * Rational(P.d + 1) / Rational(F.n - P.d);

    std::vector<CD> coeffs;
    for (const Rational& a : P.a) coeffs.emplace_back(to_double(a), 0.0);
    RootSet rs = find_roots(coeffs);
    CD acc = 0;
    for (const CD& z : rs.roots) acc += 1.0 / z;
    rep.sum_inverse_numeric = acc.real();

    rep.identity_ok = (rep.rhs_exact == P.d) &&
                      std::abs(rep.sum_inverse_numeric - to_double(rep.sum_inverse_zeros)) < 1e-8;
    rep.inequality_ok = Rational(P.d) <= Rational(P.q) - rep.sum_inverse_zeros;
    return rep;
}

TypeTag type_classify(const WeightEnumerator& F) {
    if (!is_virtually_self_dual(F)) fail("NoMatchingType", "type table applies to virtually self-dual enumerators");
    Integer b = 0;
    for (int i = 1; i <= F.n; ++i)
        if (!F.A[static_cast<std::size_t>(i)].is_zero()) mpz_gcd(b.get_mpz_t(), b.get_mpz_t(), Integer(i).get_mpz_t());
    long support_gcd = b.get_si();
    if (support_gcd <= 1) fail("NotDivisible", "support is not b-divisible for any b > 1");

    if (F.q == 2 && support_gcd % 4 == 0 && F.n % 8 == 0) return tag_for(CodeType::II);
    if (F.q == 2 && support_gcd % 2 == 0 && F.n % 2 == 0) return tag_for(CodeType::I);
    if (F.q == 3 && support_gcd % 3 == 0 && F.n % 4 == 0) return tag_for(CodeType::III);
    if (F.q == 4 && support_gcd % 2 == 0 && F.n % 2 == 0) return tag_for(CodeType::IV);
    fail("NoMatchingType", "no row of the type table matches (q, b, n)");
}

int msd_bound(CodeType type, int n) {
    switch (type) {
        case CodeType::I: return 2 * (n / 8) + 2;
        case CodeType::II: return 4 * (n / 24) + 4;
        case CodeType::III: return 3 * (n / 12) + 3;
        case CodeType::IV: return 2 * (n / 6) + 2;
    }
    fail("NoMatchingType", "unknown type");
}

int msd_bound(const TypeTag& tag, int n) { return msd_bound(tag.type, n); }

bool admissible_length(CodeType type, int n) {
    switch (type) {
        case CodeType::I: return n % 2 == 0 && n >= 2;
        case CodeType::II: return n % 8 == 0 && n >= 8;
        case CodeType::III: return n % 4 == 0 && n >= 4;
        case CodeType::IV: return n % 2 == 0 && n >= 2;
    }
    return false;
}

WeightEnumerator extremal_enumerator(CodeType type, int n) {
    TypeTag tag = tag_for(type);
    if (!admissible_length(type, n))
        fail("BadParameters", "length " + std::to_string(n) + " is not admissible for type " + type_name(type));
    const int d_max = msd_bound(type, n);

    // Unknowns: A_i at indices i in bZ with d_max <= i <= n.
    std::vector<int> idx;
    for (int i = tag.b; i <= n; i += tag.b)
        if (i >= d_max) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    if (k == 0) fail("NoSolution", "no admissible support above the bound");

    // MacWilliams fixed point: for each v, sum_w A_w K_v(w) q^{-n/2} = A_v.
    // q^{n/2} is rational (n even for every type).
    Rational qn2 = rational_pow(Rational(tag.q), n / 2);
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int v = 0; v <= n; ++v) {
        for (int j = 0; j < k; ++j) {
            Rational coeff = krawtchouk(v, idx[static_cast<std::size_t>(j)], n, tag.q);
            if (idx[static_cast<std::size_t>(j)] == v) coeff -= qn2;  // move A_v across
            m[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = coeff;
        }
        // contribution of A_0 = 1
        Rational c0 = krawtchouk(v, 0, n, tag.q);
        if (v == 0) c0 -= qn2;
        rhs[static_cast<std::size_t>(v)] = -c0;
    }

    LinSolve solved = solve_exact(std::move(m), std::move(rhs));
    if (!solved.consistent) fail("NoSolution", "extremal system inconsistent");
    if (solved.kernel_dim != 0)
        fail("NonUnique", "extremal solution space has dimension " + std::to_string(solved.kernel_dim));

    WeightEnumerator F;
    F.n = n;
    F.q = tag.q;
    F.A.assign(static_cast<std::size_t>(n) + 1, QuadRat(Rational(0)));
    F.A[0] = QuadRat(Rational(1));
    for (int j = 0; j < k; ++j)
        F.A[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = QuadRat(solved.solution[static_cast<std::size_t>(j)]);

    require(min_distance(F) == d_max, "NoSolution", "extremal solve did not reach the bound");
    require(is_virtually_self_dual(F), "NoSolution", "extremal solve is not MacWilliams-fixed");
    return F;
}

bool is_extremal(const WeightEnumerator& F, const TypeTag& tag) {
    return min_distance(F) == msd_bound(tag, F.n);
}

namespace {

ScanRow scan_instance(CodeType type, int n) {
    ScanRow row;
    row.type = type;
    row.n = n;
    try {
        WeightEnumerator F = extremal_enumerator(type, n);
        row.d = min_distance(F);
        row.extremal = is_extremal(F, tag_for(type));

        ZetaPolynomial P = zeta_polynomial(F);
        row.P = P.a;
        row.self_reciprocal = self_reciprocal_check(P);
        require(row.self_reciprocal, "NotSelfDual", "normalized zeta of a self-dual enumerator must be palindromic");

        if (P.degree() >= 1) {
            RhReport rh = rh_check(P, 1e-7);
            row.rh_pass = rh.pass;
            row.max_radius_dev = rh.max_radius_dev;
        } else {
            row.rh_pass = true;  // no zeros
            row.max_radius_dev = 0;
        }

        PolyX p = normalized_zeta(P);
        if (p.degree() % 2 == 0 && p.degree() >= 0)
            row.symmetric_increasing = rootloc::symmetric_increasing(p).holds;

        row.coeffs_nonneg_integral = true;
        for (const QuadRat& a : F.A) {
            if (!a.is_rational() || a.rational_part() < 0 || a.rational_part().get_den() != 1)
                row.coeffs_nonneg_integral = false;
        }
    } catch (const Error& e) {
        row.error = e.code();
    }
    return row;
}

}  // namespace

std::vector<ScanRow> conjecture_scan(const std::vector<CodeType>& types, int n_max, int jobs) {
    if (n_max > 200) fail("BadParameters", "scan limit exceeds the documented desk-scale bound (n <= 200)");
    std::vector<std::pair<CodeType, int>> instances;
    for (CodeType type : types)
        for (int n = 2; n <= n_max; ++n)
            if (admissible_length(type, n)) instances.emplace_back(type, n);

    std::vector<ScanRow> rows(instances.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            rows[i] = scan_instance(instances[i].first, instances[i].second);
        return rows;
    }
    std::vector<std::future<ScanRow>> futures;
    futures.reserve(instances.size());
    for (const auto& [type, n] : instances)
        futures.push_back(std::async(std::launch::async, scan_instance, type, n));
    for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
    return rows;
}

}  // namespace palinform::codes
