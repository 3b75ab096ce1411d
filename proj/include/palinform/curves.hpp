#pragma once

#include <string>
#include <vector>

#include "palinform/polycore.hpp"

namespace palinform::curves {

enum class Group { Dihedral, A4, S4, A5 };

std::string group_name(Group g);
Group group_from_name(const std::string& name);

struct CurveSpec {
    int level = 2;                   // n in y^n = f(x) (or y^n = x f(x))
    Group group = Group::Dihedral;
    int m = 2;                       // dihedral parameter, m >= 2
    int case_index = 1;              // 1-based, top-to-bottom per group case list
    std::vector<Rational> lambdas;   // the delta parametric factors
};

struct CurveEquation {
    int level = 2;
    Group group = Group::Dihedral;
    int case_index = 1;
    bool x_factor = false;           // true when the equation is y^n = x * f(x)
    PolyX rhs;                       // f(x)
    std::vector<std::string> factors;  // tags of the constituent factors
};

struct CaseDescriptor {
    Group group;
    int case_index;
    std::vector<std::string> factors;  // parametric family tag first when present
    bool x_factor;
};

// All 28 cases (6 dihedral, 6 A4, 8 S4, 8 A5), in display order.
const std::vector<CaseDescriptor>& case_table();
int case_count(Group g);

CurveEquation dihedral_form(const CurveSpec& spec);
CurveEquation a4_form(const CurveSpec& spec);
CurveEquation s4_form(const CurveSpec& spec);
CurveEquation a5_form(const CurveSpec& spec);
CurveEquation build(const CurveSpec& spec);  // dispatches on spec.group

// Named constant factors from the case lists.
PolyX psi_factor();             // x^4 + 2 i sqrt(3) x^2 + 1
PolyX octic_factor();           // x^8 + 14 x^4 + 1
PolyX twelveic_factor();        // x^12 - 33 x^8 - 33 x^4 + 1
PolyX a5_q_factor();            // x^30 + 522 x^25 - 10005 x^20 - 10005 x^10 - 522 x^5 + 1
PolyX a5_r_factor();            // x^20 - 228 x^15 + 494 x^10 + 228 x^5 + 1
PolyX a5_w_factor();            // x^10 + 11 x^5 - 1
PolyX dihedral_factor(int m, const Rational& lambda);  // x^{2m} + lambda x^m + 1
PolyX a4_g_factor(const Rational& lambda);
PolyX s4_m_factor(const Rational& lambda);
PolyX a5_lambda_factor(const Rational& lambda);

struct TheoremReport {
    polycore::Classification<ExactComplex> classification;
    std::string expected;                       // "palindromic-or-antipalindromic" | "quasi-palindromic"
    bool claim_ok = false;
    std::vector<std::string> antipalindromic_forcers;  // x^m-1 family factors present
};

// Classifies eq.rhs and asserts the theorem's claim for the group; throws
// ClaimViolated (naming the offending coefficient index) on failure.
TheoremReport verify_theorem(const CurveEquation& eq);

}  // namespace palinform::curves
