#include "palinform/curves.hpp"

#include <initializer_list>
#include <utility>

namespace palinform::curves {

namespace {

PolyX sparse(int degree, std::initializer_list<std::pair<int, ExactComplex>> terms) {
    std::vector<ExactComplex> c(static_cast<std::size_t>(degree) + 1, ExactComplex(0));
    for (const auto& [exp, value] : terms) c[static_cast<std::size_t>(exp)] = value;
    return PolyX(std::move(c));
}

ExactComplex rat(long v) { return ExactComplex(Rational(v)); }
ExactComplex rat(const Rational& v) { return ExactComplex(v); }

PolyX x_power_minus_one(int e) { return sparse(e, {{e, rat(1)}, {0, rat(-1)}}); }

}  // namespace

std::string group_name(Group g) {
    switch (g) {
        case Group::Dihedral: return "D";
        case Group::A4: return "A4";
        case Group::S4: return "S4";
        case Group::A5: return "A5";
    }
    fail("BadParameters", "unknown group");
}

Group group_from_name(const std::string& name) {
    if (name == "D" || name == "Dm" || name == "dihedral") return Group::Dihedral;
    if (name == "A4") return Group::A4;
    if (name == "S4") return Group::S4;
    if (name == "A5") return Group::A5;
    fail("BadParameters", "unknown group name '" + name + "'");
}

int case_count(Group g) {
    switch (g) {
        case Group::Dihedral: return 6;
        case Group::A4: return 6;
        case Group::S4: return 8;
        case Group::A5: return 8;
    }
    return 0;
}

PolyX psi_factor() {
    return sparse(4, {{4, rat(1)}, {2, ExactComplex(QuadRat(0), QuadRat(Rational(2), Rational(1), 3))}, {0, rat(1)}});
}

PolyX octic_factor() { return sparse(8, {{8, rat(1)}, {4, rat(14)}, {0, rat(1)}}); }

PolyX twelveic_factor() {
    return sparse(12, {{12, rat(1)}, {8, rat(-33)}, {4, rat(-33)}, {0, rat(1)}});
}

PolyX a5_q_factor() {
    return sparse(30, {{30, rat(1)}, {25, rat(522)}, {20, rat(-10005)}, {10, rat(-10005)}, {5, rat(-522)}, {0, rat(1)}});
}

PolyX a5_r_factor() {
    return sparse(20, {{20, rat(1)}, {15, rat(-228)}, {10, rat(494)}, {5, rat(228)}, {0, rat(1)}});
}

PolyX a5_w_factor() { return sparse(10, {{10, rat(1)}, {5, rat(11)}, {0, rat(-1)}}); }

PolyX dihedral_factor(int m, const Rational& lambda) {
    return sparse(2 * m, {{2 * m, rat(1)}, {m, rat(lambda)}, {0, rat(1)}});
}

PolyX a4_g_factor(const Rational& lambda) {
    return sparse(12, {{12, rat(1)},
                       {10, rat(-lambda)},
                       {8, rat(-33)},
                       {6, rat(2 * lambda)},
                       {4, rat(-33)},
                       {2, rat(-lambda)},
                       {0, rat(1)}});
}

PolyX s4_m_factor(const Rational& lambda) {
    return sparse(24, {{24, rat(1)},
                       {20, rat(lambda)},
                       {16, rat(759 - 4 * lambda)},
                       {12, rat(2 * (3 * lambda + 1228))},
                       {8, rat(759 - 4 * lambda)},
                       {4, rat(lambda)},
                       {0, rat(1)}});
}

PolyX a5_lambda_factor(const Rational& lambda) {
    Rational a1 = lambda - 684;
    Rational a2 = 55 * lambda + 157434;
    Rational a3 = 1205 * lambda - 12527460;
    Rational a4 = 13090 * lambda + 77460495;
    Rational a5 = 69585 * lambda - 130689144;
    Rational a6 = 134761 * lambda - 33211924;
    return sparse(60, {{60, rat(1)},
                       {55, rat(a1)},
                       {50, rat(a2)},
                       {45, rat(a3)},
                       {40, rat(a4)},
                       {35, rat(a5)},
                       {30, rat(a6)},
                       {25, rat(-a5)},
                       {20, rat(a4)},
                       {15, rat(-a3)},
                       {10, rat(a2)},
                       {5, rat(-a1)},
                       {0, rat(1)}});
}

const std::vector<CaseDescriptor>& case_table() {
    static const std::vector<CaseDescriptor> table = {
        {Group::Dihedral, 1, {"F"}, false},
        {Group::Dihedral, 2, {"x^m-1", "F"}, false},
        {Group::Dihedral, 3, {"F"}, true},
        {Group::Dihedral, 4, {"x^2m-1", "F"}, false},
        {Group::Dihedral, 5, {"x^m-1", "F"}, true},
        {Group::Dihedral, 6, {"x^2m-1", "F"}, true},

        {Group::A4, 1, {"G"}, false},
        {Group::A4, 2, {"psi", "G"}, false},
        {Group::A4, 3, {"x^8+14x^4+1", "G"}, false},
        {Group::A4, 4, {"x^4-1", "G"}, true},
        {Group::A4, 5, {"x^4-1", "psi", "G"}, true},
        {Group::A4, 6, {"x^4-1", "x^8+14x^4+1", "G"}, true},

        {Group::S4, 1, {"M"}, false},
        {Group::S4, 2, {"x^8+14x^4+1", "M"}, false},
        {Group::S4, 3, {"x^4-1", "M"}, true},
        {Group::S4, 4, {"x^8+14x^4+1", "x^4-1", "M"}, true},
        {Group::S4, 5, {"x^12-33x^8-33x^4+1", "M"}, false},
        {Group::S4, 6, {"x^12-33x^8-33x^4+1", "x^8+14x^4+1", "M"}, false},
        {Group::S4, 7, {"x^12-33x^8-33x^4+1", "x^4-1", "M"}, true},
        {Group::S4, 8, {"x^12-33x^8-33x^4+1", "x^8+14x^4+1", "x^4-1", "M"}, true},

        {Group::A5, 1, {"Lambda"}, false},
        {Group::A5, 2, {"x^10+11x^5-1", "Lambda"}, true},
        {Group::A5, 3, {"x^20-228x^15+494x^10+228x^5+1", "x^10+11x^5-1", "Lambda"}, true},
        {Group::A5, 4, {"x^20-228x^15+494x^10+228x^5+1", "Lambda"}, false},
        {Group::A5, 5, {"Q", "Lambda"}, false},
        {Group::A5, 6, {"x^10+11x^5-1", "psi", "Lambda"}, true},
        {Group::A5, 7, {"x^20-228x^15+494x^10+228x^5+1", "psi", "Lambda"}, false},
        {Group::A5, 8, {"x^20-228x^15+494x^10+228x^5+1", "x^10+11x^5-1", "psi", "Lambda"}, true},
    };
    return table;
}

namespace {

const CaseDescriptor& find_case(Group g, int index) {
    for (const CaseDescriptor& c : case_table())
        if (c.group == g && c.case_index == index) return c;
    fail("BadCaseIndex", group_name(g) + " has no case " + std::to_string(index));
}

PolyX named_factor(const std::string& tag, const CurveSpec& spec) {
    if (tag == "x^m-1") return x_power_minus_one(spec.m);
    if (tag == "x^2m-1") return x_power_minus_one(2 * spec.m);
    if (tag == "x^4-1") return x_power_minus_one(4);
    if (tag == "psi") return psi_factor();
    if (tag == "x^8+14x^4+1") return octic_factor();
    if (tag == "x^12-33x^8-33x^4+1") return twelveic_factor();
    if (tag == "Q") return a5_q_factor();
    if (tag == "x^20-228x^15+494x^10+228x^5+1") return a5_r_factor();
    if (tag == "x^10+11x^5-1") return a5_w_factor();
    fail("BadCaseIndex", "unknown factor tag '" + tag + "'");
}

CurveEquation assemble(const CurveSpec& spec) {
    if (spec.level < 2) fail("BadParameters", "curve level must be >= 2");
    const CaseDescriptor& desc = find_case(spec.group, spec.case_index);

    CurveEquation eq;
    eq.level = spec.level;
    eq.group = spec.group;
    eq.case_index = spec.case_index;
    eq.x_factor = desc.x_factor;
    eq.rhs = PolyX::constant(ExactComplex(1));

    for (const std::string& tag : desc.factors) {
        if (tag == "F" || tag == "G" || tag == "M" || tag == "Lambda") {
            for (const Rational& lambda : spec.lambdas) {
                PolyX factor;
                if (tag == "F")
                    factor = dihedral_factor(spec.m, lambda);
                else if (tag == "G")
                    factor = a4_g_factor(lambda);
                else if (tag == "M")
                    factor = s4_m_factor(lambda);
                else
                    factor = a5_lambda_factor(lambda);
                // Each parametric factor is (quasi-)palindromic by construction;
                // check it so bad table edits cannot ship silently.
                auto cls = polycore::classify(factor);
                require(cls.quasi_palindromic, "ClaimViolated", tag + " factor lost quasi-palindromicity");
                eq.rhs *= factor;
                eq.factors.push_back(tag);
            }
        } else {
            eq.rhs *= named_factor(tag, spec);
            eq.factors.push_back(tag);
        }
    }
    return eq;
}

}  // namespace

CurveEquation dihedral_form(const CurveSpec& spec) {
    if (spec.group != Group::Dihedral) fail("BadParameters", "dihedral_form needs group D");
    if (spec.m < 2) fail("BadParameters", "dihedral_form needs m >= 2");
    return assemble(spec);
}

CurveEquation a4_form(const CurveSpec& spec) {
    if (spec.group != Group::A4) fail("BadParameters", "a4_form needs group A4");
    return assemble(spec);
}

CurveEquation s4_form(const CurveSpec& spec) {
    if (spec.group != Group::S4) fail("BadParameters", "s4_form needs group S4");
    return assemble(spec);
}

CurveEquation a5_form(const CurveSpec& spec) {
    if (spec.group != Group::A5) fail("BadParameters", "a5_form needs group A5");
    return assemble(spec);
}

CurveEquation build(const CurveSpec& spec) {
    switch (spec.group) {
        case Group::Dihedral: return dihedral_form(spec);
        case Group::A4: return a4_form(spec);
        case Group::S4: return s4_form(spec);
        case Group::A5: return a5_form(spec);
    }
    fail("BadParameters", "unknown group");
}

TheoremReport verify_theorem(const CurveEquation& eq) {
    TheoremReport rep;
    rep.classification = polycore::classify(eq.rhs);
    for (const std::string& tag : eq.factors)
        if (tag == "x^m-1" || tag == "x^2m-1" || tag == "x^4-1") rep.antipalindromic_forcers.push_back(tag);

    bool ok;
    if (eq.group == Group::A5) {
        rep.expected = "quasi-palindromic";
        ok = rep.classification.quasi_palindromic;
    } else {
        rep.expected = "palindromic-or-antipalindromic";
        ok = rep.classification.palindromic || rep.classification.antipalindromic;
    }
    rep.claim_ok = ok;
    if (!ok) {
        // Name the first offending coefficient index for the failed claim.
        const auto& c = eq.rhs.coeffs();
        const std::size_t n = c.size() - 1;
        int offending = -1;
        for (std::size_t i = 0; i <= n; ++i) {
            bool pal = c[i] == c[n - i];
            bool anti = c[i] == -c[n - i];
            bool quasi = abs2(c[i]) == abs2(c[n - i]);
            bool bad = eq.group == Group::A5 ? !quasi : (!pal && !anti);
            if (bad) {
                offending = static_cast<int>(i);
                break;
            }
        }
        fail("ClaimViolated", group_name(eq.group) + " case " + std::to_string(eq.case_index) +
                                  ": claim fails at coefficient index " + std::to_string(offending));
    }
    return rep;
}

}  // namespace palinform::curves
