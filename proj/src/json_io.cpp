#include "palinform/json_io.hpp"

#include <cmath>
#include <sstream>

namespace palinform::io {

namespace {

json quadrat_to_json(const QuadRat& v) { return v.str(); }

QuadRat quadrat_from_json(const json& j) {
    if (j.is_string()) return parse_quadrat(j.get<std::string>());
    if (j.is_number_integer()) return QuadRat(Rational(j.get<long>()));
    if (j.is_number()) {
        // Bare JSON numbers round-trip through their shortest decimal form.
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return parse_quadrat(os.str());
    }
    fail("BadNumber", "expected a number or numeric string");
}

double number_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_quadrat(j.get<std::string>()).to_double();
    fail("BadNumber", "expected a number");
}

}  // namespace

json scalar_to_json(const ExactComplex& z) {
    return json::array({quadrat_to_json(z.re), quadrat_to_json(z.im)});
}

json scalar_to_json(const ComplexD& z) { return json::array({z.real(), z.imag()}); }

ExactComplex exact_scalar_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail("BadNumber", "scalar pairs are [re, im]");
        return {quadrat_from_json(j[0]), quadrat_from_json(j[1])};
    }
    return {quadrat_from_json(j), QuadRat(Rational(0))};
}

ComplexD float_scalar_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail("BadNumber", "scalar pairs are [re, im]");
        return {number_from_json(j[0]), number_from_json(j[1])};
    }
    return {number_from_json(j), 0.0};
}

namespace {

template <class K>
json coeffs_to_json(const std::vector<K>& coeffs) {
    json arr = json::array();
    for (const K& c : coeffs) arr.push_back(scalar_to_json(c));
    return arr;
}

const json& coeff_array_of(const json& j) {
    if (j.is_array()) return j;
    if (j.is_object() && j.contains("coeffs")) return j.at("coeffs");
    fail("BadParameters", "expected a coefficient array or an object with \"coeffs\"");
}

bool wants_float(const json& j, bool force_float) {
    if (force_float) return true;
    return j.is_object() && j.value("mode", "exact") == std::string("float");
}

}  // namespace

json poly_to_json(const PolyX& p) {
    return json{{"schema", kSchema}, {"mode", "exact"}, {"coeffs", coeffs_to_json(p.coeffs())}};
}

json poly_to_json(const PolyF& p) {
    return json{{"schema", kSchema}, {"mode", "float"}, {"coeffs", coeffs_to_json(p.coeffs())}};
}

json poly_to_json(const AnyPoly& p) {
    return std::visit([](const auto& v) { return poly_to_json(v); }, p);
}

AnyPoly poly_from_json(const json& j, bool force_float) {
    const json& arr = coeff_array_of(j);
    if (wants_float(j, force_float)) {
        std::vector<ComplexD> c;
        for (const json& e : arr) c.push_back(float_scalar_from_json(e));
        return PolyF(std::move(c));
    }
    std::vector<ExactComplex> c;
    for (const json& e : arr) c.push_back(exact_scalar_from_json(e));
    return PolyX(std::move(c));
}

json form_to_json(const FormX& f) {
    return json{{"schema", kSchema}, {"mode", "exact"}, {"degree", f.degree()}, {"coeffs", coeffs_to_json(f.coeffs())}};
}

json form_to_json(const FormF& f) {
    return json{{"schema", kSchema}, {"mode", "float"}, {"degree", f.degree()}, {"coeffs", coeffs_to_json(f.coeffs())}};
}

AnyForm form_from_json(const json& j, bool force_float) {
    const json& arr = coeff_array_of(j);
    if (wants_float(j, force_float)) {
        std::vector<ComplexD> c;
        for (const json& e : arr) c.push_back(float_scalar_from_json(e));
        return FormF(std::move(c));
    }
    std::vector<ExactComplex> c;
    for (const json& e : arr) c.push_back(exact_scalar_from_json(e));
    return FormX(std::move(c));
}

namespace {

template <class K>
json classification_impl(const polycore::Classification<K>& c) {
    json out{{"schema", kSchema},
             {"palindromic", c.palindromic},
             {"antipalindromic", c.antipalindromic},
             {"quasi_palindromic", c.quasi_palindromic},
             {"self_inversive", c.self_inversive.has_value()}};
    if (c.self_inversive)
        out["witness"] = scalar_to_json(*c.self_inversive);
    else
        out["witness"] = nullptr;
    return out;
}

}  // namespace

json classification_to_json(const polycore::Classification<ExactComplex>& c) { return classification_impl(c); }
json classification_to_json(const polycore::Classification<ComplexD>& c) { return classification_impl(c); }

json circle_report_to_json(const rootloc::CircleReport& r) {
    return json{{"schema", kSchema}, {"on_circle", r.on_circle},     {"inside", r.inside},
                {"outside", r.outside}, {"tol", r.tol}, {"max_deviation", r.max_deviation}};
}

json symmetric_report_to_json(const rootloc::SymmetricIncreasingReport& r) {
    json out{{"schema", kSchema},
             {"holds", r.holds},
             {"symmetry_ok", r.symmetry_ok},
             {"monotone_ok", r.monotone_ok}};
    if (r.first_violation)
        out["first_violation"] = json::array({r.first_violation->first, r.first_violation->second});
    else
        out["first_violation"] = nullptr;
    return out;
}

json ohara_report_to_json(const rootloc::OharaReport& r) {
    return json{{"schema", kSchema},
                {"p_norm", r.p_norm},
                {"max_side_coeff", r.max_side_coeff},
                {"middle_coeff", r.middle_coeff},
                {"has_middle", r.has_middle},
                {"coeff_bound_ok", r.coeff_bound_ok},
                {"middle_sqrt2_ok", r.middle_sqrt2_ok},
                {"mcc_ok", r.mcc_ok},
                {"mcc_sufficient", r.mcc_sufficient}};
}

json rootset_to_json(const RootSet& r) {
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back(json::array({z.real(), z.imag()}));
    return json{{"schema", kSchema}, {"roots", roots}, {"residual", r.residual}, {"scale", r.scale}, {"tol", r.tol}};
}

template <class K>
json reduce_result_to_json(const reduction::ReduceResult<K>& r) {
    return json{{"schema", kSchema},
                {"reduced", form_to_json(r.reduced)},
                {"matrix", json::array({json::array({r.matrix.a.get_str(), r.matrix.b.get_str()}),
                                        json::array({r.matrix.c.get_str(), r.matrix.d.get_str()})})},
                {"trace", r.trace},
                {"eps_before", json::array({r.eps_before.real(), r.eps_before.imag()})},
                {"eps_after", json::array({r.eps_after.real(), r.eps_after.imag()})},
                {"norm_before", r.norm_before},
                {"norm_after", r.norm_after},
                {"steps", r.steps},
                {"max_equivariance_residual", r.max_equivariance_residual}};
}

template json reduce_result_to_json<ExactComplex>(const reduction::ReduceResult<ExactComplex>&);
template json reduce_result_to_json<ComplexD>(const reduction::ReduceResult<ComplexD>&);

template <class K>
json circle_reduce_to_json(const reduction::CircleReduceResult<K>& r) {
    return json{{"schema", kSchema},
                {"form", form_to_json(r.form)},
                {"region", r.region},
                {"in_fundamental_domain_after", r.in_f_after},
                {"minimal_coefficients", true},
                {"eps_initial", json::array({r.eps_initial.real(), r.eps_initial.imag()})},
                {"eps_final", json::array({r.eps_final.real(), r.eps_final.imag()})},
                {"norm_before", r.norm_before},
                {"norm_after", r.norm_after}};
}

template json circle_reduce_to_json<ExactComplex>(const reduction::CircleReduceResult<ExactComplex>&);
template json circle_reduce_to_json<ComplexD>(const reduction::CircleReduceResult<ComplexD>&);

template <class K>
json sigma_report_to_json(const reduction::SigmaReport<K>& r) {
    return json{{"schema", kSchema},
                {"relation_holds", r.relation_holds},
                {"g_degree", r.g_degree},
                {"g", form_to_json(r.g)},
                {"g_classification", classification_to_json(r.g_class)}};
}

template json sigma_report_to_json<ExactComplex>(const reduction::SigmaReport<ExactComplex>&);
template json sigma_report_to_json<ComplexD>(const reduction::SigmaReport<ComplexD>&);

json enumerator_to_json(const codes::WeightEnumerator& F) {
    json arr = json::array();
    for (const QuadRat& a : F.A) arr.push_back(a.str());
    return json{{"schema", kSchema}, {"n", F.n}, {"q", F.q}, {"A", arr}};
}

codes::WeightEnumerator enumerator_from_json(const json& j) {
    codes::WeightEnumerator F;
    if (j.is_object()) {
        F.n = j.at("n").get<int>();
        F.q = j.at("q").get<long>();
        for (const json& e : j.at("A")) F.A.push_back(quadrat_from_json(e));
    } else if (j.is_array()) {
        for (const json& e : j) F.A.push_back(quadrat_from_json(e));
        F.n = static_cast<int>(F.A.size()) - 1;
        F.q = 2;
    } else {
        fail("BadParameters", "expected an enumerator object or coefficient array");
    }
    if (static_cast<int>(F.A.size()) != F.n + 1) fail("BadParameters", "enumerator needs n+1 coefficients");
    return F;
}

json zeta_to_json(const codes::ZetaPolynomial& P) {
    json arr = json::array();
    for (const Rational& a : P.a) arr.push_back(format_rational(a));
    return json{{"schema", kSchema}, {"P", arr}, {"q", P.q}, {"d", P.d}, {"n", P.n}};
}

json rh_report_to_json(const codes::RhReport& r) {
    json zeros = json::array();
    for (const auto& z : r.zeros) zeros.push_back(json::array({z.real(), z.imag()}));
    return json{{"schema", kSchema},
                {"pass", r.pass},
                {"max_radius_dev", r.max_radius_dev},
                {"radius", r.radius},
                {"zeros", zeros}};
}

json d_from_zeros_to_json(const codes::DFromZerosReport& r) {
    return json{{"schema", kSchema},
                {"d", r.d},
                {"sum_inverse_zeros", format_rational(r.sum_inverse_zeros)},
                {"sum_inverse_numeric", r.sum_inverse_numeric},
                {"rhs", format_rational(r.rhs_exact)},
                {"identity_ok", r.identity_ok},
                {"inequality_ok", r.inequality_ok}};
}

json scan_rows_to_json(const std::vector<codes::ScanRow>& rows) {
    json arr = json::array();
    for (const codes::ScanRow& row : rows) {
        json p = json::array();
        for (const Rational& a : row.P) p.push_back(format_rational(a));
        arr.push_back(json{{"type", codes::type_name(row.type)},
                           {"n", row.n},
                           {"d", row.d},
                           {"extremal", row.extremal},
                           {"self_reciprocal", row.self_reciprocal},
                           {"rh_pass", row.rh_pass},
                           {"max_radius_dev", row.max_radius_dev},
                           {"symmetric_increasing", row.symmetric_increasing},
                           {"coeffs_nonneg_integral", row.coeffs_nonneg_integral},
                           {"P_coeffs", p},
                           {"error", row.error}});
    }
    return json{{"schema", kSchema}, {"rows", arr}};
}

json curve_to_json(const curves::CurveEquation& eq, const curves::TheoremReport* report) {
    json out{{"schema", kSchema},
             {"group", curves::group_name(eq.group)},
             {"case", eq.case_index},
             {"n", eq.level},
             {"x_factor", eq.x_factor},
             {"factors", eq.factors},
             {"coeffs", coeffs_to_json(eq.rhs.coeffs())}};
    if (report) {
        out["classification"] = classification_to_json(report->classification);
        out["expected"] = report->expected;
        out["claim_ok"] = report->claim_ok;
        out["antipalindromic_forcers"] = report->antipalindromic_forcers;
    }
    return out;
}

json case_table_to_json() {
    json arr = json::array();
    for (const curves::CaseDescriptor& c : curves::case_table())
        arr.push_back(json{{"group", curves::group_name(c.group)},
                           {"case", c.case_index},
                           {"factors", c.factors},
                           {"x_factor", c.x_factor}});
    return json{{"schema", kSchema}, {"cases", arr}};
}

json error_to_json(const Error& e) {
    return json{{"schema", kSchema}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
}

}  // namespace palinform::io
