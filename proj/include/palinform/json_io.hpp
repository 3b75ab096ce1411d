#pragma once

#include <json.hpp>

#include <variant>

#include "palinform/codes.hpp"
#include "palinform/curves.hpp"
#include "palinform/form.hpp"
#include "palinform/polycore.hpp"
#include "palinform/reduction.hpp"
#include "palinform/rootloc.hpp"

namespace palinform::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "palinform/1";

using AnyPoly = std::variant<PolyX, PolyF>;
using AnyForm = std::variant<FormX, FormF>;

// {"schema":"palinform/1","mode":"exact"|"float","coeffs":[[re,im],...]}
// with re/im decimal-or-fraction strings (exact) or numbers (float).
// Bare arrays and bare scalars are accepted on input (exact unless forced).
json poly_to_json(const PolyX& p);
json poly_to_json(const PolyF& p);
json poly_to_json(const AnyPoly& p);
AnyPoly poly_from_json(const json& j, bool force_float = false);

// Forms mirror polynomials with an added "degree" field.
json form_to_json(const FormX& f);
json form_to_json(const FormF& f);
AnyForm form_from_json(const json& j, bool force_float = false);

json scalar_to_json(const ExactComplex& z);
json scalar_to_json(const ComplexD& z);
ExactComplex exact_scalar_from_json(const json& j);
ComplexD float_scalar_from_json(const json& j);

json classification_to_json(const polycore::Classification<ExactComplex>& c);
json classification_to_json(const polycore::Classification<ComplexD>& c);

json circle_report_to_json(const rootloc::CircleReport& r);
json symmetric_report_to_json(const rootloc::SymmetricIncreasingReport& r);
json ohara_report_to_json(const rootloc::OharaReport& r);
json rootset_to_json(const RootSet& r);

template <class K>
json reduce_result_to_json(const reduction::ReduceResult<K>& r);
template <class K>
json circle_reduce_to_json(const reduction::CircleReduceResult<K>& r);
template <class K>
json sigma_report_to_json(const reduction::SigmaReport<K>& r);

json enumerator_to_json(const codes::WeightEnumerator& F);
codes::WeightEnumerator enumerator_from_json(const json& j);
json zeta_to_json(const codes::ZetaPolynomial& P);
json rh_report_to_json(const codes::RhReport& r);
json d_from_zeros_to_json(const codes::DFromZerosReport& r);
json scan_rows_to_json(const std::vector<codes::ScanRow>& rows);

json curve_to_json(const curves::CurveEquation& eq, const curves::TheoremReport* report = nullptr);
json case_table_to_json();

json error_to_json(const Error& e);

}  // namespace palinform::io
