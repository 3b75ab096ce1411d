#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "palinform/json_io.hpp"

using namespace palinform;
namespace io = palinform::io;
namespace pc = palinform::polycore;
namespace rl = palinform::rootloc;
namespace rd = palinform::reduction;
namespace cv = palinform::curves;
namespace cd = palinform::codes;
using io::json;

namespace {

// --in accepts inline JSON (starts with '{', '[', '"' or a digit/sign) or a path.
json load_input(const std::string& text) {
    if (text.empty()) fail("BadParameters", "empty input");
    char head = text[0];
    if (head == '{' || head == '[' || head == '"' || head == '-' || (head >= '0' && head <= '9'))
        return json::parse(text);
    std::ifstream in(text);
    if (!in) fail("IoError", "cannot open input file '" + text + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail("IoError", "cannot open output file '" + out_path + "'");
    out << j.dump(2) << "\n";
}

template <class F>
json visit_poly(const io::AnyPoly& p, F&& f) {
    return std::visit(std::forward<F>(f), p);
}

std::string data_root(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PALINFORM_DATA")) return env;
    return "data";
}

// Recomputes the exact-mode chain products against the golden file and checks
// the satisfies/does-not pattern; exits nonzero on any mismatch.
json reproduce_products(const std::string& data_dir, bool* ok_out) {
    std::string path = data_dir + "/golden/sec22_products.json";
    std::ifstream in(path);
    if (!in) fail("IoError", "missing golden file '" + path + "'");
    json golden;
    in >> golden;

    json rows = json::array();
    bool all_ok = true;
    int pass_expected = 0, fail_expected = 0;
    for (const json& entry : golden.at("products")) {
        std::vector<QuadRat> alphas;
        for (const json& a : entry.at("alphas")) alphas.emplace_back(parse_rational(a.get<std::string>()));
        PolyX product = rl::product_chain<ExactComplex>(std::span<const QuadRat>(alphas));

        json row{{"name", entry.at("name")}, {"acceptance", entry.value("acceptance", false)}};
        const json& expected = entry.at("coeffs");
        bool coeffs_ok = static_cast<int>(expected.size()) == product.degree() + 1;
        json diffs = json::array();
        for (int i = 0; i <= product.degree() && i < static_cast<int>(expected.size()); ++i) {
            Rational want = parse_rational(expected[static_cast<std::size_t>(i)].get<std::string>());
            const ExactComplex& got = product[i];
            if (!got.im.is_zero() || !got.re.is_rational() || got.re.rational_part() != want) {
                coeffs_ok = false;
                diffs.push_back(json{{"index", i},
                                     {"expected", format_rational(want)},
                                     {"got", format_scalar(got)}});
            }
        }
        bool si_expected = entry.at("symmetric_increasing").get<bool>();
        bool si_got = rl::symmetric_increasing(product).holds;
        bool si_ok = si_expected == si_got;
        if (entry.value("acceptance", false)) (si_expected ? pass_expected : fail_expected)++;

        row["coeffs_match"] = coeffs_ok;
        row["symmetric_increasing"] = si_got;
        row["symmetric_increasing_ok"] = si_ok;
        if (!diffs.empty()) row["diffs"] = diffs;
        rows.push_back(row);
        all_ok = all_ok && coeffs_ok && si_ok;
    }
    bool pattern_ok = pass_expected == 4 && fail_expected == 4;
    all_ok = all_ok && pattern_ok;
    if (ok_out) *ok_out = all_ok;
    return json{{"schema", io::kSchema},
                {"products", rows},
                {"acceptance_pattern", {{"satisfies", pass_expected}, {"does_not", fail_expected}}},
                {"ok", all_ok}};
}

json region_point_dump() {
    json pts = json::array();
    for (double a = -3.0; a <= 3.0 + 1e-9; a += 0.05) {
        for (double b = 0.05; b <= 3.0 + 1e-9; b += 0.05) {
            ComplexD z(a, b);
            bool in_t = rd::region_T_membership(z);
            bool in_f = std::norm(z) >= 1.0 && std::abs(a) <= 0.5;
            if (in_t || in_f)
                pts.push_back(json::array({a, b, in_t ? 1 : 0, in_f ? 1 : 0}));
        }
    }
    return json{{"schema", io::kSchema}, {"columns", {"re", "im", "in_T", "in_F"}}, {"points", pts}};
}

struct CommonFlags {
    std::string in;
    std::string with;
    std::string out;
    bool use_float = false;
    double tol = 1e-9;
    unsigned seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palinform: self-inversive polynomials, binary-form reduction, superelliptic normal forms, and code zeta functions"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string sub_verb;
    std::string form_in, z_arg, emit_points_path, data_dir, group_name, type_name;
    std::vector<std::string> lambda_args, alpha_args;
    int lambda_index = 0, grid = 0, case_index = 1, level = 2, dihedral_m = 2;
    int code_n = 0, code_d = 1, n_max = 8, jobs = 1;
    long code_q = 2;
    std::string code_A;
    bool variant_sum = false;
    bool do_verify = false, do_table = false;
    double band = 1e-7;
    std::string alpha_single = "0";
    std::string scale_arg = "1";

    auto add_common = [&](CLI::App* cmd, bool needs_in = true) {
        if (needs_in) cmd->add_option("--in", flags.in, "inline JSON or path");
        cmd->add_option("--out", flags.out, "output path (stdout if omitted)");
        cmd->add_flag("--float", flags.use_float, "double-precision mode");
        cmd->add_option("--tol", flags.tol, "tolerance for float-mode predicates");
        cmd->add_option("--seed", flags.seed, "root solver seed (default 0)");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "palindromic/antipalindromic/quasi/self-inversive");
    add_common(c_classify);

    CLI::App* c_transform = app.add_subcommand("transform", "conjugate | reciprocal | inversive | product");
    c_transform->add_option("verb", sub_verb, "conjugate|reciprocal|inversive|product")->required();
    c_transform->add_option("--with", flags.with, "second operand for product");
    add_common(c_transform);

    CLI::App* c_decompose = app.add_subcommand("decompose", "half | compose | forced-roots");
    c_decompose->add_option("verb", sub_verb, "half|compose|forced-roots")->required();
    c_decompose->add_option("--m", lambda_index, "m for compose");
    add_common(c_decompose);

    CLI::App* c_roots = app.add_subcommand("roots", "all roots plus a circle report");
    c_roots->add_option("--band", band, "on-circle band (default 1e-7)");
    c_roots->add_option("--emit-points", emit_points_path, "dump root points for plotting");
    add_common(c_roots);

    CLI::App* c_criteria = app.add_subcommand("criteria",
                                              "cohn | lakatos | vieira | maxmod | ohara | symm-incr | step-cond | chain");
    c_criteria->add_option("verb", sub_verb)->required();
    c_criteria->add_option("--lambda", lambda_index, "lambda for vieira");
    c_criteria->add_option("--alpha", alpha_single, "alpha for step-cond");
    c_criteria->add_option("--alphas", alpha_args, "chain alphas (exact strings)");
    c_criteria->add_option("--scale", scale_arg, "chain leading scale");
    c_criteria->add_option("--grid", grid, "maxmod sample grid");
    c_criteria->add_flag("--variant", variant_sum, "lakatos variant k = 1..n-1");
    c_criteria->add_option("--band", band, "on-circle band");
    add_common(c_criteria);

    CLI::App* c_reduce = app.add_subcommand("reduce", "S/T walk of a form into the fundamental domain");
    c_reduce->add_option("--form", form_in, "binary form (inline JSON or path)");
    c_reduce->add_option("--from-circle", flags.in, "self-inversive polynomial for the Cayley route");
    add_common(c_reduce, false);

    CLI::App* c_covariant = app.add_subcommand("covariant",
                                               "g | julia | zeromap | sigma | cayley-circle | cayley-real | region-t");
    c_covariant->add_option("verb", sub_verb)->required();
    c_covariant->add_option("--form", form_in, "binary form (inline JSON or path)");
    c_covariant->add_option("--z", z_arg, "complex point \"re,im\" for region-t");
    c_covariant->add_option("--emit-points", emit_points_path, "dump region membership grid");
    add_common(c_covariant, true);

    CLI::App* c_curve = app.add_subcommand("curve", "superelliptic normal forms");
    c_curve->add_option("--group", group_name, "D|A4|S4|A5");
    c_curve->add_option("--case", case_index, "1-based case index");
    c_curve->add_option("--m", dihedral_m, "dihedral m (>= 2)");
    c_curve->add_option("--level", level, "n in y^n = f(x)");
    c_curve->add_option("--lambda", lambda_args, "lambda_i values (exact strings)");
    c_curve->add_flag("--verify", do_verify, "run the theorem check");
    c_curve->add_flag("--table", do_table, "emit the machine-readable case table");
    c_curve->add_option("--out", flags.out, "output path");

    CLI::App* c_code = app.add_subcommand("code",
                                          "zeta | normalized | rh | extremal | scan | mds | macwilliams | expand | type | dzeros");
    c_code->add_option("verb", sub_verb)->required();
    c_code->add_option("--n", code_n, "length");
    c_code->add_option("--q", code_q, "field size");
    c_code->add_option("--d", code_d, "minimum distance (mds)");
    c_code->add_option("--A", code_A, "coefficient array (inline JSON or path)");
    c_code->add_option("--type", type_name, "I|II|III|IV");
    c_code->add_option("--nmax", n_max, "scan length bound");
    c_code->add_option("--jobs", jobs, "parallel scan instances");
    c_code->add_option("--rh-tol", band, "rh tolerance (default 1e-9)");
    add_common(c_code);

    CLI::App* c_repro = app.add_subcommand("reproduce", "recompute the in-repo golden products bit-exactly");
    c_repro->add_option("--data", data_dir, "data directory (default $PALINFORM_DATA or ./data)");
    c_repro->add_option("--out", flags.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help prints cleanly; anything else is a usage error
    }

    try {
        if (c_classify->parsed()) {
            io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
            json out = visit_poly(p, [&](const auto& poly) {
                return io::classification_to_json(pc::classify(poly, flags.tol));
            });
            emit(out, flags.out);
        } else if (c_transform->parsed()) {
            io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
            if (sub_verb == "product") {
                if (flags.with.empty()) fail("BadParameters", "product needs --with");
                io::AnyPoly q = io::poly_from_json(load_input(flags.with), flags.use_float);
                json out = std::visit(
                    [&](const auto& a, const auto& b) -> json {
                        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, std::decay_t<decltype(b)>>)
                            return io::poly_to_json(pc::product(a, b));
                        else
                            fail("BadParameters", "product operands must share a mode");
                    },
                    p, q);
                emit(out, flags.out);
            } else {
                json out = visit_poly(p, [&](const auto& poly) -> json {
                    if (sub_verb == "conjugate") return io::poly_to_json(pc::conjugate(poly));
                    if (sub_verb == "reciprocal") return io::poly_to_json(pc::reciprocal(poly));
                    if (sub_verb == "inversive") return io::poly_to_json(pc::inversive(poly));
                    fail("BadParameters", "unknown transform '" + sub_verb + "'");
                });
                emit(out, flags.out);
            }
        } else if (c_decompose->parsed()) {
            io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
            json out = visit_poly(p, [&](const auto& poly) -> json {
                if (sub_verb == "half") {
                    auto [m, g] = pc::decompose_half(poly, flags.tol);
                    return json{{"schema", io::kSchema}, {"m", m}, {"g", io::poly_to_json(g)}};
                }
                if (sub_verb == "compose")
                    return io::poly_to_json(pc::compose_half(lambda_index, poly));
                if (sub_verb == "forced-roots") {
                    auto r = pc::forced_root_quotient(poly, flags.tol);
                    json factors = json::array();
                    for (const auto& f : r.factors) factors.push_back(io::poly_to_json(f));
                    return json{{"schema", io::kSchema},
                                {"factors", factors},
                                {"quotient", io::poly_to_json(r.quotient)}};
                }
                fail("BadParameters", "unknown decompose verb '" + sub_verb + "'");
            });
            emit(out, flags.out);
        } else if (c_roots->parsed()) {
            io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
            json out = visit_poly(p, [&](const auto& poly) -> json {
                RootSet rs = rl::roots(poly, 1e-12, flags.seed);
                json j{{"schema", io::kSchema},
                       {"roots", io::rootset_to_json(rs)},
                       {"circle", io::circle_report_to_json(rl::circle_report(poly, band, flags.seed))}};
                return j;
            });
            if (!emit_points_path.empty()) {
                json pts = json::array();
                for (const json& r : out["roots"]["roots"]) pts.push_back(r);
                emit(json{{"schema", io::kSchema}, {"points", pts}}, emit_points_path);
            }
            emit(out, flags.out);
        } else if (c_criteria->parsed()) {
            json out;
            if (sub_verb == "chain") {
                std::vector<QuadRat> alphas;
                for (const std::string& a : alpha_args) alphas.emplace_back(parse_rational(a));
                PolyX prod = rl::product_chain<ExactComplex>(std::span<const QuadRat>(alphas),
                                                             QuadRat(parse_rational(scale_arg)));
                out = json{{"schema", io::kSchema},
                           {"product", io::poly_to_json(prod)},
                           {"symmetric_increasing", io::symmetric_report_to_json(rl::symmetric_increasing(prod))}};
            } else {
                io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
                out = visit_poly(p, [&](const auto& poly) -> json {
                    if (sub_verb == "cohn")
                        return json{{"schema", io::kSchema}, {"cohn", rl::cohn_test(poly, flags.tol)}};
                    if (sub_verb == "lakatos")
                        return json{{"schema", io::kSchema},
                                    {"lakatos_losonczi", rl::lakatos_losonczi(poly, !variant_sum)},
                                    {"literal_sum", rl::lakatos_losonczi(poly, true)},
                                    {"variant_sum", rl::lakatos_losonczi(poly, false)}};
                    if (sub_verb == "vieira") {
                        auto pred = rl::vieira_predict(poly, lambda_index);
                        json j{{"schema", io::kSchema}, {"fires", pred.has_value()}};
                        j["predicted_on_circle"] = pred ? json(*pred) : json(nullptr);
                        return j;
                    }
                    if (sub_verb == "maxmod")
                        return json{{"schema", io::kSchema}, {"max_modulus", rl::max_modulus(poly, grid)}};
                    if (sub_verb == "ohara")
                        return io::ohara_report_to_json(rl::ohara_bounds(poly));
                    if (sub_verb == "symm-incr")
                        return io::symmetric_report_to_json(rl::symmetric_increasing(poly, flags.tol));
                    if (sub_verb == "step-cond") {
                        using K = std::decay_t<decltype(poly[0])>;
                        using R = typename scalar_traits<K>::real_type;
                        R alpha;
                        if constexpr (scalar_traits<K>::exact)
                            alpha = QuadRat(parse_rational(alpha_single));
                        else
                            alpha = std::stod(alpha_single);
                        return json{{"schema", io::kSchema},
                                    {"condition", rl::symm_incr_step_condition(poly, alpha, flags.tol)}};
                    }
                    fail("BadParameters", "unknown criteria verb '" + sub_verb + "'");
                });
            }
            emit(out, flags.out);
        } else if (c_reduce->parsed()) {
            if (!form_in.empty()) {
                io::AnyForm f = io::form_from_json(load_input(form_in), flags.use_float);
                json out = std::visit([&](const auto& form) { return io::reduce_result_to_json(rd::reduce(form)); }, f);
                emit(out, flags.out);
            } else if (!flags.in.empty()) {
                io::AnyPoly p = io::poly_from_json(load_input(flags.in), flags.use_float);
                json out = visit_poly(p, [&](const auto& poly) {
                    return io::circle_reduce_to_json(rd::reduce_from_circle(poly, flags.tol));
                });
                emit(out, flags.out);
            } else {
                fail("BadParameters", "reduce needs --form or --from-circle");
            }
        } else if (c_covariant->parsed()) {
            if (sub_verb == "region-t") {
                if (!emit_points_path.empty()) emit(region_point_dump(), emit_points_path);
                double a = 0, b = 0;
                if (!z_arg.empty()) {
                    std::istringstream is(z_arg);
                    char comma;
                    is >> a >> comma >> b;
                }
                ComplexD z(a, b);
                emit(json{{"schema", io::kSchema},
                          {"in_T", rd::region_T_membership(z)},
                          {"in_F", std::norm(z) >= 1.0 && std::abs(z.real()) <= 0.5 && z.imag() > 0}},
                     flags.out);
            } else {
                io::AnyForm f = io::form_from_json(load_input(form_in.empty() ? flags.in : form_in), flags.use_float);
                json out = std::visit(
                    [&](const auto& form) -> json {
                        if (sub_verb == "g") return io::form_to_json(rd::g_covariant(form, flags.tol));
                        if (sub_verb == "julia") {
                            auto j = rd::julia_quadratic(form);
                            return json{{"schema", io::kSchema},
                                        {"quadratic", io::form_to_json(j.form())},
                                        {"root", json::array({j.root.real(), j.root.imag()})}};
                        }
                        if (sub_verb == "zeromap") {
                            auto z = rd::zero_map(form);
                            return json{{"schema", io::kSchema},
                                        {"epsilon", json::array({z.value.real(), z.value.imag()})},
                                        {"in_fundamental_domain", rd::in_fundamental_domain(z)}};
                        }
                        if (sub_verb == "sigma") return io::sigma_report_to_json(rd::sigma_involution_check(form, flags.tol));
                        if (sub_verb == "cayley-circle") return io::form_to_json(rd::cayley_to_circle(form));
                        if (sub_verb == "cayley-real") return io::form_to_json(rd::cayley_to_real(form));
                        fail("BadParameters", "unknown covariant verb '" + sub_verb + "'");
                    },
                    f);
                emit(out, flags.out);
            }
        } else if (c_curve->parsed()) {
            if (do_table) {
                emit(io::case_table_to_json(), flags.out);
            } else {
                cv::CurveSpec spec;
                spec.group = cv::group_from_name(group_name);
                spec.case_index = case_index;
                spec.level = level;
                spec.m = dihedral_m;
                for (const std::string& l : lambda_args) spec.lambdas.push_back(parse_rational(l));
                cv::CurveEquation eq = cv::build(spec);
                // classification is part of the output schema; --verify only
                // controls whether a claim failure is fatal (it throws).
                cv::TheoremReport rep = cv::verify_theorem(eq);
                (void)do_verify;
                emit(io::curve_to_json(eq, &rep), flags.out);
            }
        } else if (c_code->parsed()) {
            json out;
            auto parse_enumerator = [&]() {
                if (!code_A.empty()) {
                    json arr = load_input(code_A);
                    if (arr.is_array() && code_n > 0) {
                        json obj{{"n", code_n}, {"q", code_q}, {"A", arr}};
                        return io::enumerator_from_json(obj);
                    }
                    return io::enumerator_from_json(arr);
                }
                if (!flags.in.empty()) return io::enumerator_from_json(load_input(flags.in));
                fail("BadParameters", "code needs --A or --in");
            };
            if (sub_verb == "zeta") {
                cd::WeightEnumerator F = parse_enumerator();
                out = io::zeta_to_json(cd::zeta_polynomial(F));
            } else if (sub_verb == "normalized") {
                cd::WeightEnumerator F = parse_enumerator();
                cd::ZetaPolynomial P = cd::zeta_polynomial(F);
                out = json{{"schema", io::kSchema},
                           {"p", io::poly_to_json(cd::normalized_zeta(P))},
                           {"self_reciprocal", cd::self_reciprocal_check(P)}};
            } else if (sub_verb == "rh") {
                cd::WeightEnumerator F = parse_enumerator();
                out = io::rh_report_to_json(cd::rh_check(cd::zeta_polynomial(F), band));
            } else if (sub_verb == "dzeros") {
                cd::WeightEnumerator F = parse_enumerator();
                out = io::d_from_zeros_to_json(cd::d_from_zeros_identity(F));
            } else if (sub_verb == "mds") {
                out = io::enumerator_to_json(cd::mds_enumerator(code_n, code_d, code_q));
            } else if (sub_verb == "macwilliams") {
                out = io::enumerator_to_json(cd::macwilliams(parse_enumerator()));
            } else if (sub_verb == "expand") {
                json arr = json::array();
                for (const auto& c : cd::mds_expand(parse_enumerator())) arr.push_back(format_rational(c));
                out = json{{"schema", io::kSchema}, {"coords", arr}};
            } else if (sub_verb == "type") {
                cd::WeightEnumerator F = parse_enumerator();
                cd::TypeTag tag = cd::type_classify(F);
                out = json{{"schema", io::kSchema},
                           {"type", cd::type_name(tag.type)},
                           {"q", tag.q},
                           {"b", tag.b},
                           {"msd_bound", cd::msd_bound(tag, F.n)},
                           {"extremal", cd::is_extremal(F, tag)}};
            } else if (sub_verb == "extremal") {
                cd::CodeType type = cd::type_from_name(type_name);
                out = io::enumerator_to_json(cd::extremal_enumerator(type, code_n));
            } else if (sub_verb == "scan") {
                std::vector<cd::CodeType> types;
                if (type_name.empty()) {
                    types = {cd::CodeType::I, cd::CodeType::II, cd::CodeType::III, cd::CodeType::IV};
                } else {
                    std::istringstream is(type_name);
                    std::string tok;
                    while (std::getline(is, tok, ',')) types.push_back(cd::type_from_name(tok));
                }
                out = io::scan_rows_to_json(cd::conjecture_scan(types, n_max, jobs));
            } else {
                fail("BadParameters", "unknown code verb '" + sub_verb + "'");
            }
            emit(out, flags.out);
        } else if (c_repro->parsed()) {
            bool ok = false;
            json out = reproduce_products(data_root(data_dir), &ok);
            emit(out, flags.out);
            if (!ok) {
                std::cerr << io::json{{"schema", io::kSchema},
                                      {"error", {{"code", "GoldenMismatch"}, {"message", "golden reproduction failed"}}}}
                                 .dump()
                          << "\n";
                return 1;
            }
        }
    } catch (const Error& e) {
        std::cerr << io::error_to_json(e).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << io::json{{"schema", io::kSchema},
                              {"error", {{"code", "Internal"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    }
    return 0;
}
