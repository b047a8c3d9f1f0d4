#include "k3entcli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "k3ent/dynamics.hpp"
#include "k3ent/errors.hpp"
#include "k3ent/picard.hpp"
#include "k3ent/purelattice.hpp"
#include "k3ent/triform.hpp"

namespace k3ent::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fmt_double(double v, int sig = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json coeff_list(const IntPolynomial& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

std::string coeff_list_str(const IntPolynomial& p) {
    std::string s;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += p.coeffs()[i].get_str();
    }
    return s;
}

PureType parse_type_or_throw(const std::string& text) {
    auto t = PureType::parse(text);
    if (!t) throw CLI::ValidationError("--type", "expected k,l,m with non-negative integers");
    return *t;
}

int cmd_table(const std::string& format, std::ostream& out) {
    auto rows = entropy_table();
    if (format == "json") {
        ordered_json doc{{"version", kVersion}, {"rows", ordered_json::array()}};
        for (const auto& r : rows) {
            ordered_json parts = ordered_json::array();
            for (const auto& p : r.cyclotomic_parts) parts.push_back({p.n, p.multiplicity});
            doc["rows"].push_back({{"type", {r.type.k, r.type.l, r.type.m}},
                                   {"lambda", fmt_double(r.lambda)},
                                   {"entropy", fmt_double(r.entropy)},
                                   {"min_poly", coeff_list(r.min_poly)},
                                   {"char_poly", coeff_list(r.characteristic)},
                                   {"cyclotomic_parts", parts}});
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        out << "type,lambda,entropy,min_poly,char_poly,cyclotomic_parts\n";
        for (const auto& r : rows) {
            std::string parts;
            for (size_t i = 0; i < r.cyclotomic_parts.size(); ++i) {
                if (i) parts += " ";
                parts += "phi" + std::to_string(r.cyclotomic_parts[i].n) + "^" +
                         std::to_string(r.cyclotomic_parts[i].multiplicity);
            }
            out << csv_quote(r.type.label()) << "," << fmt_double(r.lambda) << ","
                << fmt_double(r.entropy) << "," << csv_quote(coeff_list_str(r.min_poly)) << ","
                << csv_quote(coeff_list_str(r.characteristic)) << "," << csv_quote(parts) << "\n";
        }
        return 0;
    }
    out << std::left << std::setw(10) << "(k,l,m)" << std::setw(18) << "lambda" << std::setw(18)
        << "entropy" << "min poly\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.type.label() << std::setw(18)
            << fmt_double(r.lambda) << std::setw(18) << fmt_double(r.entropy) << r.min_poly.str()
            << "\n";
    }
    return 0;
}

int cmd_gram(const PureType& t, const std::string& format, std::ostream& out) {
    GramLattice g = build_gram(t);
    if (format == "json") {
        ordered_json doc{{"version", kVersion}, {"labels", g.labels}, {"gram", ordered_json::array()}};
        for (int i = 0; i < g.gram.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < g.gram.cols(); ++j) row.push_back(g.gram.at(i, j).get_str());
            doc["gram"].push_back(row);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        for (size_t i = 0; i < g.labels.size(); ++i) out << (i ? "," : "") << g.labels[i];
        out << "\n";
        for (int i = 0; i < g.gram.rows(); ++i) {
            for (int j = 0; j < g.gram.cols(); ++j) out << (j ? "," : "") << g.gram.at(i, j).get_str();
            out << "\n";
        }
        return 0;
    }
    out << "# basis:";
    for (const auto& l : g.labels) out << " " << l;
    out << "\n" << g.gram.str();
    return 0;
}

int cmd_det(const PureType& t, const std::string& format, std::ostream& out) {
    Integer formula = det_formula(t);
    Integer bareiss = build_gram(t).gram.det_bareiss();
    bool match = formula == bareiss;
    if (format == "json") {
        ordered_json doc{{"version", kVersion},
                         {"type", {t.k, t.l, t.m}},
                         {"formula", formula.get_str()},
                         {"bareiss", bareiss.get_str()},
                         {"match", match}};
        out << doc.dump(2) << "\n";
    } else {
        out << "type=" << t.label() << " formula=" << formula.get_str()
            << " bareiss=" << bareiss.get_str() << " match=" << (match ? "true" : "false") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_snf(const PureType& t, const std::string& format, std::ostream& out) {
    GramLattice g = build_gram(t);
    SnfResult snf = smith_normal_form(g.gram);
    bool ok = snf.u * g.gram * snf.v == snf.d && abs(snf.u.det_bareiss()) == 1 &&
              abs(snf.v.det_bareiss()) == 1;
    auto factors = snf.invariant_factors();
    if (format == "json") {
        ordered_json f = ordered_json::array();
        for (const auto& d : factors) f.push_back(d.get_str());
        ordered_json doc{{"version", kVersion},
                         {"type", {t.k, t.l, t.m}},
                         {"invariant_factors", f},
                         {"verified", ok}};
        out << doc.dump(2) << "\n";
    } else {
        out << "type=" << t.label() << " invariant_factors=";
        for (size_t i = 0; i < factors.size(); ++i) out << (i ? "," : "") << factors[i].get_str();
        out << " verified=" << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_entropy(const PureType& t, const std::string& format, double tol, std::ostream& out) {
    EntropyRow r = entropy_row(t, tol);
    if (format == "json") {
        ordered_json doc{{"version", kVersion},
                         {"type", {t.k, t.l, t.m}},
                         {"lambda", fmt_double(r.lambda)},
                         {"entropy", fmt_double(r.entropy)},
                         {"min_poly", coeff_list(r.min_poly)},
                         {"char_poly", coeff_list(r.characteristic)}};
        out << doc.dump(2) << "\n";
    } else {
        out << "type=" << t.label() << " lambda=" << fmt_double(r.lambda)
            << " entropy=" << fmt_double(r.entropy) << " min_poly=" << r.min_poly.str() << "\n";
    }
    return 0;
}

int cmd_embed_check(const std::string& name, const std::string& format, std::ostream& out,
                    std::ostream& err) {
    auto n = embedding_name_from_string(name);
    if (!n) {
        err << "unknown embedding name: " << name << " (expected B600|B511|B422|B332)\n";
        return 2;
    }
    EmbeddingData data = embedding_vectors(*n);
    PureType expected = embedding_expected_type(*n);
    EmbeddingReport rep = check_embedding(data, expected);
    bool ok = rep.gram_ok && rep.primitive;
    if (format == "json") {
        ordered_json self = ordered_json::array();
        for (const auto& s : rep.self_ints) self.push_back(s.get_str());
        ordered_json inv = ordered_json::array();
        for (const auto& d : rep.invariant_factors) inv.push_back(d.get_str());
        ordered_json doc{{"version", kVersion},
                         {"name", name},
                         {"expected_type", {expected.k, expected.l, expected.m}},
                         {"gram_ok", rep.gram_ok},
                         {"primitive", rep.primitive},
                         {"self_intersections", self},
                         {"invariant_factors", inv}};
        out << doc.dump(2) << "\n";
    } else {
        out << "name=" << name << " expected=" << expected.label()
            << " gram_ok=" << (rep.gram_ok ? "true" : "false")
            << " primitive=" << (rep.primitive ? "true" : "false") << " self_ints=";
        for (size_t i = 0; i < rep.self_ints.size(); ++i)
            out << (i ? "," : "") << rep.self_ints[i].get_str();
        out << "\n";
    }
    return ok ? 0 : 1;
}

ordered_json curve_json(const FoundCurve& f) {
    ordered_json j;
    j["certainty"] = f.certainty == Certainty::exact ? "exact" : "numeric";
    if (f.curve) {
        auto [u, v] = companion_axes(f.curve->axis());
        ordered_json fixed;
        fixed[axis_name(u)] = f.curve->p1().str();
        fixed[axis_name(v)] = f.curve->p2().str();
        j["axis"] = axis_name(f.curve->axis());
        j["fixed"] = fixed;
    } else {
        auto c = [](const std::complex<double>& z) {
            return ordered_json::array({z.real(), z.imag()});
        };
        j["basepoint"] = {c(f.basepoint[0]), c(f.basepoint[1]), c(f.basepoint[2]),
                          c(f.basepoint[3])};
        j["residual"] = f.residual;
    }
    return j;
}

int cmd_curves(const std::string& path, const std::string& axis_str, unsigned denom_bound,
               const std::string& format, std::ostream& out, std::ostream& err) {
    auto axis = axis_from_string(axis_str);
    if (!axis) {
        err << "invalid axis: " << axis_str << "\n";
        return 2;
    }
    TriForm q;
    try {
        q = TriForm::load(path);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    std::vector<FoundCurve> found;
    try {
        found = find_axis_curves(q, *axis, denom_bound);
    } catch (const SharedComponentError& e) {
        err << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        ordered_json doc{{"version", kVersion},
                         {"axis", axis_str},
                         {"curves", ordered_json::array()}};
        for (const auto& f : found) doc["curves"].push_back(curve_json(f));
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& f : found) {
            if (f.curve) {
                out << "exact   " << f.curve->label() << "\n";
            } else {
                out << "numeric [" << f.basepoint[0] << ":" << f.basepoint[1] << "] x ["
                    << f.basepoint[2] << ":" << f.basepoint[3] << "] residual=" << f.residual
                    << "\n";
            }
        }
        out << "total=" << found.size() << "\n";
    }
    return 0;
}

int cmd_identity_check(const std::string& path, const std::string& format, std::ostream& out,
                       std::ostream& err) {
    TriForm q;
    try {
        q = TriForm::load(path);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    bool all = true;
    ordered_json doc{{"version", kVersion}, {"axes", ordered_json::array()}};
    for (Axis a : kAllAxes) {
        IdentityReport rep = verify_tau_identities(q, a);
        all = all && rep.ok();
        if (format == "json") {
            doc["axes"].push_back({{"axis", axis_name(a)},
                                   {"conjugation", rep.conjugation},
                                   {"cross", rep.cross}});
        } else {
            out << "axis=" << axis_name(a)
                << " conjugation=" << (rep.conjugation ? "true" : "false")
                << " cross=" << (rep.cross ? "true" : "false") << "\n";
        }
    }
    if (format == "json") out << doc.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_relations(const std::string& format, std::ostream& out) {
    bool all = true;
    ordered_json doc{{"version", kVersion}, {"relations", ordered_json::array()}};
    for (const auto& rel : tilde_relations()) {
        bool ok = verify_relation(rel.lhs, rel.rhs);
        all = all && ok;
        if (format == "json")
            doc["relations"].push_back({{"name", rel.name}, {"holds", ok}});
        else
            out << "relation " << rel.name << " holds=" << (ok ? "true" : "false") << "\n";
    }
    if (format == "json") out << doc.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_tilde_verify(unsigned denom_bound, std::ostream& out) {
    TriForm q = build_tilde_Q();
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        all_ok = all_ok && ok;
    };

    // Curve census: 8 exact curves per axis matching the display list.
    const auto& listed = tilde_curves();
    size_t exact_total = 0;
    bool census_ok = true;
    for (Axis a : kAllAxes) {
        auto found = find_axis_curves(q, a, denom_bound);
        size_t exact_here = 0;
        for (const auto& f : found) {
            if (f.certainty != Certainty::exact) continue;
            ++exact_here;
            bool in_list = false;
            for (const auto& c : listed)
                if (same_curve(c, *f.curve)) in_list = true;
            census_ok = census_ok && in_list;
        }
        census_ok = census_ok && exact_here == 8;
        exact_total += exact_here;
    }
    report("curve census: 8 exact parallel curves per axis, 24 total",
           census_ok && exact_total == 24);

    bool containment = true;
    for (const auto& c : listed) containment = containment && curve_contained(q, c);
    report("all 24 listed curves lie on the surface", containment);

    for (const auto& rel : tilde_relations())
        report("relation " + rel.name, verify_relation(rel.lhs, rel.rhs));

    for (const auto& named : tilde_sublattice_selections())
        report("sublattice " + named.name + " matches M_" + named.expected.label(),
               sublattice_check(named.selection, named.expected));

    // Jacobian samples: smooth at sampled exact points of the 24 curves.
    bool jac_ok = true;
    int samples = 0;
    for (const auto& c : listed) {
        for (long v : {-2L, 1L, 3L}) {
            SurfacePoint p{ProjPoint::finite(GaussianRational(v)), ProjPoint::finite(GaussianRational(v)),
                           ProjPoint::finite(GaussianRational(v))};
            auto [u, vv] = companion_axes(c.axis());
            p.set(u, c.p1());
            p.set(vv, c.p2());
            JacobianData j = jacobian(q, p);
            jac_ok = jac_ok && j.value.is_zero() && !j.singular_at_point();
            ++samples;
        }
    }
    report("surface smooth at " + std::to_string(samples) + " sampled curve points", jac_ok);

    out << (all_ok ? "tilde-verify: OK\n" : "tilde-verify: FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Picard-lattice dynamics for (2,2,2) surfaces in P1 x P1 x P1"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string type_str, axis_str = "x", poly_path, embed_name;
    unsigned denom_bound = 64;
    double tol = 1e-12;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* table = app.add_subcommand("table", "entropy table for all 30 unordered types");
    add_format(table);

    auto* gram = app.add_subcommand("gram", "Gram matrix of a pure type");
    gram->add_option("--type", type_str, "k,l,m")->required();
    add_format(gram);

    auto* det = app.add_subcommand("det", "determinant: closed formula vs Bareiss");
    det->add_option("--type", type_str, "k,l,m")->required();
    add_format(det);

    auto* snf = app.add_subcommand("snf", "Smith normal form of a pure Gram matrix");
    snf->add_option("--type", type_str, "k,l,m")->required();
    add_format(snf);

    auto* entropy = app.add_subcommand("entropy", "spectral radius and entropy of one type");
    entropy->add_option("--type", type_str, "k,l,m")->required();
    entropy->add_option("--tol", tol, "root refinement tolerance");
    add_format(entropy);

    auto* embed = app.add_subcommand("embed-check", "verify an explicit primitive embedding");
    embed->add_option("--name", embed_name, "B600|B511|B422|B332")->required();
    add_format(embed);

    auto* curves = app.add_subcommand("curves", "find axis-parallel curves on a surface");
    curves->add_option("--poly", poly_path, "TriForm JSON file")->required();
    curves->add_option("--axis", axis_str, "x|y|z")->required();
    curves->add_option("--denom-bound", denom_bound, "recognition denominator bound");
    add_format(curves);

    auto* tilde = app.add_subcommand("tilde-verify", "run the full explicit-surface suite");
    tilde->add_option("--denom-bound", denom_bound, "recognition denominator bound");

    auto* identity = app.add_subcommand("identity-check", "symbolic involution identities");
    identity->add_option("--poly", poly_path, "TriForm JSON file")->required();
    add_format(identity);

    auto* relations = app.add_subcommand("relations", "verify the displayed class relations");
    add_format(relations);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return cmd_table(format, out);
        if (gram->parsed()) return cmd_gram(parse_type_or_throw(type_str), format, out);
        if (det->parsed()) return cmd_det(parse_type_or_throw(type_str), format, out);
        if (snf->parsed()) return cmd_snf(parse_type_or_throw(type_str), format, out);
        if (entropy->parsed()) return cmd_entropy(parse_type_or_throw(type_str), format, tol, out);
        if (embed->parsed()) return cmd_embed_check(embed_name, format, out, err);
        if (curves->parsed())
            return cmd_curves(poly_path, axis_str, denom_bound, format, out, err);
        if (tilde->parsed()) return cmd_tilde_verify(denom_bound, out);
        if (identity->parsed()) return cmd_identity_check(poly_path, format, out, err);
        if (relations->parsed()) return cmd_relations(format, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace k3ent::cli
