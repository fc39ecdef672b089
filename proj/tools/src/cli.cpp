#include "sea/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sea/catalog.hpp"
#include "sea/curves.hpp"
#include "sea/error.hpp"
#include "sea/invariants.hpp"
#include "sea/template.hpp"
#include "sea/transvectant.hpp"
#include "sea/univariate.hpp"

namespace sea::cli {

namespace {

using nlohmann::ordered_json;

std::vector<Scalar> parse_csv(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
    if (out.empty()) throw ParseError("empty coefficient list");
    return out;
}

bool is_poly_string(const std::string& text) { return text.find('x') != std::string::npos; }

UnivariatePoly parse_poly(const std::string& text) {
    if (!is_poly_string(text)) return UnivariatePoly(parse_csv(text));
    const EquationTemplate t = EquationTemplate::parse(text);
    if (!t.params().empty()) throw ParseError("polynomial \"" + text + "\" contains parameters");
    return t.expand({});
}

/// Ascending CSV gives the degree by length; a poly-string is homogenized to
/// its own degree unless one is given.
BinaryForm parse_form(const std::string& text, std::optional<int> degree) {
    if (!is_poly_string(text)) {
        BinaryForm f = make_form(static_cast<int>(std::count(text.begin(), text.end(), ',')), parse_csv(text));
        if (degree && *degree != f.degree()) {
            throw PreconditionError("coefficient list has degree " + std::to_string(f.degree()) + ", expected " +
                                    std::to_string(*degree));
        }
        return f;
    }
    const UnivariatePoly p = parse_poly(text);
    return homogenize(p, degree.value_or(std::max(p.degree(), 0)));
}

ordered_json form_json(const BinaryForm& f) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return ordered_json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

int cmd_transvect(std::ostream& out, const std::string& f_text, const std::string& g_text, int r) {
    const BinaryForm f = parse_form(f_text, std::nullopt);
    const BinaryForm g = parse_form(g_text, std::nullopt);
    out << form_json(transvect(f, g, r)).dump() << '\n';
    return kSuccess;
}

int cmd_invariants(std::ostream& out, const std::string& kind_text, const std::string& coeffs) {
    const SystemKind kind = system_kind_from_string(kind_text);
    switch (kind) {
        case SystemKind::sextic: {
            const auto sys = sextic_invariants(parse_form(coeffs, 6));
            out << to_json(sys.invariants, sextic_absolute(sys.invariants)) << '\n';
            break;
        }
        case SystemKind::octavic: {
            const auto sys = octavic_invariants(parse_form(coeffs, 8));
            out << to_json(sys.invariants, octavic_absolute(sys.invariants)) << '\n';
            break;
        }
        case SystemKind::decimic: {
            const auto sys = decimic_invariants(parse_form(coeffs, 10));
            out << to_json(sys.invariants, AbsoluteInvariants(SystemKind::decimic)) << '\n';
            break;
        }
        case SystemKind::general: {
            const auto sys = general_invariants(parse_form(coeffs, std::nullopt));
            out << to_json(sys.invariants, general_absolute(sys.invariants)) << '\n';
            break;
        }
        case SystemKind::genus10: {
            const auto special = genus10_special(parse_form(coeffs, 22));
            out << to_json(special.invariants, special.absolute) << '\n';
            break;
        }
    }
    return kSuccess;
}

int cmd_genus(std::ostream& out, int n, const std::string& poly) {
    out << make_curve(n, parse_poly(poly)).to_json() << '\n';
    return kSuccess;
}

int cmd_isomorphic(std::ostream& out, std::ostream& err, int genus, const std::string& f1, const std::string& f2) {
    IsoResult r;
    if (genus == 2) {
        r = genus2_isomorphic(parse_form(f1, 6), parse_form(f2, 6));
    } else if (genus == 3) {
        r = genus3_isomorphic(parse_form(f1, 8), parse_form(f2, 8));
    } else {
        throw PreconditionError("isomorphic supports --genus 2 or 3, got " + std::to_string(genus));
    }
    if (r.outcome == IsoOutcome::inconclusive) {
        err << "inconclusive: " << r.reason << '\n';
        return kUsage;
    }
    const bool iso = r.outcome == IsoOutcome::isomorphic;
    out << ordered_json{{"isomorphic", iso}}.dump() << '\n';
    return iso ? kSuccess : kNegative;
}

struct ListOptions {
    CatalogFilter filter;
    bool csv = false;
};

int cmd_catalog_list(std::ostream& out, const ListOptions& o) {
    const Catalog cat = Catalog::load_default();
    const auto rows = cat.query(o.filter);
    if (o.csv) {
        out << Catalog::csv_header() << '\n';
        for (const auto* r : rows) out << Catalog::record_to_csv(*r) << '\n';
        return kSuccess;
    }
    ordered_json arr = ordered_json::array();
    for (const auto* r : rows) arr.push_back(ordered_json::parse(record_to_json(*r)));
    out << arr.dump() << '\n';
    return kSuccess;
}

int cmd_catalog_verify(std::ostream& out, std::ostream& err, std::optional<int> genus) {
    const VerificationReport rep = Catalog::load_default().verify_all(genus);
    out << rep.to_json() << '\n';
    if (!rep.ok()) err << rep.rows_hard_failed << " unflagged row(s) failed verification\n";
    return rep.ok() ? kSuccess : kNegative;
}

int cmd_catalog_specialize(std::ostream& out, const std::string& id, const std::string& params) {
    const Catalog cat = Catalog::load_default();
    const FamilyRecord* r = cat.find(id);
    if (r == nullptr) throw PreconditionError("no catalog record with id " + id);
    out << specialize(*r, params.empty() ? std::map<int, Scalar>{} : parse_params(params)).to_json() << '\n';
    return kSuccess;
}

int cmd_catalog_inclusions(std::ostream& out, int genus) {
    out << Catalog::load_default().inclusions(genus).to_json() << '\n';
    return kSuccess;
}

int cmd_catalog_export(std::ostream& out, const std::string& format) {
    const Catalog cat = Catalog::load_default();
    if (format == "jsonl") {
        out << cat.export_jsonl();
    } else if (format == "csv") {
        out << cat.export_csv();
    } else {
        throw PreconditionError("unknown export format " + format);
    }
    return kSuccess;
}

}  // namespace

CommandResult execute(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    std::function<int()> action;

    CLI::App app{"Exact binary-form invariants, superelliptic curves and the genus 5-10 family catalog", "sea"};
    app.require_subcommand(1);

    std::string f_text, g_text, kind, coeffs, poly, f1, f2, id, params, format = "jsonl";
    int r = 0, n = 0, genus = 0;

    auto* tv = app.add_subcommand("transvect", "r-th transvectant of two binary forms");
    tv->add_option("--f", f_text, "first form: ascending CSV or poly-string")->required();
    tv->add_option("--g", g_text, "second form: ascending CSV or poly-string")->required();
    tv->add_option("-r", r, "transvection order")->required();
    tv->callback([&] { action = [&] { return cmd_transvect(out, f_text, g_text, r); }; });

    auto* inv = app.add_subcommand("invariants", "invariant system of a binary form");
    inv->add_option("--kind", kind, "sextic|octavic|decimic|general|genus10")->required();
    inv->add_option("--coeffs", coeffs, "ascending CSV or poly-string")->required();
    inv->callback([&] { action = [&] { return cmd_invariants(out, kind, coeffs); }; });

    auto* gen = app.add_subcommand("genus", "genus of y^n = f(x)");
    gen->add_option("-n", n, "level")->required();
    gen->add_option("--poly", poly, "f as poly-string or ascending CSV")->required();
    gen->callback([&] { action = [&] { return cmd_genus(out, n, poly); }; });

    auto* iso = app.add_subcommand("isomorphic", "hyperelliptic isomorphism test in genus 2 or 3");
    iso->add_option("--genus", genus, "2 or 3")->required();
    iso->add_option("--f1", f1, "first form")->required();
    iso->add_option("--f2", f2, "second form")->required();
    iso->callback([&] { action = [&] { return cmd_isomorphic(out, err, genus, f1, f2); }; });

    auto* cat = app.add_subcommand("catalog", "query and verify the family catalog");
    cat->require_subcommand(1);

    ListOptions list;
    auto* ls = cat->add_subcommand("list", "list catalog rows");
    ls->add_option("--genus", list.filter.genus, "genus");
    ls->add_option("--group", list.filter.reduced_group, "reduced group, e.g. A5, C11, D14 or a kind such as Cm");
    ls->add_option("--full-group", list.filter.full_group_name, "full group name as printed");
    ls->add_option("-n", list.filter.n, "level");
    ls->add_option("--min-delta", list.filter.min_delta, "minimum dimension");
    ls->add_option("--max-delta", list.filter.max_delta, "maximum dimension");
    auto* as_json = ls->add_flag("--json", "JSON array output (default)");
    ls->add_flag("--csv", list.csv, "CSV output")->excludes(as_json);
    ls->callback([&] { action = [&] { return cmd_catalog_list(out, list); }; });

    std::optional<int> verify_genus;
    auto* ver = cat->add_subcommand("verify", "run the per-row consistency checks");
    ver->add_option("--genus", verify_genus, "restrict to one genus");
    ver->callback([&] { action = [&] { return cmd_catalog_verify(out, err, verify_genus); }; });

    auto* spec = cat->add_subcommand("specialize", "build the curve of one row at given parameters");
    spec->add_option("--id", id, "row id, e.g. g5-c1-1")->required();
    spec->add_option("--params", params, "\"a1=...,a2=...\"");
    spec->callback([&] { action = [&] { return cmd_catalog_specialize(out, id, params); }; });

    auto* inc = cat->add_subcommand("inclusions", "syntactic specialization DAG for one genus");
    inc->add_option("--genus", genus, "genus")->required();
    inc->callback([&] { action = [&] { return cmd_catalog_inclusions(out, genus); }; });

    auto* exp = cat->add_subcommand("export", "dump the catalog");
    exp->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    exp->callback([&] { action = [&] { return cmd_catalog_export(out, format); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? kSuccess : kUsage, code == 0 ? out.str() : std::string{}, err.str()};
    }

    int code = kInternal;
    try {
        code = action();
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return {kInternal, {}, err.str()};
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return {kUsage, {}, err.str()};
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return {kUsage, {}, err.str()};
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return {kInternal, {}, err.str()};
    }
    if (code == kUsage || code == kInternal) return {code, {}, err.str()};
    return {code, out.str(), err.str()};
}

}  // namespace sea::cli
