#include "sea/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sea/error.hpp"

namespace sea {

namespace detail {
extern const std::string_view embedded_catalog;
}

using nlohmann::ordered_json;

std::string_view to_string(RecordStatus status) {
    switch (status) {
        case RecordStatus::ok: return "ok";
        case RecordStatus::flagged_illegible: return "flagged_illegible";
        case RecordStatus::flagged_corrected: return "flagged_corrected";
        case RecordStatus::flagged_inconsistent: return "flagged_inconsistent";
        case RecordStatus::missing_equation: return "missing_equation";
    }
    return "?";
}

RecordStatus record_status_from_string(std::string_view text) {
    for (RecordStatus s : {RecordStatus::ok, RecordStatus::flagged_illegible, RecordStatus::flagged_corrected,
                           RecordStatus::flagged_inconsistent, RecordStatus::missing_equation}) {
        if (to_string(s) == text) return s;
    }
    throw ParseError("unknown record status \"" + std::string(text) + "\"");
}

std::string_view to_string(CheckOutcome outcome) {
    switch (outcome) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::fail: return "fail";
        case CheckOutcome::skipped: return "skipped";
    }
    return "?";
}

// ---------------------------------------------------------------- records

namespace {

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<std::string>();
}

}  // namespace

FamilyRecord record_from_json(std::string_view line) {
    FamilyRecord r;
    try {
        const auto j = nlohmann::json::parse(line);
        r.id = j.at("id").get<std::string>();
        r.genus = j.at("genus").get<int>();
        r.case_nr = j.at("case").get<int>();
        const auto& rg = j.at("reduced_group");
        r.reduced_group.kind = reduced_kind_from_string(rg.at("kind").get<std::string>());
        r.reduced_group.m = rg.at("m").is_null() ? 0 : rg.at("m").get<int>();
        r.full_group_name = optional_string(j, "full_group");
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        r.printed_signature =
            Signature(j.at("signature").at("indices").get<std::vector<std::pair<int, int>>>());
        r.delta = j.at("delta").get<int>();
        if (auto eq = optional_string(j, "equation")) r.equation = EquationTemplate::parse(*eq);
        r.status = record_status_from_string(j.at("status").get<std::string>());
        if (j.contains("note")) r.note = optional_string(j, "note");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("catalog record: " + std::string(e.what()));
    } catch (const PreconditionError& e) {
        throw ParseError("catalog record: " + std::string(e.what()));
    }
    if (r.n < 2) throw ParseError("catalog record " + r.id + ": n must be >= 2");
    if (r.delta < 0) throw ParseError("catalog record " + r.id + ": delta must be >= 0");
    if (r.equation.has_value() == (r.status == RecordStatus::missing_equation)) {
        throw ParseError("catalog record " + r.id + ": status " + std::string(to_string(r.status)) +
                         " does not match the equation field");
    }
    return r;
}

std::string record_to_json(const FamilyRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["genus"] = r.genus;
    j["case"] = r.case_nr;
    ordered_json rg;
    rg["kind"] = std::string(to_string(r.reduced_group.kind));
    const bool has_m = r.reduced_group.kind == ReducedKind::Cm || r.reduced_group.kind == ReducedKind::D2m;
    rg["m"] = has_m ? ordered_json(r.reduced_group.m) : ordered_json(nullptr);
    j["reduced_group"] = std::move(rg);
    j["full_group"] = r.full_group_name ? ordered_json(*r.full_group_name) : ordered_json(nullptr);
    j["n"] = r.n;
    j["m"] = r.m;
    j["signature"] = ordered_json{{"indices", r.printed_signature.indices()}};
    j["delta"] = r.delta;
    j["equation"] = r.equation ? ordered_json(r.equation->str()) : ordered_json(nullptr);
    j["status"] = std::string(to_string(r.status));
    j["note"] = r.note ? ordered_json(*r.note) : ordered_json(nullptr);
    return j.dump();
}

std::map<int, Scalar> parse_params(std::string_view text) {
    std::map<int, Scalar> out;
    std::string compact;
    for (char c : text) {
        if (c != ' ') compact += c;
    }
    std::stringstream ss(compact);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq < 2 || item[0] != 'a') {
            throw ParseError("parameter assignment \"" + item + "\" is not of the form a<k>=<value>");
        }
        const std::string idx = item.substr(1, eq - 1);
        if (!std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }) || idx.size() > 6) {
            throw ParseError("bad parameter name \"a" + idx + "\"");
        }
        const int k = std::stoi(idx);
        if (!out.emplace(k, Scalar::parse(item.substr(eq + 1))).second) {
            throw ParseError("parameter a" + idx + " assigned twice");
        }
    }
    return out;
}

SuperellipticCurve specialize(const FamilyRecord& record, const std::map<int, Scalar>& params) {
    if (!record.equation) throw PreconditionError("record " + record.id + " has no equation");
    UnivariatePoly f = record.equation->expand(params);
    SuperellipticCurve curve = make_curve(record.n, std::move(f));
    if (curve.genus() != record.genus) {
        throw InternalError("record " + record.id + " specializes to genus " + std::to_string(curve.genus()) +
                            ", table genus " + std::to_string(record.genus));
    }
    return curve;
}

// ---------------------------------------------------------------- verification

bool RowReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.outcome == CheckOutcome::fail; });
}

const CheckResult& RowReport::check(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return c;
    }
    throw PreconditionError("no check named " + std::string(name));
}

namespace {

CheckResult compare(std::string name, long expected, long actual) {
    return {std::move(name), expected == actual ? CheckOutcome::pass : CheckOutcome::fail, std::to_string(expected),
            std::to_string(actual)};
}

CheckResult skipped(std::string name, std::string why) {
    return {std::move(name), CheckOutcome::skipped, {}, std::move(why)};
}

}  // namespace

RowReport verify_record(const FamilyRecord& r) {
    RowReport rep;
    rep.id = r.id;
    rep.status = r.status;
    rep.soft = r.soft_flagged();

    if (r.equation) {
        const int d = r.equation->degree();
        CheckResult c = compare("genus", r.genus, d >= 2 ? genus_formula(r.n, d) : -1);
        c.actual += " (n=" + std::to_string(r.n) + ", deg=" + std::to_string(d) + ")";
        rep.checks.push_back(std::move(c));

        const auto& ps = r.equation->params();
        CheckResult p = compare("param_count", r.delta, static_cast<long>(ps.size()));
        std::vector<int> expected(ps.size());
        std::iota(expected.begin(), expected.end(), 1);
        if (ps != expected) {
            p.outcome = CheckOutcome::fail;
            p.actual += " (parameters are not a1..a" + std::to_string(ps.size()) + ")";
        }
        rep.checks.push_back(std::move(p));
    } else {
        rep.checks.push_back(skipped("genus", "no equation"));
        rep.checks.push_back(skipped("param_count", "no equation"));
    }

    const long order = r.group_order();
    try {
        Completion comp = complete_signature(r.genus, order, r.printed_signature);
        CheckResult c{"signature_completion", comp.ok() ? CheckOutcome::pass : CheckOutcome::fail, "residual 0",
                      std::string(to_string(comp.status)) + " " + comp.signature.str()};
        if (comp.status == CompletionStatus::failed) {
            c.actual += " (residual " + rh_residual(r.genus, order, r.printed_signature).get_str() + ")";
        }
        rep.checks.push_back(std::move(c));
        if (comp.ok()) {
            rep.checks.push_back(compare("dimension", r.delta, comp.signature.size() - 3));
        } else {
            rep.checks.push_back(skipped("dimension", "no completed signature"));
        }
        rep.completion = std::move(comp);
    } catch (const PreconditionError& e) {
        rep.checks.push_back({"signature_completion", CheckOutcome::fail, "residual 0", e.what()});
        rep.checks.push_back(skipped("dimension", "no completed signature"));
    }

    const long bound = hurwitz_bound(r.genus);
    rep.checks.push_back({"hurwitz", order <= bound ? CheckOutcome::pass : CheckOutcome::fail,
                          "<= " + std::to_string(bound), std::to_string(order)});
    return rep;
}

std::string VerificationReport::to_json() const {
    ordered_json j;
    j["rows"] = rows.size();
    j["passed"] = rows_passed;
    j["soft_failed"] = rows_soft_failed;
    j["hard_failed"] = rows_hard_failed;
    j["ok"] = ok();
    ordered_json checks = ordered_json::object();
    for (const auto& [name, c] : per_check) {
        checks[name] = ordered_json{{"pass", c.pass}, {"fail", c.fail}, {"skipped", c.skipped}};
    }
    j["checks"] = std::move(checks);
    ordered_json failures = ordered_json::array();
    for (const auto& row : rows) {
        for (const auto& c : row.checks) {
            if (c.outcome != CheckOutcome::fail) continue;
            failures.push_back(ordered_json{{"id", row.id},
                                            {"status", std::string(to_string(row.status))},
                                            {"soft", row.soft},
                                            {"check", c.name},
                                            {"expected", c.expected},
                                            {"actual", c.actual}});
        }
    }
    j["failures"] = std::move(failures);
    return j.dump();
}

// ---------------------------------------------------------------- specialization matching

namespace {

constexpr int kGeneralOffset = 1 << 20;

using Assignment = std::map<int, ParamPoly>;
using Pair = std::pair<SymbolicPoly, const SymbolicPoly*>;  // (general, special)

bool has_general(const ParamMonomial& m) {
    return std::any_of(m.begin(), m.end(), [](const auto& pe) { return pe.first >= kGeneralOffset; });
}

// Solves general parameters that occur alone and linearly in some coefficient,
// zeroes the rest, then checks every pair exactly.
bool solve_pairs(const std::vector<Pair>& pairs, Assignment& sol) {
    std::set<int> unknowns;
    for (const auto& [g, s] : pairs) unknowns.merge(g.params());
    std::erase_if(unknowns, [](int p) { return p < kGeneralOffset; });

    for (bool progress = true; progress;) {
        progress = false;
        for (const auto& [g, s] : pairs) {
            for (const auto& [k, coef] : g.coeffs()) {
                const ParamPoly c = coef.substitute(sol);
                const std::pair<const ParamMonomial, Scalar>* lone = nullptr;
                int count = 0;
                for (const auto& term : c.terms()) {
                    if (has_general(term.first)) {
                        lone = &term;
                        ++count;
                    }
                }
                if (count != 1 || lone->first.size() != 1 || lone->first.front().second != 1) continue;
                const int p = lone->first.front().first;
                ParamPoly rest = c;
                rest -= ParamPoly::param(p) * ParamPoly(lone->second);
                sol[p] = (s->coeff(k) - rest) * ParamPoly(Scalar(1) / lone->second);
                progress = true;
            }
        }
    }
    for (int p : unknowns) sol.emplace(p, ParamPoly());
    return std::all_of(pairs.begin(), pairs.end(), [&](const Pair& pr) { return pr.first.substitute(sol) == *pr.second; });
}

Assignment strip_offset(const Assignment& sol) {
    Assignment out;
    for (const auto& [p, v] : sol) out.emplace(p - kGeneralOffset, v);
    return out;
}

}  // namespace

std::optional<std::map<int, ParamPoly>> match_specialization(const EquationTemplate& special,
                                                              const EquationTemplate& general) {
    if (special.degree() != general.degree()) return std::nullopt;

    Assignment sol;
    if (solve_pairs({{general.symbolic().renumbered(kGeneralOffset), &special.symbolic()}}, sol)) {
        return strip_offset(sol);
    }

    const auto& sf = special.factors();
    const auto& gf = general.factors();
    if (sf.size() != gf.size() || sf.size() > 8 || sf.size() < 2) return std::nullopt;
    std::vector<SymbolicPoly> gr;
    for (const auto& f : gf) gr.push_back(f.renumbered(kGeneralOffset));
    std::vector<std::size_t> perm(gf.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool degrees_match = true;
        for (std::size_t i = 0; i < perm.size() && degrees_match; ++i) {
            degrees_match = gr[perm[i]].degree() == sf[i].degree();
        }
        if (!degrees_match) continue;
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < perm.size(); ++i) pairs.emplace_back(gr[perm[i]], &sf[i]);
        sol.clear();
        if (solve_pairs(pairs, sol)) return strip_offset(sol);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::string InclusionGraph::to_json() const {
    ordered_json j;
    j["nodes"] = nodes;
    ordered_json edges_json = ordered_json::array();
    for (const auto& e : edges) {
        ordered_json assignment = ordered_json::object();
        for (const auto& [p, v] : e.assignment) assignment["a" + std::to_string(p)] = v.str();
        edges_json.push_back(ordered_json{{"from", e.from}, {"to", e.to}, {"assignment", std::move(assignment)}});
    }
    j["edges"] = std::move(edges_json);
    return j.dump();
}

// ---------------------------------------------------------------- catalog

Catalog::Catalog(std::vector<FamilyRecord> records) : records_(std::move(records)) {
    std::set<std::string_view> ids;
    for (const auto& r : records_) {
        if (!ids.insert(r.id).second) throw ParseError("duplicate catalog id " + r.id);
    }
}

Catalog Catalog::from_jsonl(std::string_view text) {
    std::vector<FamilyRecord> records;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            records.push_back(record_from_json(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Catalog(std::move(records));
}

Catalog Catalog::embedded() {
    static const Catalog cat = from_jsonl(detail::embedded_catalog);
    return cat;
}

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_jsonl(ss.str());
}

Catalog Catalog::load_default() {
    const char* path = std::getenv("SEA_CATALOG");
    if (path != nullptr && *path != '\0') return from_file(path);
    return embedded();
}

const FamilyRecord* Catalog::find(std::string_view id) const {
    for (const auto& r : records_) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::vector<const FamilyRecord*> Catalog::query(const CatalogFilter& f) const {
    std::vector<const FamilyRecord*> out;
    for (const auto& r : records_) {
        if (f.genus && r.genus != *f.genus) continue;
        if (f.reduced_group && *f.reduced_group != r.reduced_group.str() &&
            *f.reduced_group != to_string(r.reduced_group.kind)) {
            continue;
        }
        if (f.full_group_name && r.full_group_name != f.full_group_name) continue;
        if (f.n && r.n != *f.n) continue;
        if (f.min_delta && r.delta < *f.min_delta) continue;
        if (f.max_delta && r.delta > *f.max_delta) continue;
        out.push_back(&r);
    }
    return out;
}

VerificationReport Catalog::verify_all(std::optional<int> genus) const {
    VerificationReport rep;
    for (const auto& r : records_) {
        if (genus && r.genus != *genus) continue;
        RowReport row = verify_record(r);
        for (const auto& c : row.checks) {
            CheckCounts& cc = rep.per_check[c.name];
            switch (c.outcome) {
                case CheckOutcome::pass: ++cc.pass; break;
                case CheckOutcome::fail: ++cc.fail; break;
                case CheckOutcome::skipped: ++cc.skipped; break;
            }
        }
        if (row.passed()) {
            ++rep.rows_passed;
        } else if (row.soft) {
            ++rep.rows_soft_failed;
        } else {
            ++rep.rows_hard_failed;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

InclusionGraph Catalog::inclusions(int genus) const {
    std::vector<const FamilyRecord*> rows;
    for (const auto& r : records_) {
        if (r.genus == genus && r.equation) rows.push_back(&r);
    }
    const std::size_t n = rows.size();
    std::vector<std::vector<std::optional<Assignment>>> match(n, std::vector<std::optional<Assignment>>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || rows[a]->n != rows[b]->n || rows[a]->delta > rows[b]->delta) continue;
            match[a][b] = match_specialization(*rows[a]->equation, *rows[b]->equation);
        }
    }
    // Mutually specializing templates describe the same family: no edge.
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!match[a][b]) continue;
            const bool mutual = match[b][a].has_value() ||
                                (rows[b]->delta <= rows[a]->delta && rows[b]->n == rows[a]->n &&
                                 match_specialization(*rows[b]->equation, *rows[a]->equation).has_value());
            adj[a][b] = !mutual;
        }
    }

    // Reachability; a cycle would mean the matcher is inconsistent.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (adj[u][v] && !reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
            }
        }
        if (reach[s][s]) throw InternalError("inclusion graph has a cycle through " + rows[s]->id);
    }

    InclusionGraph g;
    for (const auto* r : rows) g.nodes.push_back(r->id);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!adj[a][b]) continue;
            bool redundant = false;
            for (std::size_t w = 0; w < n && !redundant; ++w) {
                redundant = w != b && adj[a][w] && reach[w][b];
            }
            if (!redundant) g.edges.push_back({rows[a]->id, rows[b]->id, *match[a][b]});
        }
    }
    return g;
}

std::string Catalog::export_jsonl() const {
    std::string out;
    for (const auto& r : records_) {
        out += record_to_json(r);
        out += '\n';
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string Catalog::csv_header() {
    return "id,genus,case,reduced_group,full_group,n,m,signature,delta,equation,status,note";
}

std::string Catalog::record_to_csv(const FamilyRecord& r) {
    const std::vector<std::string> fields = {r.id,
                                             std::to_string(r.genus),
                                             std::to_string(r.case_nr),
                                             r.reduced_group.str(),
                                             r.full_group_name.value_or(""),
                                             std::to_string(r.n),
                                             std::to_string(r.m),
                                             r.printed_signature.str(),
                                             std::to_string(r.delta),
                                             r.equation ? r.equation->str() : "",
                                             std::string(to_string(r.status)),
                                             r.note.value_or("")};
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    return out;
}

std::string Catalog::export_csv() const {
    std::string out = csv_header() + "\n";
    for (const auto& r : records_) out += record_to_csv(r) + "\n";
    return out;
}

}  // namespace sea
