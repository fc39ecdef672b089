#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sea/curves.hpp"
#include "sea/scalar.hpp"
#include "sea/template.hpp"

namespace sea {

enum class RecordStatus { ok, flagged_illegible, flagged_corrected, flagged_inconsistent, missing_equation };
std::string_view to_string(RecordStatus status);
RecordStatus record_status_from_string(std::string_view text);

/// One superelliptic family of the genus 5..10 classification.
struct FamilyRecord {
    std::string id;  // g<genus>-c<case>-<seq>
    int genus = 0;
    int case_nr = 0;
    ReducedGroup reduced_group;
    std::optional<std::string> full_group_name;
    int n = 0;
    int m = 0;  // 0 where the table cell is blank
    Signature printed_signature;
    int delta = 0;
    std::optional<EquationTemplate> equation;
    RecordStatus status = RecordStatus::ok;
    std::optional<std::string> note;

    /// Illegible and inconsistent rows: check failures are reported, not fatal.
    bool soft_flagged() const noexcept {
        return status == RecordStatus::flagged_illegible || status == RecordStatus::flagged_inconsistent;
    }
    long group_order() const { return full_group_order(n, reduced_group); }
};

/// Parses one JSONL line. Throws ParseError on schema violations.
FamilyRecord record_from_json(std::string_view line);
/// Compact single-line JSON with a fixed key order.
std::string record_to_json(const FamilyRecord& record);

/// "a1=1,a2=-3/2,a3=sqrt(-3)" -> {1: 1, 2: -3/2, 3: sqrt(-3)}.
std::map<int, Scalar> parse_params(std::string_view text);

/// Expands the template at params and builds the curve. Throws
/// PreconditionError for missing or extra parameters, a missing template or a
/// repeated root, and InternalError when the genus disagrees with the record.
SuperellipticCurve specialize(const FamilyRecord& record, const std::map<int, Scalar>& params);

enum class CheckOutcome { pass, fail, skipped };
std::string_view to_string(CheckOutcome outcome);

struct CheckResult {
    std::string name;  // genus, param_count, signature_completion, dimension, hurwitz
    CheckOutcome outcome = CheckOutcome::skipped;
    std::string expected;
    std::string actual;
};

struct RowReport {
    std::string id;
    RecordStatus status = RecordStatus::ok;
    bool soft = false;
    std::vector<CheckResult> checks;
    std::optional<Completion> completion;

    bool passed() const;
    /// A failing check on a row that is not soft-flagged.
    bool hard_failure() const { return !soft && !passed(); }
    const CheckResult& check(std::string_view name) const;
};

RowReport verify_record(const FamilyRecord& record);

struct CheckCounts {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

struct VerificationReport {
    std::vector<RowReport> rows;
    std::map<std::string, CheckCounts> per_check;
    int rows_passed = 0;
    int rows_soft_failed = 0;
    int rows_hard_failed = 0;

    bool ok() const noexcept { return rows_hard_failed == 0; }
    /// {"rows": n, "passed", "soft_failed", "hard_failed", "checks": {...}, "failures": [...]}.
    std::string to_json() const;
};

struct CatalogFilter {
    std::optional<int> genus;
    std::optional<std::string> reduced_group;  // "A5", "C11", "D14" or a kind such as "Cm"
    std::optional<std::string> full_group_name;
    std::optional<int> n;
    std::optional<int> min_delta;
    std::optional<int> max_delta;
};

struct InclusionEdge {
    std::string from;  // the specialization
    std::string to;    // the more general family
    /// Values of the target's parameters in terms of the source's.
    std::map<int, ParamPoly> assignment;
};

struct InclusionGraph {
    std::vector<std::string> nodes;
    std::vector<InclusionEdge> edges;

    /// {"nodes": [...], "edges": [{"from", "to", "assignment": {"a3": "a1", ...}}]}.
    std::string to_json() const;
};

/// Parameter values making `general` equal to `special`, if the syntactic
/// matcher finds them. Keys are general's parameters, values polynomials in
/// special's parameters.
std::optional<std::map<int, ParamPoly>> match_specialization(const EquationTemplate& special,
                                                              const EquationTemplate& general);

class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<FamilyRecord> records);

    /// The dataset compiled into the library.
    static Catalog embedded();
    static Catalog from_jsonl(std::string_view text);
    static Catalog from_file(const std::string& path);
    /// $SEA_CATALOG when set, the embedded dataset otherwise.
    static Catalog load_default();

    const std::vector<FamilyRecord>& records() const noexcept { return records_; }
    const FamilyRecord* find(std::string_view id) const;

    /// Matching rows in catalog order.
    std::vector<const FamilyRecord*> query(const CatalogFilter& filter) const;
    VerificationReport verify_all(std::optional<int> genus = std::nullopt) const;
    /// Syntactic specialization DAG over one genus, transitively reduced.
    InclusionGraph inclusions(int genus) const;

    std::string export_jsonl() const;
    /// Header row plus one line per record.
    std::string export_csv() const;
    static std::string csv_header();
    static std::string record_to_csv(const FamilyRecord& record);

private:
    std::vector<FamilyRecord> records_;
};

}  // namespace sea
