#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "properties.hpp"
#include "sea/catalog.hpp"
#include "sea/invariants.hpp"

using namespace sea;
using testing::PropertyResult;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome from(const PropertyResult& r) { return {r.ok(), r.summary()}; }

Outcome merge(const std::vector<std::pair<std::string, PropertyResult>>& parts) {
    Outcome out{true, ""};
    for (const auto& [label, r] : parts) {
        out.pass = out.pass && r.ok();
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += label + ": " + std::to_string(r.cases) + "/" + std::to_string(r.failures);
        if (!r.ok() && !r.first_failure.empty()) out.detail += " (" + r.first_failure + ")";
        for (const auto& note : r.notes) out.detail += " [" + note + "]";
    }
    return out;
}

BinaryForm pure_power(int d, int sign) {
    std::vector<Scalar> c(static_cast<std::size_t>(d + 1));
    c.front() = sign;
    c.back() = 1;
    return BinaryForm::from_ascending(std::move(c));
}

Outcome criterion1(const Catalog& cat) {
    const auto start = std::chrono::steady_clock::now();
    const auto flags = testing::read_flag_ids(SEA_SOURCE_DIR "/data/FLAGS.md");
    PropertyResult r = testing::catalog_genus_reproduction(cat, flags);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) r.fail("runtime " + std::to_string(secs) + " s");
    r.notes.push_back(std::to_string(secs).substr(0, 5) + " s");
    return merge({{"rows", r}});
}

Outcome criterion5() {
    constexpr int forms = 50;
    constexpr int matrices = 10;
    std::vector<std::pair<std::string, PropertyResult>> parts;
    parts.emplace_back("sextic", testing::invariance_under_unimodular(SystemKind::sextic, 6, forms, matrices, 501));
    parts.emplace_back("octavic", testing::invariance_under_unimodular(SystemKind::octavic, 8, forms, matrices, 502));
    parts.emplace_back("decimic", testing::invariance_under_unimodular(SystemKind::decimic, 10, forms, matrices, 503));
    for (int d : {12, 14, 16}) {
        parts.emplace_back("general d=" + std::to_string(d),
                           testing::invariance_under_unimodular(SystemKind::general, d, forms, matrices, 500 + d));
    }
    parts.emplace_back("abs sextic", testing::absolute_invariance(SystemKind::sextic, 6, forms, matrices, 511));
    parts.emplace_back("abs octavic", testing::absolute_invariance(SystemKind::octavic, 8, forms, matrices, 512));
    for (int d : {12, 14, 16}) {
        parts.emplace_back("abs general d=" + std::to_string(d),
                           testing::absolute_invariance(SystemKind::general, d, forms, matrices, 520 + d));
    }
    return merge(parts);
}

Outcome criterion7() {
    return merge({{"genus 2", testing::isomorphism_soundness(2, 25, 701)},
                  {"genus 3", testing::isomorphism_soundness(3, 25, 702)}});
}

Outcome criterion8() {
    struct Fixture {
        const char* label;
        Scalar value;
        Scalar expected;
    };
    const std::vector<Fixture> fixtures{
        {"J2(X^6+Z^6)", sextic_invariants(pure_power(6, 1)).invariants.at("J2"), 2},
        {"J2(X^6-Z^6)", sextic_invariants(pure_power(6, -1)).invariants.at("J2"), -2},
        {"J2(X^8+Z^8)", octavic_invariants(pure_power(8, 1)).invariants.at("J2"), 280},
        {"J2(X^10+Z^10)", decimic_invariants(pure_power(10, 1)).invariants.at("J2"), 2},
        {"I2(X^12+Z^12)", general_invariants(pure_power(12, 1)).invariants.at("I2"), 2},
    };
    Outcome out{true, ""};
    for (const auto& f : fixtures) {
        const bool ok = f.value == f.expected;
        out.pass = out.pass && ok;
        if (!out.detail.empty()) out.detail += ", ";
        out.detail += std::string(f.label) + " = " + f.value.str() + (ok ? "" : " (expected " + f.expected.str() + ")");
    }
    return out;
}

Outcome criterion9(const Catalog& cat) {
    const VerificationReport rep = cat.verify_all();
    bool covered = rep.rows.size() == cat.records().size();
    for (const auto& row : rep.rows) covered = covered && row.checks.size() == 5;
    std::string detail = std::to_string(rep.rows.size()) + " rows checked, " + std::to_string(rep.rows_passed) +
                         " passed, " + std::to_string(rep.rows_soft_failed) + " flagged, " +
                         std::to_string(rep.rows_hard_failed) + " unexplained";
    return {covered && rep.ok(), detail};
}

}  // namespace

int main() {
    const Catalog cat = Catalog::embedded();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"catalog genus reproduction", [&] { return criterion1(cat); }},
        {"dimension identity", [&] { return from(testing::catalog_dimension_identity(cat)); }},
        {"Riemann-Hurwitz consistency", [&] { return from(testing::catalog_rh_consistency(cat)); }},
        {"Hurwitz bound", [&] { return from(testing::catalog_hurwitz(cat)); }},
        {"invariance suite", criterion5},
        {"transvectant identities", [] { return from(testing::transvectant_identities(120, 601)); }},
        {"isomorphism oracle soundness", criterion7},
        {"fixture values", criterion8},
        {"row-by-row table consistency", [&] { return criterion9(cat); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
