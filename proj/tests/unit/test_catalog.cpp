#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "properties.hpp"
#include "sea/catalog.hpp"
#include "sea/error.hpp"

using namespace sea;

TEST_CASE("template parsing") {
    const auto t = EquationTemplate::parse("x^12+sum(i=1..5,a_i*x^(2*i))+1");
    CHECK(t.degree() == 12);
    CHECK(t.params() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(EquationTemplate::parse(t.str()).str() == t.str());
    CHECK(t.expand({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}}).str() == "x^12+1");
    CHECK_THROWS_AS(t.expand({{1, 0}}), PreconditionError);

    const auto p = EquationTemplate::parse("prod(i=1..3,x^4+a_i*x^2+1)");
    CHECK(p.factors().size() == 3);
    CHECK(p.degree() == 12);

    const auto q = EquationTemplate::parse("x^3+sqrt(-3)*a1*x+1");
    CHECK(q.expand({{1, 2}}).coeff(1) == Scalar::quadratic(0, 2, -3));

    CHECK_THROWS_AS(EquationTemplate::parse("x^"), ParseError);
    CHECK_THROWS_AS(EquationTemplate::parse("sum(i=1..2,a_j)"), ParseError);
}

TEST_CASE("catalog queries") {
    const Catalog cat = Catalog::embedded();
    CHECK(cat.records().size() == 210);

    CatalogFilter g5;
    g5.genus = 5;
    CHECK(cat.query(g5).size() == 20);

    CatalogFilter a5 = g5;
    a5.reduced_group = "A5";
    const auto rows = cat.query(a5);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]->equation->str() == "x*(x^10+11*x^5-1)");
    CHECK(rows[0]->group_order() == 120);

    CatalogFilter rigid;
    rigid.max_delta = 0;
    for (const auto* r : cat.query(rigid)) CHECK(r->delta == 0);
}

TEST_CASE("specialization") {
    const Catalog cat = Catalog::embedded();
    const FamilyRecord* row = cat.find("g5-c4-8");
    REQUIRE(row != nullptr);
    CHECK(specialize(*row, parse_params("a1=1,a2=3,a3=5")).genus() == 5);
    // x^4 + 2x^2 + 1 = (x^2 + 1)^2
    CHECK_THROWS_AS(specialize(*row, parse_params("a1=2,a2=3,a3=5")), PreconditionError);
    CHECK_THROWS_AS(specialize(*row, parse_params("a1=1,a2=3")), PreconditionError);
    CHECK(specialize(*cat.find("g5-c2-4"), {}).genus() == 5);
    CHECK(parse_params("a1=-3/2,a2=sqrt(-3)").at(2) == Scalar::sqrt_of(-3));
    CHECK_THROWS_AS(parse_params("b1=2"), ParseError);
}

TEST_CASE("record round-trip and export") {
    const Catalog cat = Catalog::embedded();
    for (const auto& r : cat.records()) CHECK(record_to_json(record_from_json(record_to_json(r))) == record_to_json(r));
    const Catalog again = Catalog::from_jsonl(cat.export_jsonl());
    CHECK(again.export_jsonl() == cat.export_jsonl());

    const std::string csv = cat.export_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 211);
    CHECK(csv.rfind(Catalog::csv_header(), 0) == 0);

    CHECK_THROWS_AS(record_from_json("{}"), ParseError);
    CHECK_THROWS_AS(record_from_json("not json"), ParseError);
}

TEST_CASE("verification report") {
    const Catalog cat = Catalog::embedded();
    const VerificationReport rep = cat.verify_all();
    CHECK(rep.ok());
    CHECK(rep.rows.size() == 210);
    CHECK(rep.rows_hard_failed == 0);
    CHECK(rep.per_check.at("hurwitz").fail == 0);
    CHECK(rep.per_check.at("signature_completion").fail == 0);
    for (const auto& row : rep.rows) {
        if (!row.passed()) CHECK(row.soft);
    }
    const auto g5 = cat.verify_all(5);
    CHECK(g5.rows.size() == 20);
}

TEST_CASE("flags file lists exactly the flagged rows") {
    const auto listed = testing::read_flag_ids(SEA_SOURCE_DIR "/data/FLAGS.md");
    const std::set<std::string> ids(listed.begin(), listed.end());
    CHECK(ids.size() == listed.size());
    std::set<std::string> flagged;
    for (const auto& r : Catalog::embedded().records()) {
        if (r.status != RecordStatus::ok) flagged.insert(r.id);
    }
    CHECK(ids == flagged);
}

TEST_CASE("inclusion example") {
    const Catalog cat = Catalog::embedded();
    const auto special = cat.find("g5-c4-10");
    const auto general = cat.find("g5-c1-1");
    REQUIRE(special != nullptr);
    const auto match = match_specialization(*special->equation, *general->equation);
    REQUIRE(match.has_value());
    CHECK(match->at(3) == ParamPoly::param(1));
    CHECK(match->at(1).is_zero());
}

TEST_CASE("inclusion graphs are acyclic and raise the dimension") {
    const Catalog cat = Catalog::embedded();
    for (int g = 5; g <= 10; ++g) {
        const InclusionGraph graph = cat.inclusions(g);
        std::map<std::string, std::vector<std::string>> out;
        for (const auto& e : graph.edges) {
            const auto* from = cat.find(e.from);
            const auto* to = cat.find(e.to);
            CHECK(from->genus == g);
            CHECK(to->genus == g);
            CHECK(from->delta <= to->delta);
            CHECK(e.from != e.to);
            out[e.from].push_back(e.to);
        }
        // Kahn-style peel: an acyclic graph empties completely.
        std::map<std::string, int> indeg;
        for (const auto& n : graph.nodes) indeg[n] = 0;
        for (const auto& e : graph.edges) ++indeg[e.to];
        std::vector<std::string> ready;
        for (const auto& [n, k] : indeg) {
            if (k == 0) ready.push_back(n);
        }
        std::size_t seen = 0;
        while (!ready.empty()) {
            const std::string n = ready.back();
            ready.pop_back();
            ++seen;
            for (const auto& m : out[n]) {
                if (--indeg[m] == 0) ready.push_back(m);
            }
        }
        CHECK(seen == graph.nodes.size());
    }
}
