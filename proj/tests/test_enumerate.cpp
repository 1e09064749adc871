#include "doctest.h"

#include <sstream>

#include "isolation/canonical.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/solver.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("census matches the labeled-graph oracle") {
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_connected(n).size() == oracle::connected_classes(n));
}

TEST_CASE("census values") {
    CHECK(enumerate_connected(3).size() == 2);
    auto four = enumerate_connected(4);
    CHECK(four.size() == 6);
    std::set<std::string> forms;
    for (const auto& g : four) forms.insert(canonical_form(g));
    CHECK(forms.count(canonical_form(diamond_graph())) == 1);
    CHECK(forms.count(canonical_form(complete_graph(4))) == 1);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK(enumerate_connected(7, 2).size() == 853);
    CHECK_THROWS_AS(enumerate_connected(10), std::out_of_range);
}

TEST_CASE("enumerated graphs are connected and pairwise non-isomorphic") {
    auto graphs = enumerate_connected(7);
    std::set<std::string> forms;
    for (const auto& g : graphs) {
        CHECK(oracle::connected(g));
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == graphs.size());
}

TEST_CASE("ratio parsing") {
    CHECK(parse_ratio("1/5") == std::pair{1, 5});
    CHECK(parse_ratio("2/7") == std::pair{2, 7});
    CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio("1/5z"), std::invalid_argument);
}

TEST_CASE("diamond bound on n = 4") {
    BoundSpec spec{PatternFamily::diamond(), 1, 5, known_exceptions_for(PatternFamily::diamond(), 1, 5)};
    auto report = verify_bound(enumerated_source(4, 4), spec);
    CHECK(report.per_order[4].checked == 6);
    REQUIRE(report.exceptions.size() == 2);
    for (const auto& e : report.exceptions) {
        CHECK(e.iota == 1);
        CHECK(e.bound == 0);
        CHECK(e.known);
    }
    CHECK(report.unknown_exceptions() == 0);
}

TEST_CASE("K2 bound on n = 5 has only C5") {
    BoundSpec spec{PatternFamily::k2(), 1, 3, {}};
    auto report = verify_bound(enumerated_source(5, 5), spec);
    CHECK(report.exception_classes() == std::vector{canonical_form(cycle_graph(5))});
}

TEST_CASE("bound input handling") {
    std::istringstream in("C~\nnot-a-graph\nA?\nDQc\n");
    std::vector<std::pair<std::size_t, std::string>> malformed;
    auto source = parse_source(in, malformed);
    CHECK(source.size() == 3);
    REQUIRE(malformed.size() == 1);
    CHECK(malformed[0].first == 2);
    BoundSpec spec;
    auto report = verify_bound(source, spec);
    CHECK(report.skipped_disconnected == 1);
    CHECK(report.records.size() == 2);
    CHECK(report.records[0].line == 1);
    CHECK(report.records[0].status == BoundStatus::exception);
    CHECK(!report.records[0].known);
}

TEST_CASE("attachment invariance") {
    auto d = PatternFamily::diamond();
    CHECK(iota_exact(attach(cycle_graph(5), 0, Attachment::pendant), d).value == 0);
    for (int v = 0; v < 4; ++v)
        CHECK(iota_exact(attach(diamond_graph(), v, Attachment::triangle), d).value == 1);
    auto report = verify_attachment_invariance(200, 10, 3);
    CHECK(report.passed());
    CHECK(report.samples == 200);
}

TEST_CASE("extremal graphs") {
    auto d = PatternFamily::diamond();
    auto five = find_extremal(5, d);
    long expected = 0;
    for (const auto& g : enumerate_connected(5)) expected += contains_pattern(g, d);
    CHECK(static_cast<long>(five.size()) == expected);
    CHECK(find_extremal(std::vector<Graph>{h15_graph()}, d).size() == 1);
    CHECK(find_extremal(std::vector<Graph>{cycle_graph(5)}, d).empty());
}

TEST_CASE("worker count from the environment") {
    setenv("ISOLATION_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    unsetenv("ISOLATION_WORKERS");
    CHECK(default_workers() >= 1);
}
