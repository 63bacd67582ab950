#include "doctest.h"

#include "skewcov/suites.hpp"

using namespace skewcov;

namespace {
std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
}

TEST_CASE("empty file parses to an empty workspace") {
    Workspace ws = parse_workspace_text("");
    CHECK(ws.algebras.empty());
    CHECK(ws.modules.empty());
    CHECK_FALSE(ws.bundle.has_value());
}

TEST_CASE("FIX-KRON parses with the expected inventory") {
    Workspace ws = parse_workspace(fixture("FIX-KRON.txt"));
    CHECK(ws.algebras.size() == 1);
    CHECK(ws.groups.size() == 1);
    REQUIRE(ws.bundle.has_value());
    CHECK(ws.bundle->full->dim() == 8);
    CHECK(ws.lambda_modules().size() == 7);
    CHECK(ws.skew_modules().size() == 6);
    CHECK(ws.lambda_morphisms().size() >= 4);
    CHECK(ws.lambda_functors().size() == 5);
    // raw stanza round trip: P1 has dimension vector (1, 2)
    const FDModule* P1 = ws.find_module("P1");
    REQUIRE(P1);
    CHECK(P1->dimension_vector() == std::vector<size_t>{1, 2});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_workspace_text("x: 1\n"), ParseError);
    try {
        parse_workspace_text("[quiver Q]\nvertices: a b\narrow: f a c\n");
        FAIL("expected a validation failure");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("unknown vertex") != std::string::npos);
    }
    // duplicate names per kind are rejected
    CHECK_THROWS_AS(parse_workspace_text("[group G]\norders: 2\n[group G]\norders: 2\n"),
                    ParseError);
}

TEST_CASE("invariant violations are rejected at load") {
    // iota with a 3-cycle violates iota^2 = id
    std::string bad =
        "[brauer B]\nhalfedges: a b c\niota: (a b c)\nsigma: (a)(b)(c)\nmult: a 1\n";
    try {
        parse_workspace_text(bad);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("iota^2") != std::string::npos);
    } catch (const ParseError&) {
        FAIL("should be a validation error, not a parse error");
    }
}

TEST_CASE("field override is honored") {
    Workspace ws = parse_workspace_text("[field]\np: 101\n");
    CHECK(ws.field.p == 101);
    Workspace ws2 = parse_workspace_text("[field]\np: 101\n", 32009);
    CHECK(ws2.field.p == 32009);
}

TEST_CASE("suites run on the shipped fixtures") {
    SUBCASE("semicovering-mod on FIX-SWAP passes") {
        Workspace ws = parse_workspace(fixture("FIX-SWAP.txt"));
        SuiteResult res = run_suite(ws, "semicovering-mod", 0, 64);
        CHECK(res.failures == 0);
        CHECK(res.inconclusive == 0);
        CHECK(res.rows.size() == ws.lambda_modules().size() * ws.lambda_modules().size());
    }
    SUBCASE("brauer-all on FIX-BG1 passes") {
        Workspace ws = parse_workspace(fixture("FIX-BG1.txt"));
        SuiteResult res = run_suite(ws, "brauer-all", 0, 64);
        CHECK(res.failures == 0);
    }
    SUBCASE("unknown suites are rejected") {
        Workspace ws = parse_workspace_text("");
        CHECK_THROWS_AS(run_suite(ws, "no-such-suite", 0, 64), UnknownSuite);
    }
    SUBCASE("empty workspace: brauer-all is an empty success") {
        Workspace ws = parse_workspace_text("");
        SuiteResult res = run_suite(ws, "brauer-all", 0, 64);
        CHECK(res.rows.empty());
        CHECK(res.exit_code(false) == 0);
    }
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
    Workspace ws = parse_workspace(fixture("FIX-KRON.txt"));
    SuiteResult a = run_suite(ws, "semicovering-mod", 5, 64);
    Workspace ws2 = parse_workspace(fixture("FIX-KRON.txt"));
    SuiteResult b = run_suite(ws2, "semicovering-mod", 5, 64);
    CHECK(a.text() == b.text());
    CHECK(a.csv() == b.csv());
}
