#include <catch2/catch_amalgamated.hpp>

#include "homalg/verifier.hpp"

using namespace homalg;

TEST_CASE("registry lists the expected checks in a fixed order") {
    const auto& table = list_checks();
    auto has = [&](const std::string& id) {
        for (const auto& d : table)
            if (d.id == id)
                return true;
        return false;
    };
    CHECK(has("HH-UNIT-K"));
    CHECK(has("COCYCLE-JACOBI"));
    CHECK(has("APPENDIX-HOMOTOPY"));
    CHECK(has("PHI-CHAIN"));
    CHECK(has("HALFLINE"));
    CHECK(table.size() == 22);
    for (const auto& d : table) {
        CHECK_FALSE(d.statement.empty());
        CHECK_FALSE(d.parameters.empty());
    }
    // ids unique
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j) CHECK(table[i].id != table[j].id);
}

TEST_CASE("unknown check ids are rejected") {
    CHECK_THROWS_AS(run_check("NOPE", 1), InputError);
}

TEST_CASE("HH-UNIT-K passes and reports the Betti numbers") {
    CheckReport r = run_check("HH-UNIT-K", 1);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE_FALSE(r.details.empty());
    CHECK(r.details[0].find("1,0,0") != std::string::npos);
}

TEST_CASE("randomized checks are reproducible from (id, seed)") {
    CheckReport a = run_check("COCYCLE-JACOBI", 7);
    CheckReport b = run_check("COCYCLE-JACOBI", 7);
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.details == b.details);
    CHECK(serialize_check_report(a) == serialize_check_report(b));
}

TEST_CASE("check reports never include wall clock by default") {
    CheckReport r = run_check("AFFINE-BRACKET", 1);
    std::string s = serialize_check_report(r);
    CHECK(s.find("wall-ms") == std::string::npos);
    CHECK(serialize_check_report(r, true).find("wall-ms") != std::string::npos);
}

TEST_CASE("fast checks pass") {
    for (const std::string id : {"SMASH-ISO", "OFFDIAG-VANISH", "H0-Z", "H1-Z", "AFFINE-BRACKET",
                                 "UCE-BRACKET", "HALFLINE", "STEFAN-FINITE"}) {
        CheckReport r = run_check(id, 1);
        INFO(id << ": " << r.counterexample);
        CHECK(r.verdict == Verdict::pass);
    }
}

TEST_CASE("halfline check states its representability restriction") {
    CheckReport r = run_check("HALFLINE", 3);
    bool stated = false;
    for (const auto& d : r.details) stated = stated || d.find("restriction") != std::string::npos;
    CHECK(stated);
}
