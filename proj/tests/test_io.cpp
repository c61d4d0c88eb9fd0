#include <catch2/catch_amalgamated.hpp>

#include "homalg/hochschild.hpp"
#include "homalg/io.hpp"

using namespace homalg;

TEST_CASE("algebra files load and validate") {
    auto k = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/k.alg");
    CHECK(k->dim() == 1);
    auto d = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/dual.alg");
    CHECK(d->dim() == 2);
    CHECK(d->mul(svec_unit(1), svec_unit(1)).empty());
    auto m2 = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/m2.alg");
    CHECK(m2->dim() == 4);
}

TEST_CASE("malformed algebra files raise input errors with a location") {
    try {
        parse_algebra("{\"labels\": [\"1\"", "broken.alg");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        std::string msg = e.what();
        CHECK(msg.find("broken.alg") != std::string::npos);
        CHECK(msg.find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra("{\"labels\": [\"1\"], \"unit\": {\"nope\": \"1\"}}", "x"),
                    InputError);
    CHECK_THROWS_AS(parse_algebra("{\"labels\": [\"1\"], \"unit\": {\"1\": \"1/0\"}}", "x"),
                    InputError);
    // structurally valid JSON describing a non-algebra is rejected by validation
    CHECK_THROWS_AS(parse_algebra("{\"labels\": [\"1\"], \"unit\": {\"1\": \"2\"}, \"products\": "
                                  "[{\"left\": \"1\", \"right\": \"1\", \"result\": {\"1\": \"1\"}}]}",
                                  "x"),
                    ValidationError);
}

TEST_CASE("subalgebra witness files load") {
    auto m2 = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/m2.alg");
    auto w = load_witness_file(std::string(HOMALG_DATA_DIR) + "/m2_diag.sub", m2);
    CHECK(verify_separability(w).pass);
}

TEST_CASE("homology report serialization is deterministic and format-stable") {
    auto d = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/dual.alg");
    auto cc = build_hochschild_complex(d, 2);
    auto hr = compute_homology(cc);
    std::string a = serialize_homology_report(hr, cc, ReportFormat::records);
    std::string b = serialize_homology_report(compute_homology(cc), cc, ReportFormat::records);
    CHECK(a == b);
    CHECK(a.find("complex hochschild(k[eps]) cap 2") == 0);
    CHECK(a.find("degree 0 dim 2 nnz 0 betti 2 status exact") != std::string::npos);
    CHECK(a.find("status truncation-boundary") != std::string::npos);
    CHECK(a.find("wall-ms") == std::string::npos);

    std::string t = serialize_homology_report(hr, cc, ReportFormat::text);
    CHECK(t.find("betti 2") != std::string::npos);
    CHECK(t.find("representative") != std::string::npos);

    std::string timed = serialize_homology_report(hr, cc, ReportFormat::records, true);
    CHECK(timed.find("wall-ms") != std::string::npos);
    CHECK_THROWS_AS(parse_format("csv"), InputError);
}

TEST_CASE("representative labels use the tensor basis") {
    auto d = load_algebra_file(std::string(HOMALG_DATA_DIR) + "/dual.alg");
    auto cc = build_hochschild_complex(d, 1);
    auto hr = compute_homology(cc);
    std::string s = serialize_homology_report(hr, cc, ReportFormat::records);
    CHECK(s.find("1=1") != std::string::npos);        // degree-0 class of 1
    CHECK(s.find("eps=1") != std::string::npos);      // degree-0 class of eps
}
