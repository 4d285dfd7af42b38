#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>

#include "snfy/json_io.hpp"

using namespace snfy;

TEST_CASE("integers stay numbers while they fit in 64 bits") {
    CHECK(json_of(mpz_class(0)).is_number_integer());
    CHECK(json_of(mpz_class(-17)).get<std::int64_t>() == -17);
    mpz_class max_long = (mpz_class(1) << 63) - 1;
    CHECK(json_of(max_long).is_number_integer());
    CHECK(json_of(max_long).get<std::int64_t>() == INT64_MAX);

    mpz_class big = mpz_class(1) << 63;
    Json j = json_of(big);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == "9223372036854775808");
    CHECK(json_of(mpz_class("-123456789012345678901234567890")).get<std::string>() ==
          "-123456789012345678901234567890");
}

TEST_CASE("partitions serialize as part arrays") {
    CHECK(json_of(Partition({3, 1, 1})) == Json::array({3, 1, 1}));
    CHECK(json_of(Partition()) == Json::array());
}

TEST_CASE("polynomials serialize as coefficient arrays, lowest first") {
    CHECK(json_of(PolyZx()) == Json::array());
    PolyZx p = PolyZx(3) + PolyZx(4) * PolyZx::x() + PolyZx::x() * PolyZx::x();
    CHECK(json_of(p) == Json::array({3, 4, 1}));
}

TEST_CASE("matrix serialization carries labels only when present") {
    PolyMatrix bare(2);
    bare.at(0, 0) = PolyZx(1);
    Json jb = json_of(bare);
    CHECK(jb["dim"] == 2);
    CHECK(!jb.contains("n"));
    CHECK(!jb.contains("order"));
    CHECK(jb["entries"][0][0] == Json::array({1}));
    CHECK(jb["entries"][0][1] == Json::array());

    Json ja = json_of(build_A_h_basis(2));
    CHECK(ja["dim"] == 2);
    CHECK(ja["n"] == 2);
    CHECK(ja["order"] == Json::array({Json::array({2}), Json::array({1, 1})}));
    CHECK(ja["entries"][1][1] == Json::array({3}));
}

TEST_CASE("elementary op serialization distinguishes the kinds") {
    Json add = json_of(ElementaryOp::add_row(0, 2, PolyZx::linear(5)));
    CHECK(add["kind"] == "add_row");
    CHECK(add["a"] == 0);
    CHECK(add["b"] == 2);
    CHECK(add["mult"] == Json::array({5, 1}));

    Json swp = json_of(ElementaryOp::swap_cols(1, 3));
    CHECK(swp["kind"] == "swap_cols");
    CHECK(!swp.contains("mult"));

    CHECK(json_of(ElementaryOp::negate_rows(0, 1))["kind"] == "negate_rows");
    CHECK(json_of(ElementaryOp::swap_rows(2, 2))["kind"] == "swap_rows");
    CHECK(json_of(ElementaryOp::add_col(1, 0, PolyZx(-2)))["kind"] == "add_col");
    CHECK(json_of(ElementaryOp::negate_cols(0, 2))["kind"] == "negate_cols");
}

TEST_CASE("certificate serialization exposes the full schema") {
    SnfCertificate cert = run_pipeline(4, true);
    Json j = json_of(cert);

    REQUIRE(j.contains("input"));
    CHECK(j["input"]["n"] == 4);
    CHECK(j["input"]["k"] == 1);
    CHECK(j["input"]["basis"] == "h");
    CHECK(j["input"]["fs"].is_array());

    REQUIRE(j["diagonal"].is_array());
    CHECK(j["diagonal"].size() == 5);
    CHECK(j["diagonal"][0] == Json::array({1}));
    CHECK(j["diagonal"][3] == Json::array({1, 1}));  // 1 + x

    CHECK(j["D"]["dim"] == 5);
    CHECK(j["P"]["dim"] == 5);
    CHECK(j["Q"]["dim"] == 5);
    CHECK(j["transcript"].contains("row_ops"));
    CHECK(j["transcript"].contains("col_ops"));
    CHECK(j["verified"] == true);

    // key order is fixed, which keeps dumps reproducible
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"input", "diagonal", "D", "P", "Q", "transcript",
                                           "verified"});
}

TEST_CASE("specialize report serialization") {
    SpecializeReport rep = specialize_and_check(4, 1, 2);
    Json j = json_of(rep);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 1);
    CHECK(j["c"] == 2);
    CHECK(j["lhs"].is_array());
    CHECK(j["rhs"].is_array());
    CHECK(j["match"] == true);
    CHECK(j["lhs"].size() == 5);
}

TEST_CASE("strings report for n = 6") {
    Json j = strings_report_json(6);
    CHECK(j["n"] == 6);
    CHECK(j["cardinalities"] == Json::array({6, 3, 1, 1}));
    CHECK(j["shape"] == Json::array({4, 2, 2, 1, 1, 1}));
    CHECK(j["conjugate"] == Json::array({6, 3, 1, 1}));
    REQUIRE(j["strings"].size() == 4);
    CHECK(j["strings"][0].size() == 6);
    CHECK(j["strings"][0][0] == Json::array({6}));
    CHECK(j["strings"][0][5] == Json::array({1, 1, 1, 1, 1, 1}));
    CHECK(j["strings"][2][0] == Json::array({3, 3}));
}

TEST_CASE("conjecture report includes ladder levels and verdict") {
    ConjectureDiagonal conj = conjecture_diagonal(4, 2);
    PolyMatrix mx = mat_add_xI(build_M_k_h_basis(4, 2));
    DivisorLadder ladder = determinantal_ladder(mx, conj.entries);
    Json j = conjecture_report_json(conj, ladder);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["predicted"].size() == 5);
    CHECK(j["predicted_factored"] ==
          Json::array({"1", "1", "(2+x)", "(2+x)", "(2+x)(4+x)(6+x)"}));
    CHECK(j["initial_multiset"].is_array());
    CHECK(j["peel_trace"].is_array());
    REQUIRE(j["ladder"].size() == 5);
    CHECK(j["ladder"][0].contains("matches_target"));
    CHECK(j["ladder"][0]["exhaustive"] == true);
    CHECK(j["verdict"] == "confirmed");

    DivisorLadder untargeted = determinantal_ladder(mx, {});
    Json ju = conjecture_report_json(conj, untargeted);
    CHECK(!ju["ladder"][0].contains("matches_target"));
    CHECK(ju["verdict"] == "partial");
}

TEST_CASE("serialization is byte-identical across runs") {
    std::string a = json_of(run_pipeline(4, true)).dump(2);
    std::string b = json_of(run_pipeline(4, true)).dump(2);
    CHECK(a == b);
    CHECK(!a.empty());
}
