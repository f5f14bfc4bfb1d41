#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanner/analyze.hpp"
#include "tanner/fixtures.hpp"
#include "tanner/formats.hpp"

using namespace tanner;

TEST_CASE("alist round trip") {
    auto H = expand_qc(tanner_155_fixture());
    auto back = parse_alist(write_alist(H));
    CHECK(back == H);

    auto R = random_biregular(6, 9, 2, 3, 7);
    REQUIRE(R.has_value());
    CHECK(parse_alist(write_alist(*R)) == *R);
}

TEST_CASE("alist parse of a hand-written K33 with zero padding") {
    std::string text =
        "3 3\n"
        "3 3\n"
        "3 3 3\n"
        "3 3 3\n"
        "1 2 3\n"
        "1 2 3\n"
        "1 2 3\n"
        "1 2 3 0\n"
        "1 2 3 0\n"
        "1 2 3 0\n";
    auto H = parse_alist(text);
    CHECK(H.m == 3);
    CHECK(H.n == 3);
    for (const auto& r : H.rows) CHECK(r == std::vector<int>{0, 1, 2});
}

TEST_CASE("alist 2x2 identity") {
    std::string text =
        "2 2\n"
        "1 1\n"
        "1 1\n"
        "1 1\n"
        "1\n"
        "2\n"
        "1\n"
        "2\n";
    auto H = parse_alist(text);
    CHECK(H.m == 2);
    CHECK(H.rows == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("alist rejects truncated input") {
    try {
        parse_alist("4 4\n2 2\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("alist rejects inconsistent supports") {
    // row lists claim (1,2),(2,3) but column lists say column 1 is in row 2
    std::string text =
        "3 2\n"
        "2 2\n"
        "1 2 1\n"
        "2 2\n"
        "2\n"
        "1 2\n"
        "2\n"
        "1 2\n"
        "2 3\n";
    try {
        parse_alist(text);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::inconsistent_supports);
    }
}

TEST_CASE("alist rejects malformed input with a line number") {
    try {
        parse_alist("4 x\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("expmat round trip") {
    auto pm = tanner_155_fixture();
    std::vector<std::string> warnings;
    auto back = parse_expmat(write_expmat(pm), &warnings);
    CHECK(back == pm);
    CHECK(warnings.empty());

    PolynomialParityMatrix multi{1, 2, 5, {{{0, 2, 3}, {}}}};
    CHECK(parse_expmat(write_expmat(multi)) == multi);
}

TEST_CASE("expmat exponent handling") {
    std::vector<std::string> warnings;
    auto pm = parse_expmat("1 1 5\n7\n", &warnings);  // 7 mod 5 = 2
    CHECK(pm.entries[0][0] == std::vector<int>{2});
    REQUIRE(warnings.size() == 1);

    try {
        parse_expmat("1 1 5\n7\n", nullptr, /*strict=*/true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::exponent_out_of_range);
    }

    auto dup = parse_expmat("1 1 5\n2,2,3\n", &warnings);
    CHECK(dup.entries[0][0] == std::vector<int>{2, 3});
}

TEST_CASE("analyze pipeline end to end") {
    AnalysisRequest req;
    req.text = write_expmat(tanner_155_fixture());
    req.format = InputFormat::expmat;
    req.method = MethodChoice::all;
    req.paranoid = true;
    auto res = run_analyze(req);
    CHECK(res.exit_code == 0);
    CHECK(res.report["input"]["rank"] == 91);
    CHECK(res.report["girth"]["bfs"] == 8);
    bool saw = false;
    for (const auto& c : res.report["counts"])
        if (c["two_k"] == 8) {
            CHECK(c["value"] == "465");
            CHECK(c["certified"] == true);
            saw = true;
        }
    CHECK(saw);
}

TEST_CASE("analyze via alist input agrees with expmat input") {
    auto H = expand_qc(tanner_155_fixture());
    AnalysisRequest a;
    a.text = write_alist(H);
    a.format = InputFormat::alist;
    auto ra = run_analyze(a);

    AnalysisRequest b;
    b.text = write_expmat(tanner_155_fixture());
    b.format = InputFormat::expmat;
    auto rb = run_analyze(b);
    CHECK(ra.report["counts"] == rb.report["counts"]);
    CHECK(ra.report["input"]["qc"].is_null());
    CHECK_FALSE(rb.report["input"]["qc"].is_null());
}

TEST_CASE("disconnected input policy") {
    ScalarParityMatrix split{
        6, 6,
        {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {3, 4, 5}, {3, 4, 5}, {3, 4, 5}}};
    AnalysisRequest req;
    req.text = write_alist(split);
    req.format = InputFormat::alist;
    CHECK_THROWS_AS(run_analyze(req), Error);

    req.allow_disconnected = true;
    auto res = run_analyze(req);
    CHECK(res.exit_code == 0);
    CHECK(res.report["input"]["components"] == 2);
    for (const auto& c : res.report["counts"]) {
        if (c["two_k"] == 4) CHECK(c["value"] == "18");  // two K33 copies
        if (c["two_k"] == 6) CHECK(c["value"] == "12");
    }
}

TEST_CASE("spectrum report groups the repeated blocks") {
    auto res = run_spectrum(write_expmat(tanner_155_fixture()), true);
    REQUIRE(res.report["blocks"].size() == 2);
    CHECK(res.report["blocks"][1]["j"].size() == 30);
    CHECK(res.report["blocks"][1]["charpoly_low_to_high"] ==
          ojson::array({-62, 62, -15, 1}));
}
