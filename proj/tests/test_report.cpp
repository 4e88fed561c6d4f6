#include <doctest.h>

#include <json.hpp>

#include "slicekit/report.hpp"

using namespace slicekit;

TEST_CASE("status accounting and exit codes") {
    Report r("verify");
    CHECK(r.exit_code() == 0);

    r.pass("first", "fine");
    r.skip("second", "not needed");
    CHECK(r.exit_code() == 0);

    r.unknown("third", "ran out of budget");
    CHECK(r.exit_code() == 1);

    Report failing("verify");
    failing.pass("first");
    failing.fail("second", "broke");
    CHECK(failing.exit_code() == 1);
    CHECK(failing.count(CheckStatus::Pass) == 1);
    CHECK(failing.count(CheckStatus::Fail) == 1);
    CHECK(failing.any(CheckStatus::Fail));
}

TEST_CASE("text rendering is stable and readable") {
    Report r("verify");
    r.pass("slice identity", "D(z) = 1");
    r.fail("group law", "mismatch at u^2");
    r.note("a note for the reader");
    r.attach("psi.x", "x");

    const std::string text = r.render_text(false);
    CHECK(text.find("== slicekit verify ==") != std::string::npos);
    CHECK(text.find("[pass] slice identity: D(z) = 1") != std::string::npos);
    CHECK(text.find("[FAIL] group law") != std::string::npos);
    CHECK(text.find("note: a note for the reader") != std::string::npos);
    CHECK(text.find("summary: 1 pass, 1 fail, 0 skip, 0 unknown") != std::string::npos);
    CHECK(r.render_text(false) == text);  // deterministic

    const std::string quiet = r.render_text(true);
    CHECK(quiet.find("D(z) = 1") == std::string::npos);
    CHECK(quiet.find("slice identity") != std::string::npos);
}

TEST_CASE("json rendering round-trips through a parser") {
    Report r("kernel");
    r.pass("kernel basis", "dimension 4");
    r.unknown("nilpotency", "bound exhausted");
    r.note("degree-bounded");
    r.attach("kernel.0", "1");

    const std::string dumped = r.render_json();
    CHECK(r.render_json() == dumped);
    const auto parsed = nlohmann::json::parse(dumped);
    CHECK(parsed["command"] == "kernel");
    CHECK(parsed["checks"].size() == 2);
    CHECK(parsed["checks"][0]["name"] == "kernel basis");
    CHECK(parsed["checks"][0]["status"] == "pass");
    CHECK(parsed["checks"][1]["status"] == "unknown");
    CHECK(parsed["notes"].size() == 1);
    CHECK(parsed["data"]["kernel.0"] == "1");
    CHECK(parsed["summary"]["pass"] == 1);
    CHECK(parsed["exit_code"] == 1);
}

TEST_CASE("absorbing a sub-report prefixes its content") {
    Report sub("entry");
    sub.pass("slice identity");
    sub.note("local note");
    sub.attach("offset", "x^2");

    Report top("corpus");
    top.absorb("dim2", sub);
    REQUIRE(top.checks().size() == 1);
    CHECK(top.checks()[0].name == "dim2/slice identity");
    CHECK(top.data()[0].first == "dim2/offset");
    REQUIRE(top.notes().size() == 1);
    CHECK(top.notes()[0].find("dim2") != std::string::npos);
    CHECK(top.exit_code() == 0);

    Report bad("entry");
    bad.fail("slice identity");
    top.absorb("other", bad);
    CHECK(top.exit_code() == 1);
}
