#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parsep/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = parsep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
    auto r = run({"count", "--n", "5", "--class", "D", "--p", "2", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run({"count", "--n", "0", "--class", "O", "--p", "3", "--r", "2"});
    CHECK(r.out == "1\n");

    r = run({"count", "--n", "0..5", "--class", "O", "--p", "2", "--r", "1", "--jobs", "3"});
    CHECK(r.out == "0:1\n1:1\n2:1\n3:1\n4:3\n5:2\n");

    CHECK(run({"count", "--n", "5", "--class", "D", "--p", "2", "--r", "2"}).code == 2);
    CHECK(run({"count", "--n", "5", "--class", "D", "--p", "2"}).code == 2);
    CHECK(run({"count", "--n", "5", "--class", "Z"}).code == 2);
    CHECK(run({"count", "--n", "61", "--class", "B"}).code == 2);
    CHECK(run({"count", "--n", "3", "--class", "B", "--max-n", "100"}).code == 0);
}

TEST_CASE("list") {
    auto r = run({"list", "--n", "4", "--class", "O", "--p", "2", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"4", "3,1", "2,2"});

    r = run({"list", "--n", "7", "--class", "A", "--r", "3", "--json"});
    const json j = json::parse(r.out);
    CHECK(j["results"]["members"] == json::array({"7", "5,2"}));
    CHECK(j["results"]["count"] == 2);
}

TEST_CASE("map") {
    auto r = run({"map", "--p", "4", "--r", "1", "--forward", "32,32,21,17,16,13,9,8,8,8,8,5,4,4,4,1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"53,49,29,17,13,9,8,4,4,4", "weight: 190"});

    r = run({"map", "--p", "4", "--r", "1", "--inverse", "53,49,29,17,13,9,8,4,4,4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"32,32,21,17,16,13,9,8,8,8,8,5,4,4,4,1", "weight: 190",
                                                   "staircase: 21,17,13,9,5,1"});

    r = run({"map", "--p", "2", "--r", "1", "--forward", ""});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"", "weight: 0"});

    CHECK(run({"map", "--p", "2", "--r", "1", "--forward", "3,2"}).code == 3);
    CHECK(run({"map", "--p", "2", "--r", "1", "--inverse", "4,1"}).code == 3);
    CHECK(run({"map", "--p", "2", "--r", "1", "--forward", "3,x"}).code == 2);
    CHECK(run({"map", "--p", "2", "--r", "1"}).code == 2);
    CHECK(run({"map", "--p", "2", "--r", "1", "--forward", "1", "--inverse", "1"}).code == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "T2", "--n", "0..12", "--p", "2..4", "--jobs", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = run({"verify", "T2", "--n", "0..0", "--p", "2..2", "--json", "--no-timing"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["results"]["tuples_checked"] == 1);
    CHECK(j["results"]["rows"][0]["O"] == 1);

    r = run({"verify", "T4", "--n", "0..20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ones at: 0,3,5,14,18") != std::string::npos);

    CHECK(run({"verify", "T3", "--n", "0..15"}).code == 0);
    CHECK(run({"verify", "T3", "--n", "0..5", "--r", "2"}).code == 2);
    CHECK(run({"verify", "COR", "--n", "0..12", "--p", "2..5"}).code == 0);
    CHECK(run({"verify", "T9"}).code == 2);
    CHECK(run({"verify", "T2", "--n", "0..61"}).code == 2);
    CHECK(run({"verify", "T2", "--n", "5..2"}).code == 2);
}

TEST_CASE("series and identity") {
    auto r = run({"series", "theta", "--T", "20"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 21);
    for (int e = 0; e <= 20; ++e) {
        const bool one = e == 0 || e == 3 || e == 5 || e == 14 || e == 18;
        CHECK(ls[static_cast<std::size_t>(e)] == std::to_string(e) + ":" + (one ? "1" : "0"));
    }

    r = run({"series", "pfn", "--T", "9", "--json"});
    CHECK(json::parse(r.out)["results"]["coefficients"] == json::array({1, 1, 2, 3, 5, 7, 11, 15, 22, 30}));

    r = run({"identity", "lebesgue", "--a", "-1", "--T", "50"});
    CHECK(r.code == 0);
    CHECK(r.out == "lebesgue a=-1: PASS\n");
    CHECK(run({"identity", "lebesgue", "--a=-q^3", "--T", "30"}).code == 0);

    r = run({"identity", "slater", "--T", "60"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) ==
          std::vector<std::string>{"printed form: FIRST-MISMATCH at 1 (lhs 1, rhs 0)", "corrected form: PASS"});

    CHECK(run({"identity", "genA", "--T", "30"}).code == 0);
    CHECK(run({"identity", "genB", "--T", "30"}).code == 0);
    CHECK(run({"identity", "pfn", "--T", "25"}).code == 0);

    CHECK(run({"series", "pfn", "--T", "201"}).code == 2);
    CHECK(run({"series", "pfn", "--T", "500", "--max-T", "1000"}).code == 4);
    CHECK(run({"series", "nope"}).code == 2);
    CHECK(run({"series", "slater", "--side", "lhs"}).code == 2);
}

TEST_CASE("json and text modes agree and are reproducible") {
    const std::vector<std::string> base{"count", "--n", "0..8", "--class", "AP", "--p", "3"};
    const auto text = run(base);
    auto with_json = base;
    with_json.push_back("--json");
    with_json.push_back("--no-timing");
    const auto a = run(with_json);
    const auto b = run(with_json);
    CHECK(a.out == b.out);

    const json j = json::parse(a.out);
    CHECK(j["command"] == "count");
    CHECK(j["elapsed_ms"] == 0);
    CHECK(j["pass"] == true);
    std::string rebuilt;
    for (const auto& row : j["results"]["counts"])
        rebuilt += std::to_string(row["n"].get<long long>()) + ":" + std::to_string(row["count"].get<long long>()) + "\n";
    CHECK(rebuilt == text.out);

    // Keys are sorted.
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "elapsed_ms", "parameters", "pass", "results"});
}

TEST_CASE("errors in json mode still produce a report") {
    const auto r = run({"map", "--p", "2", "--r", "1", "--forward", "3,2", "--json"});
    CHECK(r.code == 3);
    const json j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["results"]["exit_code"] == 3);
    CHECK(!r.err.empty());
}

} // TEST_SUITE
