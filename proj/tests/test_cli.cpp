#include <doctest.h>

#include <json.hpp>
#include <regex>
#include <sstream>

#include "littlewood/cli.hpp"

using littlewood::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

std::string strip_timing(const std::string& s) {
    return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9.eE+-]+"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("csv quoting") {
    CHECK(littlewood::cli::csv_quote("5/3") == "\"5/3\"");
    CHECK(littlewood::cli::csv_quote("a\"b") == "\"a\"\"b\"");
}

TEST_CASE("limits") {
    const auto o = call({"limits", "--family", "fekete", "--qmax", "3"});
    REQUIRE(o.code == 0);
    CHECK(o.err.empty());
    const auto j = json_of(o);
    CHECK(j["schema_version"] == "v1");
    CHECK(j["command"] == "limits");
    CHECK(j["parameters"]["qmax"] == 3);
    REQUIRE(j["results"].size() == 3);
    CHECK(j["results"][0]["limit"]["exact"] == "1");
    CHECK(j["results"][1]["limit"]["exact"] == "5/3");
    CHECK(j["results"][1]["limit"]["decimal"] == "1.66666666667");
    CHECK(j["results"][2]["limit"]["exact"] == "19/5");
    CHECK(j["timing"]["elapsed_ms"].is_number());

    const auto g = call({"limits", "--family", "galois", "--qmax", "2", "--format", "csv"});
    CHECK(g.out == "q,limit,limit_decimal\r\n1,\"1\",1\r\n2,\"4/3\",1.33333333333\r\n");

    const auto bad = call({"limits", "--family", "both", "--qmax", "3"});
    CHECK(bad.code == littlewood::cli::kUsageError);
    CHECK(bad.out.empty());
    CHECK(nlohmann::json::parse(bad.err)["error"]["kind"] == "usage");
    CHECK(call({"limits", "--family", "fekete", "--qmax", "65"}).code == littlewood::cli::kUsageError);
    CHECK(call({"limits", "--family", "fekete", "--qmax", "0"}).code == littlewood::cli::kUsageError);
}

TEST_CASE("triangle") {
    const auto f = json_of(call({"triangle", "--family", "fekete", "--rows", "2"}));
    CHECK(f["results"][0]["values"] == nlohmann::json::array({"1"}));
    CHECK(f["results"][1]["values"] == nlohmann::json::array({"-2", "10", "-2"}));
    const auto g = json_of(call({"triangle", "--family", "galois", "--rows", "2"}));
    CHECK(g["results"][1]["values"] == nlohmann::json::array({"-1", "8", "-1"}));
    CHECK(call({"triangle", "--family", "galois", "--rows", "0"}).code == littlewood::cli::kUsageError);
    CHECK(call({"triangle", "--family", "galois", "--rows", "17"}).code == littlewood::cli::kUsageError);
}

TEST_CASE("phi") {
    CHECK(json_of(call({"phi", "--q", "2", "--eval", "1/4"}))["results"][0]["value"]["exact"] == "7/6");
    CHECK(json_of(call({"phi", "--q", "2", "--eval", "3/4"}))["results"][0]["value"]["exact"] == "7/6");
    CHECK(json_of(call({"phi", "--q", "8", "--eval", "1/4"}))["results"][0]["value"]["exact"] ==
          "960901090937/27243216000");

    const auto pieces = json_of(call({"phi", "--q", "3", "--pieces"}));
    REQUIRE(pieces["results"].size() == 1);
    CHECK(pieces["results"][0]["coefficients"] == nlohmann::json::array({"19/5", "-24", "96", "-192", "192"}));

    const auto m = json_of(call({"phi", "--q", "3", "--min"}));
    CHECK(m["results"][0]["min"]["lo"]["exact"] == "31/20");
    CHECK(m["results"][0]["alt_flag"] == false);
    CHECK(m["parameters"]["eps"] == "1/1048576");

    CHECK(call({"phi", "--q", "2", "--eval", "quarter"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "2"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "2", "--min", "--pieces"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "7", "--pieces"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "1", "--min"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "9", "--eval", "0"}).code == littlewood::cli::kUsageError);
    CHECK(call({"phi", "--q", "2", "--min", "--eps", "0"}).code == littlewood::cli::kUsageError);
}

TEST_CASE("empirical") {
    const auto f = json_of(call({"empirical", "--family", "fekete", "--q", "2", "--p", "5"}));
    CHECK(f["results"][0]["exact_norm"] == "28");
    CHECK(f["results"][0]["ratio"]["exact"] == "28/25");
    CHECK(f["results"][0]["limit"]["exact"] == "5/3");

    const auto g = call({"empirical", "--family", "galois", "--q", "2", "--k", "2", "--format", "csv"});
    CHECK(g.out ==
          "n,exact_norm,ratio_num,ratio_den,limit_num,limit_den,rel_err\r\n"
          "3,11,11,9,4,3,0.0833333333333\r\n");

    const auto bad = call({"empirical", "--family", "fekete", "--q", "2", "--p", "9"});
    CHECK(bad.code == littlewood::cli::kDomainError);
    CHECK(bad.out.empty());
    const auto err = nlohmann::json::parse(bad.err);
    CHECK(err["error"]["kind"] == "domain");
    CHECK(err["error"]["message"].get<std::string>().find("primality") != std::string::npos);

    const auto s = json_of(call({"empirical", "--family", "shifted", "--q", "2", "--p", "101", "--shift-ratio", "1/4"}));
    CHECK(s["results"][0]["shift"] == 25);
    CHECK(s["results"][0]["limit"]["exact"] == "7/6");

    CHECK(call({"empirical", "--family", "galois", "--q", "2", "--p", "5"}).code == littlewood::cli::kUsageError);
    CHECK(call({"empirical", "--family", "fekete", "--q", "2"}).code == littlewood::cli::kUsageError);
    CHECK(call({"empirical", "--family", "fekete", "--q", "2", "--p", "5", "--shift", "1"}).code ==
          littlewood::cli::kUsageError);
    CHECK(call({"empirical", "--family", "shifted", "--q", "2", "--p", "5", "--shift", "1", "--shift-ratio", "1/4"})
              .code == littlewood::cli::kUsageError);
}

TEST_CASE("exit code is zero exactly when no error record is written") {
    const std::vector<std::vector<std::string>> cases{
        {"limits", "--family", "fekete", "--qmax", "4"},
        {"limits", "--family", "x", "--qmax", "4"},
        {"phi", "--q", "2", "--eval", "1/3"},
        {"empirical", "--family", "galois", "--q", "2", "--k", "30"},
        {"bogus"},
        {},
    };
    for (const auto& args : cases) {
        const auto o = call(args);
        CHECK((o.code == 0) == o.err.empty());
    }
}

TEST_CASE("identical invocations give identical output apart from timing") {
    const std::vector<std::vector<std::string>> cases{
        {"limits", "--family", "galois", "--qmax", "20"},
        {"phi", "--q", "4", "--pieces"},
        {"empirical", "--family", "shifted", "--q", "3", "--p", "101", "103", "107", "--shift", "5"},
    };
    for (const auto& args : cases) {
        const auto a = call(args);
        const auto b = call(args);
        CHECK(strip_timing(a.out) == strip_timing(b.out));
        auto csv_args = args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        CHECK(call(csv_args).out == call(csv_args).out);
    }
}

TEST_CASE("seed-tables flag is accepted") {
    CHECK(call({"--seed-tables", "limits", "--family", "fekete", "--qmax", "2"}).code == 0);
}
