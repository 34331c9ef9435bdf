#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/run.hpp"

using namespace sqfree;
using nlohmann::ordered_json;

namespace {

RunConfig base_config(const std::string& subcommand) {
    RunConfig config;
    config.subcommand = subcommand;
    return config;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("count report at x = 10") {
    RunConfig config = base_config("count");
    config.x = 10;
    RunResult result = run(config);
    REQUIRE(result.exit_code == 0);

    ordered_json doc = ordered_json::parse(result.output);
    const ordered_json& counts = doc["results"]["counts"];
    CHECK(counts["single_1"] == 9);
    CHECK(counts["single_2"] == 8);
    CHECK(counts["single_3"] == 5);
    CHECK(counts["pair_1_2"] == 7);
    CHECK(counts["pair_1_3"] == 5);
    CHECK(counts["pair_2_3"] == 4);
    CHECK(counts["triple"] == 4);
    CHECK(counts.size() == 7);
    CHECK(doc["results"]["ratios"]["single_1"] == "0.900000");
    CHECK(doc["results"]["predicted"]["triple"].size() == 2);
    CHECK(doc["config"]["x"] == 10);
    CHECK_FALSE(doc["config"].contains("threads"));
    CHECK_FALSE(doc["config"].contains("out_path"));

    // round-trip byte identity of the JSON rendering
    CHECK(result.output == doc.dump(2) + "\n");
}

TEST_CASE("count report with selectors") {
    RunConfig config = base_config("count");
    config.x = 10;
    config.shifts = {1};
    RunResult result = run(config);
    ordered_json doc = ordered_json::parse(result.output);
    CHECK(doc["results"]["counts"].size() == 1);
    CHECK(doc["results"]["counts"]["single_1"] == 9);

    config.shifts = {3, 2, 2};  // duplicates collapse, order normalizes
    config.triple = true;
    doc = ordered_json::parse(run(config).output);
    CHECK(doc["results"]["counts"].size() == 3);
    CHECK(doc["results"]["counts"]["single_2"] == 8);
    CHECK(doc["results"]["counts"]["single_3"] == 5);
    CHECK(doc["results"]["counts"]["triple"] == 4);
}

TEST_CASE("constants report") {
    RunConfig config = base_config("constants");
    RunResult result = run(config);
    REQUIRE(result.exit_code == 0);
    ordered_json doc = ordered_json::parse(result.output);
    const ordered_json& table = doc["results"]["constants"];
    REQUIRE(table.size() == 7);
    CHECK(table[0]["name"] == "phi_1");
    CHECK(table[0]["c"] == "1/1");
    CHECK(table[0]["value"][0] == "0.891384");
    CHECK(table[0]["value"][1] == "0.894956");
    CHECK(table[3]["name"] == "theta_1");
    CHECK(table[3]["c"] == "7/9");
    CHECK(table[6]["name"] == "sigma");
    CHECK(table[6]["midpoint"] == "0.313485");

    bool mentions_count_contradiction = false;
    for (const ordered_json& note : doc["notes"])
        if (note.get<std::string>().find("8/9") != std::string::npos)
            mentions_count_contradiction = true;
    CHECK(mentions_count_contradiction);
}

TEST_CASE("constants report for one set") {
    RunConfig config = base_config("constants");
    config.set_name = "sigma";
    ordered_json doc = ordered_json::parse(run(config).output);
    REQUIRE(doc["results"]["constants"].size() == 1);
    CHECK(doc["results"]["constants"][0]["name"] == "sigma");
    CHECK(doc["config"]["set"] == "sigma");

    config.set_name = "phi_9";
    CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("verify report walks the checkpoint grid") {
    RunConfig config = base_config("verify");
    config.x = 100;
    RunResult result = run(config);
    REQUIRE(result.exit_code == 0);
    ordered_json doc = ordered_json::parse(result.output);
    const ordered_json& cps = doc["results"]["checkpoints"];
    REQUIRE(cps.size() == 2);
    CHECK(cps[0]["x"] == 10);
    CHECK(cps[0]["triple"] == 4);
    CHECK(cps[1]["x"] == 100);
    CHECK(cps[1]["triple"] == 33);
    CHECK(cps[1]["ratio"] == "0.330000");
    CHECK(doc["results"]["sigma"][0] == "0.312858");
    CHECK(doc["results"]["sigma"][1] == "0.314112");
    CHECK(result.output == doc.dump(2) + "\n");

    config.x = 7;  // below the first decade: the grid is just {7}
    doc = ordered_json::parse(run(config).output);
    REQUIRE(doc["results"]["checkpoints"].size() == 1);
    CHECK(doc["results"]["checkpoints"][0]["x"] == 7);
}

TEST_CASE("verify output is thread invariant") {
    RunConfig one = base_config("verify");
    one.x = 10'000;
    one.threads = 1;
    one.segment_length = 1 << 12;
    RunConfig many = one;
    many.threads = 4;
    CHECK(run(one).output == run(many).output);
}

TEST_CASE("lemmas subcommand") {
    RunConfig config = base_config("lemmas");
    config.which = "b_sum";
    RunResult result = run(config);
    REQUIRE(result.exit_code == 0);
    ordered_json doc = ordered_json::parse(result.output);
    REQUIRE(doc["results"]["reports"].size() == 1);
    const ordered_json& rep = doc["results"]["reports"][0];
    CHECK(rep["lemma"] == "b_sum");
    CHECK(rep["pass"].is_null());
    CHECK(rep["values"]["b_sum"] == "-2/9");
    CHECK(rep["values"]["trivial_bound"] == "2");

    config.which = "four_shift_factor";
    doc = ordered_json::parse(run(config).output);
    CHECK(doc["results"]["reports"][0]["pass"] == true);

    config.which = "pell_count";
    doc = ordered_json::parse(run(config).output);
    CHECK(doc["results"]["reports"][0]["values"]["count"] == "3");

    config.which = "floor_identity";
    config.phi = 2;
    config.d_low = 3;
    config.x = 10;
    doc = ordered_json::parse(run(config).output);
    CHECK(doc["results"]["reports"][0]["pass"] == true);
    CHECK(doc["results"]["reports"][0]["values"]["direct_count"] == "2");

    config.which = "two_omega";
    config.n = 200;
    doc = ordered_json::parse(run(config).output);
    CHECK(doc["results"]["reports"][0]["pass"] == true);

    config.which = "nonsense";
    CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("sweep subcommand") {
    RunConfig config = base_config("sweep");
    config.probe = "b_sum";
    config.x = 100;
    config.d_max = 8;
    RunResult result = run(config);
    REQUIRE(result.exit_code == 0);
    ordered_json doc = ordered_json::parse(result.output);
    REQUIRE(doc["results"]["probes"].size() == 1);
    const ordered_json& probe = doc["results"]["probes"][0];
    CHECK(probe["probe"] == "b_sum");
    REQUIRE(probe["rows"].size() == 4);  // d_low = 1, 2, 4, 8
    CHECK(probe["rows"][0]["d_low"] == 1);
    CHECK(probe["rows"][3]["d_low"] == 8);

    config.probe = "pell_count";
    config.x = 1000;
    config.k_max = 2;
    doc = ordered_json::parse(run(config).output);
    REQUIRE(doc["results"]["probes"].size() == 2);
    CHECK(doc["results"]["probes"][0]["k"] == 1);
    CHECK(doc["results"]["probes"][1]["k"] == 2);

    config.probe = "nonsense";
    CHECK_THROWS_AS(run(config), std::invalid_argument);

    config.probe = "b_sum";
    config.d_max = report::kMaxBSumDLow + 1;
    CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("csv rendering") {
    RunConfig config = base_config("count");
    config.x = 10;
    config.format = OutputFormat::csv;
    std::vector<std::string> rows = lines_of(run(config).output);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "set,count,ratio,predicted_lower,predicted_upper");
    CHECK(rows[1].rfind("single_1,9,0.900000,", 0) == 0);
    CHECK(rows[7].rfind("triple,4,", 0) == 0);

    RunConfig constants = base_config("constants");
    constants.format = OutputFormat::csv;
    constants.set_name = "theta_1";
    rows = lines_of(run(constants).output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] ==
          "name,shifts,c,partial,tail_lower,value_lower,value_upper,midpoint");
    CHECK(rows[1].rfind("theta_1,\"1,2\",7/9,", 0) == 0);

    RunConfig lemmas = base_config("lemmas");
    lemmas.which = "four_shift_factor";
    lemmas.format = OutputFormat::csv;
    rows = lines_of(run(lemmas).output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "lemma,pass,params,values,details");
    CHECK(rows[1].rfind("four_shift_factor,true,", 0) == 0);
}

TEST_CASE("text rendering") {
    RunConfig config = base_config("count");
    config.x = 10;
    config.format = OutputFormat::text;
    std::string out = run(config).output;
    CHECK(out.rfind("sqfree count\n", 0) == 0);
    CHECK(out.find("single_1 = 9") != std::string::npos);
    CHECK(out.find("notes:") != std::string::npos);

    RunConfig verify = base_config("verify");
    verify.x = 10;
    verify.format = OutputFormat::text;
    out = run(verify).output;
    CHECK(out.rfind("sqfree verify\n", 0) == 0);
    CHECK(out.find("sigma [0.312858, 0.314112]") != std::string::npos);
}

TEST_CASE("format and config validation") {
    CHECK(format_from_name("json") == OutputFormat::json);
    CHECK(format_from_name("csv") == OutputFormat::csv);
    CHECK(format_from_name("text") == OutputFormat::text);
    CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
    CHECK(format_name(OutputFormat::text) == "text");

    CHECK_THROWS_AS(run(base_config("frobnicate")), std::invalid_argument);

    RunConfig no_x = base_config("count");
    CHECK_THROWS_AS(run(no_x), std::invalid_argument);

    RunConfig zero_x = base_config("count");
    zero_x.x = 0;
    CHECK_THROWS_AS(run(zero_x), std::invalid_argument);

    RunConfig bad_shift = base_config("count");
    bad_shift.x = 10;
    bad_shift.shifts = {4};
    CHECK_THROWS_AS(run(bad_shift), std::invalid_argument);

    RunConfig tiny_truncation = base_config("constants");
    tiny_truncation.truncation = 4;
    CHECK_THROWS_AS(run(tiny_truncation), std::invalid_argument);
}

TEST_CASE("checkpoint grid shape") {
    CHECK(report::checkpoint_grid(1000) == std::vector<u64>{10, 100, 1000});
    CHECK(report::checkpoint_grid(2500) == std::vector<u64>{10, 100, 1000, 2500});
    CHECK(report::checkpoint_grid(7) == std::vector<u64>{7});
    CHECK(report::checkpoint_grid(10) == std::vector<u64>{10});
}
