// End-to-end checks of the command-line tool: fixture documents go through
// the real binary and the exit-code contract (0 ok, 1 domain, 2 parse) is
// asserted along with the JSON output.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "glmn/io.hpp"
#include "glmn/osp.hpp"
#include "test_util.hpp"

using namespace glmn;
using nlohmann::json;

namespace {

const std::string kTmp = GLMN_TEST_TMPDIR;

std::string fixture_path(const std::string& name) { return kTmp + "/" + name; }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    REQUIRE(out.is_open());
    out << contents;
}

struct RunResult {
    int exit_code = -1;
    json output;
    std::string stderr_text;
};

RunResult run_cli(const std::string& args, bool parse_stdout = true) {
    const std::string out_path = fixture_path("cli_stdout.txt");
    const std::string err_path = fixture_path("cli_stderr.txt");
    const std::string command =
        std::string(GLMN_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path);
    std::stringstream err_stream;
    err_stream << err.rdbuf();
    result.stderr_text = err_stream.str();
    if (parse_stdout) {
        std::ifstream out(out_path);
        if (out.peek() != std::ifstream::traits_type::eof()) {
            try {
                result.output = json::parse(out);
            } catch (const json::parse_error&) {
            }
        }
    }
    return result;
}

} // namespace

TEST_CASE("analyze: embeddable two-chain element") {
    SuperMatrix x(4, 2);
    x.set(0, 4, 1);
    x.set(1, 5, 1);
    x.set(4, 2, 1);
    x.set(5, 3, 1);
    write_file(fixture_path("two_chain.json"), matrix_to_json(x).dump());

    const RunResult r =
        run_cli("analyze --input " + fixture_path("two_chain.json") + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output["parity"] == "odd");
    CHECK(r.output["nilpotent"] == true);
    CHECK(r.output["embeddable"] == true);
    REQUIRE(r.output["blocks"].size() == 2);
    CHECK(r.output["blocks"][0]["size"] == 3);
    CHECK(r.output["blocks"][0]["generator_parity"] == "even");
    CHECK(r.output["params"]["k"] == json::array({1, 1}));
    CHECK(r.output["params"]["column_marked"] == json::array({1, 2}));
    // the reported quintuple contains the input element itself
    CHECK(matrix_from_json(r.output["quintuple"]["e"]) == x);
    const Osp12Quintuple q{matrix_from_json(r.output["quintuple"]["e"]),
                           matrix_from_json(r.output["quintuple"]["f"]),
                           matrix_from_json(r.output["quintuple"]["H"]),
                           matrix_from_json(r.output["quintuple"]["E"]),
                           matrix_from_json(r.output["quintuple"]["F"])};
    CHECK(verify_osp12(q).all_hold());
}

TEST_CASE("analyze: non-embeddable and error inputs") {
    write_file(fixture_path("e12.json"),
               R"({"m":1,"n":1,"entries":[[0,1],[0,0]]})");
    const RunResult r = run_cli("analyze --input " + fixture_path("e12.json") +
                                " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output["embeddable"] == false);
    REQUIRE(r.output["blocks"].size() == 1);
    CHECK(r.output["blocks"][0]["size"] == 2);
    CHECK(r.output["blocks"][0]["generator_parity"] == "odd");

    write_file(fixture_path("zero11.json"),
               R"({"m":1,"n":1,"entries":[[0,0],[0,0]]})");
    const RunResult z = run_cli("analyze --input " + fixture_path("zero11.json") +
                                " --format json");
    CHECK(z.exit_code == 0);
    CHECK(z.output["embeddable"] == true);
    REQUIRE(z.output["blocks"].size() == 2);
    CHECK(z.output["blocks"][0]["generator_parity"] == "even");
    CHECK(z.output["blocks"][1]["generator_parity"] == "odd");

    // odd but not nilpotent
    write_file(fixture_path("swap.json"),
               R"({"m":1,"n":1,"entries":[[0,1],[1,0]]})");
    const RunResult s = run_cli("analyze --input " + fixture_path("swap.json") +
                                " --format json");
    CHECK(s.exit_code == 1);
    CHECK(s.output["error"] == "NotNilpotent");

    // not odd
    write_file(fixture_path("even.json"),
               R"({"m":1,"n":1,"entries":[[1,0],[0,1]]})");
    const RunResult e = run_cli("analyze --input " + fixture_path("even.json") +
                                " --format json");
    CHECK(e.exit_code == 1);
    CHECK(e.output["error"] == "NotOdd");

    write_file(fixture_path("broken.json"), "{not json");
    CHECK(run_cli("analyze --input " + fixture_path("broken.json")).exit_code == 2);
    CHECK(run_cli("analyze --input " + fixture_path("missing.json")).exit_code == 2);
}

TEST_CASE("construct: representative, sl2 and osp") {
    write_file(fixture_path("fundamental.json"),
               R"({"m":2,"n":1,"k":[1],"column_marked":[1],"row_marked":[],"s":0})");

    const RunResult rep = run_cli("construct --params " + fixture_path("fundamental.json") +
                                  " --emit representative --format json");
    CHECK(rep.exit_code == 0);
    CHECK(matrix_from_json(rep.output["representative"]) ==
          representative(OrbitParams::validate(2, 1, {1}, {1}, {}, 0)));

    const RunResult sl2 = run_cli("construct --params " + fixture_path("fundamental.json") +
                                  " --emit sl2 --format json");
    CHECK(sl2.exit_code == 0);
    CHECK(sl2.output["relations_verified"] == true);
    CHECK(matrix_from_json(sl2.output["H"]).at(0, 0) == 1);

    const RunResult osp = run_cli("construct --params " + fixture_path("fundamental.json") +
                                  " --emit osp --format json");
    CHECK(osp.exit_code == 0);
    for (const char* name : {"e", "f", "H", "E", "F"}) {
        CHECK(osp.output.contains(name));
    }

    write_file(fixture_path("unmarked.json"),
               R"({"m":1,"n":1,"k":[1],"column_marked":[],"row_marked":[],"s":0})");
    const RunResult gap = run_cli("construct --params " + fixture_path("unmarked.json") +
                                  " --emit osp --format json");
    CHECK(gap.exit_code == 1);
    CHECK(gap.stderr_text.find("marker gap at block 1") != std::string::npos);

    write_file(fixture_path("overflow.json"),
               R"({"m":1,"n":1,"k":[1],"column_marked":[1],"row_marked":[],"s":0})");
    CHECK(run_cli("construct --params " + fixture_path("overflow.json") +
                  " --emit representative")
              .exit_code == 2);

    write_file(fixture_path("zero_params.json"), R"({"m":1,"n":1})");
    const RunResult zero = run_cli("construct --params " + fixture_path("zero_params.json") +
                                   " --emit representative --format json");
    CHECK(zero.exit_code == 0);
    CHECK(matrix_from_json(zero.output["representative"]).is_zero());
}

TEST_CASE("enumerate") {
    const RunResult r = run_cli("enumerate --m 1 --n 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output["total"] == 3);
    CHECK(r.output["rows"].size() == 3);

    const RunResult filtered = run_cli("enumerate --m 1 --n 1 --embeddable-only --format json");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.output["total"] == 3);
    CHECK(filtered.output["shown"] == 1);
    CHECK(filtered.output["rows"][0]["embeddable"] == true);

    const RunResult empty = run_cli("enumerate --m 0 --n 0 --format json");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output["total"] == 1);

    const RunResult two_one = run_cli("enumerate --m 2 --n 1 --format json");
    CHECK(two_one.exit_code == 0);
    CHECK(two_one.output["total"] == 4);
}

TEST_CASE("verify") {
    const Osp12Quintuple q = construct_osp12(OrbitParams::validate(2, 1, {1}, {1}, {}, 0));
    write_file(fixture_path("q_e.json"), matrix_to_json(q.e).dump());
    write_file(fixture_path("q_f.json"), matrix_to_json(q.f).dump());
    write_file(fixture_path("q_H.json"), matrix_to_json(q.H).dump());
    write_file(fixture_path("q_E.json"), matrix_to_json(q.E).dump());
    write_file(fixture_path("q_F.json"), matrix_to_json(q.F).dump());

    const std::string files = " --e " + fixture_path("q_e.json") + " --f " +
                              fixture_path("q_f.json") + " --H " + fixture_path("q_H.json") +
                              " --E " + fixture_path("q_E.json") + " --F " +
                              fixture_path("q_F.json");

    const RunResult good = run_cli("verify" + files + " --format json");
    CHECK(good.exit_code == 0);
    CHECK(good.output["all_hold"] == true);
    CHECK(good.output["relations"].size() == 12);

    // negate H: [H,e]=e must be flagged
    write_file(fixture_path("q_Hneg.json"), matrix_to_json(-q.H).dump());
    const std::string bad_files = " --e " + fixture_path("q_e.json") + " --f " +
                                  fixture_path("q_f.json") + " --H " +
                                  fixture_path("q_Hneg.json") + " --E " +
                                  fixture_path("q_E.json") + " --F " + fixture_path("q_F.json");
    const RunResult bad = run_cli("verify" + bad_files + " --format json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output["all_hold"] == false);
    bool he_flagged = false;
    for (const auto& entry : bad.output["relations"]) {
        if (entry["name"] == "[H,e]=e") {
            he_flagged = entry["holds"] == false;
        }
    }
    CHECK(he_flagged);

    // the all-zero quintuple satisfies every relation vacuously
    write_file(fixture_path("q_zero.json"),
               matrix_to_json(SuperMatrix::zero(2, 1)).dump());
    const std::string zero_files = " --e " + fixture_path("q_zero.json") + " --f " +
                                   fixture_path("q_zero.json") + " --H " +
                                   fixture_path("q_zero.json") + " --E " +
                                   fixture_path("q_zero.json") + " --F " +
                                   fixture_path("q_zero.json");
    CHECK(run_cli("verify" + zero_files).exit_code == 0);

    CHECK(run_cli("verify --e nope.json --f nope.json --H nope.json --E nope.json --F nope.json")
              .exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
