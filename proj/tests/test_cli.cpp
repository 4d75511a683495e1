#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ADICSEQ_CLI_PATH
#error "ADICSEQ_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_root() {
    const char* t = std::getenv("TMPDIR");
    return (t ? std::string(t) : std::string("/tmp")) + "/adicseq_cli_test";
}

RunResult run_cli(const std::string& args) {
    const std::string dir = temp_root();
    if (std::system(("mkdir -p " + dir).c_str()) != 0) throw std::runtime_error("mkdir failed");
    const std::string out_path = dir + "/stdout.txt";
    const std::string err_path = dir + "/stderr.txt";
    const std::string cmd =
        std::string(ADICSEQ_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

TEST_CASE("gen writes the worked p=3 sequence file bit-exactly") {
    const std::string path = temp_root() + "/sb3.bits";
    const RunResult r = run_cli("gen --family twoprime --p 3 --out " + path);
    REQUIRE(r.code == 0);
    CHECK(slurp(path) == "15\n100101110111111\n");
    const json info = json::parse(r.out);
    CHECK(info["period"] == 15);
    CHECK(info["p"] == 3);
    CHECK(info["q"] == 5);
}

TEST_CASE("gen reports gmw provenance") {
    const std::string path = temp_root() + "/gmw2.bits";
    const RunResult r = run_cli("gen --family gmw --k 2 --out " + path);
    REQUIRE(r.code == 0);
    const json info = json::parse(r.out);
    CHECK(info["period"] == 15);
    CHECK(info["modulus"] == "0x13");
    CHECK(info["constant_column"] == 0);
    CHECK(info["shifts"].size() == 5);
}

TEST_CASE("gen rejects a non-twin p on stderr with exit 2") {
    const RunResult r = run_cli("gen --family twoprime --p 9");
    CHECK(r.code == 2);
    CHECK(r.err.find("p and p+2 must both be prime") != std::string::npos);
}

TEST_CASE("gen accepts a primitive modulus override and rejects others") {
    const std::string path = temp_root() + "/gmw2_alt.bits";
    const RunResult ok = run_cli("gen --family gmw --k 2 --modulus 0x19 --out " + path);
    REQUIRE(ok.code == 0);
    CHECK(json::parse(ok.out)["modulus"] == "0x19");

    CHECK(run_cli("gen --family gmw --k 2 --modulus 0x1f").code == 2);  // order 5, not primitive
    CHECK(run_cli("gen --family gmw --k 2 --modulus zz").code == 2);
}

TEST_CASE("gen without --out streams the sequence and keeps info on stderr") {
    const RunResult r = run_cli("gen --family twoprime --p 5");
    REQUIRE(r.code == 0);
    CHECK(r.out.substr(0, 3) == "35\n");
    CHECK(r.out.size() == 3 + 35 + 1);
    CHECK(json::parse(r.err)["period"] == 35);
}

TEST_CASE("complexity reports the Example-1 profile") {
    const std::string path = temp_root() + "/sb3.bits";
    run_cli("gen --family twoprime --p 3 --out " + path);
    const RunResult r = run_cli("complexity --in " + path);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["s2"] == "32489");
    CHECK(j["g"] == "1");
    CHECK(j["qmin"] == "32767");
    CHECK(j["qmin_bits"] == 15);
    CHECK(j["phi2"].get<double>() > 14.9999);
    CHECK(j["s2_factored"] == "53*613");
    CHECK(j["qmin_factored"] == "7*31*151");
}

TEST_CASE("autocorr histogram of the k=2 gmw sequence") {
    const std::string path = temp_root() + "/gmw2.bits";
    run_cli("gen --family gmw --k 2 --out " + path);
    const RunResult r = run_cli("autocorr --in " + path);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 15);
    CHECK(j["histogram"]["15"] == 1);
    CHECK(j["histogram"]["-1"] == 2);
    CHECK(j["histogram"]["3"] == 12);
}

TEST_CASE("autocorr of the all-one sequence is flat") {
    const std::string path = temp_root() + "/ones4.bits";
    std::ofstream(path) << "4\n1111\n";
    const RunResult r = run_cli("autocorr --in " + path);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["spectrum"] == json::array({4, 4, 4, 4}));
}

TEST_CASE("approx verifies its own synthesis") {
    const std::string path = temp_root() + "/sb3.bits";
    run_cli("gen --family twoprime --p 3 --out " + path);
    const RunResult r = run_cli("approx --in " + path + " --prefix-len 30");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["q"] == "32767");
    CHECK(j["f"] == "-32489");
}

TEST_CASE("text format renders key/value lines") {
    const std::string path = temp_root() + "/sb3.bits";
    run_cli("gen --family twoprime --p 3 --out " + path);
    const RunResult cx = run_cli("complexity --in " + path + " --format text");
    REQUIRE(cx.code == 0);
    CHECK(cx.out.find("qmin 32767\n") != std::string::npos);
    const RunResult ac = run_cli("autocorr --in " + path + " --format text");
    REQUIRE(ac.code == 0);
    CHECK(ac.out.find("n 15\n") == 0);
    const RunResult ap = run_cli("approx --in " + path + " --prefix-len 32 --format text");
    REQUIRE(ap.code == 0);
    CHECK(ap.out.find("verified yes") != std::string::npos);
}

TEST_CASE("malformed input files exit with code 2") {
    const std::string path = temp_root() + "/bad.bits";
    std::ofstream(path) << "5\n101\n";
    const RunResult r = run_cli("complexity --in " + path);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify single claims pass with exit 0") {
    const RunResult ex1 = run_cli("verify --claim example1");
    CHECK(ex1.code == 0);
    CHECK(ex1.out.find("PASS example1") != std::string::npos);

    const RunResult lemma2 = run_cli("verify --claim lemma2 --p-limit 31");
    CHECK(lemma2.code == 0);
    // 5 twin pairs through (29,31), one PASS line each plus the summary
    std::size_t lines = 0;
    for (char c : lemma2.out)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("verify emits machine-readable reports on request") {
    const RunResult r = run_cli("verify --claim cgcd --p-limit 11 --format json");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    REQUIRE(j["reports"].size() == 3);  // (3,5), (5,7), (11,13)
    CHECK(j["reports"][0]["claim"] == "c_gcd");
    CHECK(j["reports"][0]["pass"] == true);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    const RunResult a = run_cli("verify --claim lemma3 --p-limit 5 --seed 777 --jobs 2");
    const RunResult b = run_cli("verify --claim lemma3 --p-limit 5 --seed 777 --jobs 1");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);  // canonical order, independent of scheduling
    CHECK(a.out.find("seed 777") != std::string::npos);
}

TEST_CASE("verify rejects out-of-scale parameters with exit 2") {
    CHECK(run_cli("verify --claim lemma2 --p-limit 200").code == 2);
    CHECK(run_cli("verify --claim lemma1 --k-range 2..9").code == 2);
    CHECK(run_cli("verify --claim nosuch").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
}
