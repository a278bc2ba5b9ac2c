#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// End-to-end checks of the command-line surface: argument handling, exit
// codes, and the evaluation report formats. The binary and data paths come
// from TYPEQA_BIN / TYPEQA_DATA (set by ctest).

namespace {

std::string bin() {
    const char* v = std::getenv("TYPEQA_BIN");
    REQUIRE(v != nullptr);
    return v;
}

std::string data() {
    const char* v = std::getenv("TYPEQA_DATA");
    REQUIRE(v != nullptr);
    return v;
}

struct RunResult {
    int code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    const std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string scratch_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/typeqa-cli-test-" + std::to_string(::getpid());
        if (std::system(("mkdir -p " + d).c_str()) != 0) std::abort();
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and version exit 0; bad usage exits 1") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("--version").code == 0);
    CHECK(run_cli("no-such-command").code == 1);
    CHECK(run_cli("stats").code == 1);  // missing required options
}

TEST_CASE("input errors exit 1 with a message") {
    RunResult missing = run_cli("ingest-kg --seed 1 --dump /nonexistent.jsonl --out /tmp/x");
    CHECK(missing.code == 1);
    CHECK(contains(missing.output, "cannot open input file"));

    const std::string dup = write_file(
        "dup.jsonl",
        R"({"id":"Q1","label":"a","aliases":[],"claims":[["P31","Q2"]]})"
        "\n"
        R"({"id":"Q1","label":"b","aliases":[],"claims":[["P31","Q2"]]})"
        "\n");
    RunResult dup_run = run_cli("ingest-kg --seed 1 --dump " + dup + " --out " +
                                scratch_dir() + "/dup-out.jsonl");
    CHECK(dup_run.code == 1);
    CHECK(contains(dup_run.output, "duplicate entity id in dump: Q1"));

    // Seed is required for output provenance.
    RunResult no_seed = run_cli("ingest-kg --dump " + dup + " --out /tmp/x.jsonl");
    CHECK(no_seed.code == 1);
    CHECK(contains(no_seed.output, "seed is required"));
}

TEST_CASE("ingest-kg reports stats and writes a provenance header") {
    const std::string out = scratch_dir() + "/entities.jsonl";
    RunResult r = run_cli("ingest-kg --config " + data() + "/mini/config.ini --dump " + data() +
                          "/mini/kg.jsonl --out " + out);
    REQUIRE(r.code == 0);
    CHECK(contains(r.output, "read 59"));
    CHECK(contains(r.output, "retained 58"));
    CHECK(contains(r.output, "skipped_untyped 1"));

    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    CHECK(contains(first, "# typeqa "));
    CHECK(contains(first, "seed=42"));
}

TEST_CASE("eval-typing report matches a hand-computed fixture") {
    // Pipeline outputs are not needed; gold/pred files ship with the data.
    const std::string out = scratch_dir() + "/typing-report.txt";
    RunResult r = run_cli("eval-typing --seed 42 --gold " + data() +
                          "/mini/typing_gold.jsonl --pred " + data() +
                          "/mini/typing_pred.jsonl --out " + out);
    REQUIRE(r.code == 0);

    std::ifstream in(out);
    std::stringstream report;
    report << in.rdbuf();
    const std::string text = report.str();
    CHECK(contains(text, "instances 4"));
    CHECK(contains(text, "overall tp 3"));
    CHECK(contains(text, "overall fp 2"));
    CHECK(contains(text, "overall fn 1"));
    CHECK(contains(text, "overall precision 0.6000"));
    CHECK(contains(text, "overall recall 0.7500"));
    CHECK(contains(text, "overall f1 0.6667"));
    CHECK(contains(text, "seen precision 1.0000"));
    CHECK(contains(text, "seen recall 1.0000"));
    CHECK(contains(text, "unseen precision 0.3333"));
    CHECK(contains(text, "unseen recall 0.5000"));
    CHECK(contains(text, "unseen f1 0.4000"));
    CHECK(contains(text, "micro-averaged"));
}

TEST_CASE("eval-typing detects novel predictions against the ontology") {
    const std::string dir = scratch_dir();
    REQUIRE(run_cli("ingest-kg --config " + data() + "/mini/config.ini --dump " + data() +
                    "/mini/kg.jsonl --out " + dir + "/nv-entities.jsonl")
                .code == 0);
    REQUIRE(run_cli("build-ontology --config " + data() + "/mini/config.ini --entities " + dir +
                    "/nv-entities.jsonl --ontology-out " + dir +
                    "/nv-ontology.jsonl --index-out " + dir + "/nv-index.jsonl")
                .code == 0);

    RunResult r = run_cli("eval-typing --seed 42 --gold " + data() +
                          "/mini/typing_gold.jsonl --pred " + data() +
                          "/mini/typing_pred.jsonl --ontology " + dir + "/nv-ontology.jsonl");
    REQUIRE(r.code == 0);
    CHECK(contains(r.output, "novel_types 2"));
    CHECK(contains(r.output, "novel metallurgical rock"));
    CHECK(contains(r.output, "novel monotroph"));
}

TEST_CASE("eval-dst scores prediction files per domain") {
    RunResult hotel = run_cli("eval-dst --seed 42 --dialogs " + data() +
                              "/mini/dialogs.jsonl --pred " + data() +
                              "/mini/dst_pred.jsonl --schema " + data() +
                              "/dst/schema.jsonl --domain hotel");
    REQUIRE(hotel.code == 0);
    CHECK(contains(hotel.output, "turns 4"));
    CHECK(contains(hotel.output, "correct 3"));
    CHECK(contains(hotel.output, "jga 0.7500"));

    RunResult rest = run_cli("eval-dst --seed 42 --dialogs " + data() +
                             "/mini/dialogs.jsonl --pred " + data() +
                             "/mini/dst_pred.jsonl --schema " + data() +
                             "/dst/schema.jsonl --domain restaurant");
    REQUIRE(rest.code == 0);
    CHECK(contains(rest.output, "jga 1.0000"));

    RunResult unknown = run_cli("eval-dst --seed 42 --dialogs " + data() +
                                "/mini/dialogs.jsonl --pred " + data() +
                                "/mini/dst_pred.jsonl --schema " + data() +
                                "/dst/schema.jsonl --domain spaceship");
    CHECK(unknown.code == 1);
    CHECK(contains(unknown.output, "unknown target domain"));
}

TEST_CASE("eval-dst drives an external predictor command") {
    // The predictor sees one JSON request per turn on stdin and answers with
    // one belief string; this one ignores its input.
    const std::string script = write_file(
        "predictor.sh",
        "#!/bin/sh\ncat > /dev/null\necho \"[hotel area]: west; [hotel price range]: cheap\"\n");

    RunResult r = run_cli("eval-dst --seed 42 --dialogs " + data() +
                          "/mini/dialogs.jsonl --schema " + data() +
                          "/dst/schema.jsonl --domain hotel --predict-cmd 'sh " + script + "'");
    REQUIRE(r.code == 0);
    // Only the first turn's gold matches the constant prediction.
    CHECK(contains(r.output, "turns 4"));
    CHECK(contains(r.output, "correct 1"));
    CHECK(contains(r.output, "jga 0.2500"));

    RunResult failing = run_cli("eval-dst --seed 42 --dialogs " + data() +
                                "/mini/dialogs.jsonl --schema " + data() +
                                "/dst/schema.jsonl --domain hotel --predict-cmd false");
    CHECK(failing.code == 1);
    CHECK(contains(failing.output, "predictor command failed"));

    RunResult neither = run_cli("eval-dst --seed 42 --dialogs " + data() +
                                "/mini/dialogs.jsonl --schema " + data() +
                                "/dst/schema.jsonl --domain hotel");
    CHECK(neither.code == 1);
    CHECK(contains(neither.output, "needs --pred or --predict-cmd"));
}

TEST_CASE("flags override config file values") {
    const std::string out = scratch_dir() + "/override-entities.jsonl";
    // config.ini says seed = 42; the flag wins and lands in the header.
    RunResult r = run_cli("ingest-kg --config " + data() + "/mini/config.ini --seed 777 --dump " +
                          data() + "/mini/kg.jsonl --out " + out);
    REQUIRE(r.code == 0);
    std::ifstream in(out);
    std::string first;
    std::getline(in, first);
    CHECK(contains(first, "seed=777"));
}

TEST_CASE("the relevance filter switch changes type references") {
    const std::string dir = scratch_dir();
    const std::string cfg = data() + "/mini/config.ini";
    REQUIRE(run_cli("ingest-kg --config " + cfg + " --dump " + data() + "/mini/kg.jsonl --out " +
                    dir + "/rf-entities.jsonl")
                .code == 0);
    REQUIRE(run_cli("build-ontology --config " + cfg + " --entities " + dir +
                    "/rf-entities.jsonl --ontology-out " + dir +
                    "/rf-ontology.jsonl --index-out " + dir + "/rf-index.jsonl")
                .code == 0);
    REQUIRE(run_cli("link-corpus --config " + cfg + " --corpus " + data() +
                    "/mini/corpus.jsonl --entities " + dir + "/rf-entities.jsonl --out " + dir +
                    "/rf-linked.jsonl")
                .code == 0);

    auto type_references = [&](const std::string& extra) {
        RunResult r = run_cli("stats --config " + cfg + " --linked " + dir +
                              "/rf-linked.jsonl --index " + dir + "/rf-index.jsonl" + extra);
        REQUIRE(r.code == 0);
        const std::string key = "type_references ";
        const std::size_t pos = r.output.find(key);
        REQUIRE(pos != std::string::npos);
        return std::stoull(r.output.substr(pos + key.size()));
    };
    const auto filtered = type_references("");
    const auto unfiltered = type_references(" --relevance-filter off");
    CHECK(filtered < unfiltered);  // multi-occupation entities keep all types
}

TEST_CASE("gen-qa accepts a custom mix and rejects malformed ones") {
    const std::string dir = scratch_dir();
    const std::string cfg = data() + "/mini/config.ini";
    REQUIRE(run_cli("ingest-kg --config " + cfg + " --dump " + data() +
                    "/mini/kg.jsonl --out " + dir + "/qa-entities.jsonl")
                .code == 0);
    REQUIRE(run_cli("build-ontology --config " + cfg + " --entities " + dir +
                    "/qa-entities.jsonl --ontology-out " + dir +
                    "/qa-ontology.jsonl --index-out " + dir + "/qa-index.jsonl")
                .code == 0);
    REQUIRE(run_cli("link-corpus --config " + cfg + " --corpus " + data() +
                    "/mini/corpus.jsonl --entities " + dir + "/qa-entities.jsonl --out " + dir +
                    "/qa-linked.jsonl")
                .code == 0);

    RunResult all_typing = run_cli("gen-qa --config " + cfg + " --linked " + dir +
                                   "/qa-linked.jsonl --entities " + dir +
                                   "/qa-entities.jsonl --ontology " + dir +
                                   "/qa-ontology.jsonl --index " + dir +
                                   "/qa-index.jsonl --out " + dir +
                                   "/qa-out.jsonl --per-doc 2 --mix 0,1,0,0");
    REQUIRE(all_typing.code == 0);
    std::ifstream in(dir + "/qa-out.jsonl");
    std::string line;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++records;
        CHECK(contains(line, "\"task\":\"typing\""));
    }
    CHECK(records == 60);  // 30 docs x 2

    RunResult bad_mix = run_cli("gen-qa --config " + cfg + " --linked " + dir +
                                "/qa-linked.jsonl --entities " + dir +
                                "/qa-entities.jsonl --ontology " + dir +
                                "/qa-ontology.jsonl --index " + dir + "/qa-index.jsonl --out " +
                                dir + "/qa-bad.jsonl --mix 0.5,0.5");
    CHECK(bad_mix.code == 1);
    CHECK(contains(bad_mix.output, "--mix expects four comma-separated weights"));
}
