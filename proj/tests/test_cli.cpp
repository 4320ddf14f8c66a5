// Black-box contract tests for the command line tool. The test harness
// passes the binary path as the last argument; every command is spawned
// through the shell with stdout captured and the exit status decoded.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "bowlab/cores.hpp"
#include "bowlab/json_io.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::string g_bow;

struct RunResult {
    int code = -1;
    std::string out;
};

int decode_status(int status) {
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

RunResult run_shell(const std::string& command) {
    RunResult res;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.out.append(buf, got);
    }
    res.code = decode_status(pclose(pipe));
    return res;
}

// Captures stdout; stderr is discarded.
RunResult run_cli(const std::string& args) {
    return run_shell("'" + g_bow + "' " + args + " 2>/dev/null");
}

// Captures stderr; stdout is discarded.
RunResult run_cli_stderr(const std::string& args) {
    return run_shell("'" + g_bow + "' " + args + " 2>&1 1>/dev/null");
}

std::string temp_path(const std::string& name) {
    return "/tmp/bowcli_" + std::to_string(getpid()) + "_" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = temp_path(name);
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    out.close();
    return path;
}

bowlab::Json parse_out(const RunResult& res) {
    CAPTURE(res.out);
    return bowlab::Json::parse(res.out);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("help is printed to stderr and succeeds") {
    RunResult res = run_cli("--help");
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    RunResult err = run_cli_stderr("--help");
    CHECK(err.code == 0);
    CHECK(err.out.find("feasible") != std::string::npos);
    CHECK(err.out.find("normalize") != std::string::npos);
}

TEST_CASE("usage problems exit 2 with an empty stdout") {
    SUBCASE("unknown subcommand") {
        RunResult res = run_cli("frobnicate");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("missing required option") {
        RunResult res = run_cli("feasible --rows 1,1");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("bad integer in a list") {
        RunResult res = run_cli("feasible --rows 1,x --cols 1");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
        RunResult err = run_cli_stderr("feasible --rows 1,x --cols 1");
        CHECK(err.out.find("bad integer") != std::string::npos);
    }
    SUBCASE("malformed JSON payload") {
        std::string path = write_temp("bad.json", "{not json");
        RunResult res = run_cli("normalize --mu 2 --input '" + path + "'");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("payload on stdin") {
        std::string path = write_temp("bad2.json", "[[1,2],[3,");
        RunResult res =
            run_cli("normalize --mu 2 --input - < '" + path + "'");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("missing instance source") {
        RunResult res = run_cli("normalize --mu 2");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("missing input file") {
        RunResult res = run_cli("hilbert --pres /nonexistent.json --degree 2");
        CHECK(res.code == 2);
        CHECK(res.out.empty());
    }
}

TEST_CASE("feasibility maps the verdict to the exit code") {
    RunResult ok = run_cli("feasible --rows 1,1 --cols 1,1");
    CHECK(ok.code == 0);
    bowlab::Json doc = parse_out(ok);
    CHECK(doc["feasible"] == true);
    CHECK_FALSE(doc.contains("reason"));

    RunResult bad = run_cli("feasible --rows 2,2 --cols 1,1,1");
    CHECK(bad.code == 1);
    bowlab::Json bad_doc = parse_out(bad);
    CHECK(bad_doc["feasible"] == false);
    CHECK(bad_doc["reason"].is_string());
}

TEST_CASE("fixed point enumeration with count, list, and stream modes") {
    RunResult count_only = run_cli("fixed-points --rows 1,1 --cols 1,1");
    CHECK(count_only.code == 0);
    bowlab::Json doc = parse_out(count_only);
    CHECK(doc["count"] == 2);
    CHECK_FALSE(doc.contains("matrices"));

    RunResult with_list = run_cli("fixed-points --rows 1,1 --cols 1,1 --json");
    bowlab::Json listed = parse_out(with_list);
    CHECK(listed["count"] == 2);
    REQUIRE(listed["matrices"].is_array());
    REQUIRE(listed["matrices"].size() == 2);
    bowlab::Json first = bowlab::Json::parse("[[0,1],[1,0]]");
    CHECK(listed["matrices"][0] == first);

    RunResult streamed = run_cli("fixed-points --rows 1,1,1 --cols 1,1,1 --stream");
    CHECK(streamed.code == 0);
    std::vector<std::string> rows = lines_of(streamed.out);
    REQUIRE(rows.size() == 7); // six matrices and the count line
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        bowlab::Json m = bowlab::Json::parse(rows[i]);
        CHECK(m.is_array());
    }
    bowlab::Json tail = bowlab::Json::parse(rows.back());
    CHECK(tail["count"] == 6);
}

TEST_CASE("normalize is deterministic and re-consumes its own output") {
    RunResult first = run_cli("normalize --mu 2,4 --seed 7");
    REQUIRE(first.code == 0);
    RunResult second = run_cli("normalize --mu 2,4 --seed 7");
    CHECK(first.out == second.out); // byte-identical reruns

    bowlab::Json doc = parse_out(first);
    CHECK(doc["mu"] == bowlab::Json::parse("[2,4]"));
    REQUIRE(doc.contains("K"));
    REQUIRE(doc.contains("s"));
    REQUIRE(doc.contains("u"));

    // Feed the echoed instance back through a payload with an embedded mu.
    bowlab::Json payload;
    payload["mu"] = doc["mu"];
    payload["K"] = doc["K"];
    std::string path = write_temp("normalize_payload.json", payload.dump());
    RunResult refed = run_cli("normalize --input '" + path + "'");
    REQUIRE(refed.code == 0);
    bowlab::Json re_doc = parse_out(refed);
    CHECK(re_doc["s"] == doc["s"]);
    CHECK(re_doc["u"] == doc["u"]);

    // A bare matrix payload with the composition on the command line.
    std::string bare = write_temp("normalize_bare.json", doc["K"].dump());
    RunResult bare_run = run_cli("normalize --mu 2,4 --input '" + bare + "'");
    REQUIRE(bare_run.code == 0);
    CHECK(parse_out(bare_run)["s"] == doc["s"]);

    // Disagreeing compositions are a usage error.
    RunResult clash = run_cli("normalize --mu 2,2 --input '" + path + "'");
    CHECK(clash.code == 2);
    CHECK(clash.out.empty());
}

TEST_CASE("normalize reports domain failures as JSON with exit 1") {
    std::string path = write_temp("zero.json", "[[0,0],[0,0]]");
    RunResult res = run_cli("normalize --mu 2 --input '" + path + "'");
    CHECK(res.code == 1);
    bowlab::Json doc = parse_out(res);
    CHECK(doc["error"].is_string());
}

TEST_CASE("coefficient transfer commands round trip through JSON") {
    bowlab::Json payload;
    payload["mu"] = bowlab::Json::parse("[1,1]");
    payload["A"] = bowlab::Json::parse(R"([["x-2","5"],["7","x-3"]])");
    std::string path = write_temp("mvy_in.json", payload.dump());

    RunResult fwd = run_cli("mvy --input '" + path + "'");
    REQUIRE(fwd.code == 0);
    bowlab::Json fwd_doc = parse_out(fwd);
    CHECK(fwd_doc["B"] == bowlab::Json::parse("[[2,5],[7,3]]"));
    CHECK(fwd_doc["jordan_ok"] == true);
    CHECK(fwd_doc["c_consistent"] == true);
    CHECK(fwd_doc["B"][0][0].is_number_integer());

    // The big matrix feeds the inverse command and returns the same entries.
    bowlab::Json inv_payload;
    inv_payload["mu"] = fwd_doc["mu"];
    inv_payload["B"] = fwd_doc["B"];
    std::string inv_path = write_temp("mvy_inv_in.json", inv_payload.dump());
    RunResult inv = run_cli("mvy-inv --input '" + inv_path + "'");
    REQUIRE(inv.code == 0);
    bowlab::Json inv_doc = parse_out(inv);
    CHECK(inv_doc["A"] == fwd_doc["A"]);

    // Sampled mode is deterministic and closes the loop at a larger size.
    RunResult s1 = run_cli("mvy-inv --mu 2,2 --seed 11");
    RunResult s2 = run_cli("mvy-inv --mu 2,2 --seed 11");
    REQUIRE(s1.code == 0);
    CHECK(s1.out == s2.out);
    bowlab::Json sampled = parse_out(s1);
    bowlab::Json closed;
    closed["mu"] = sampled["mu"];
    closed["A"] = sampled["A"];
    std::string closed_path = write_temp("mvy_closed.json", closed.dump());
    RunResult back = run_cli("mvy --input '" + closed_path + "'");
    REQUIRE(back.code == 0);
    CHECK(parse_out(back)["B"] == sampled["B"]);
}

TEST_CASE("jordan-check compares the diagonal factors") {
    bowlab::Json good;
    good["A"] = bowlab::Json::parse(R"([["x-2","5"],["7","x-3"]])");
    good["B"] = bowlab::Json::parse("[[2,5],[7,3]]");
    std::string good_path = write_temp("jordan_good.json", good.dump());
    RunResult ok = run_cli("jordan-check --input '" + good_path + "'");
    CHECK(ok.code == 0);
    CHECK(parse_out(ok)["jordan_ok"] == true);

    bowlab::Json bad = good;
    bad["B"] = bowlab::Json::parse("[[1,0],[0,1]]");
    std::string bad_path = write_temp("jordan_bad.json", bad.dump());
    RunResult fail = run_cli("jordan-check --input '" + bad_path + "'");
    CHECK(fail.code == 1);
    CHECK(parse_out(fail)["jordan_ok"] == false);
}

TEST_CASE("core command mirrors the library data") {
    RunResult res = run_cli("core --k 1 --c 2,0 --tree");
    REQUIRE(res.code == 0);
    bowlab::Json doc = parse_out(res);
    CHECK(doc["valid"] == true);

    bowlab::TwoRowSignature sig;
    sig.k = 1;
    sig.c = {2, 0};
    bowlab::CoreData data = bowlab::core_data(sig);
    CHECK(doc["rank"] == data.rank);
    CHECK(doc["data"]["a"].get<std::vector<int>>() == data.a);
    CHECK(doc["data"]["b"].get<std::vector<int>>() == data.b);
    CHECK(doc["data"]["r"].get<std::vector<int>>() == data.r);
    CHECK(doc["u"].get<std::vector<int>>() == sig.u());

    bowlab::TreeStats stats = bowlab::recursion_tree(sig);
    CHECK(doc["tree_stats"]["nodes"] == stats.nodes);
    CHECK(doc["tree_stats"]["leaves"] == stats.leaves);
    CHECK(doc["tree_stats"]["max_depth"] == stats.max_depth);
    CHECK(doc["tree"]["rank"] == data.rank);
    REQUIRE(doc["tree"].contains("u_child"));
    REQUIRE(doc["tree"].contains("v_child"));
    CHECK(doc["tree"]["u_child"].contains("grassmannian"));
    CHECK(doc["tree"]["u_child"].contains("poincare"));

    SUBCASE("invalid signatures exit 1") {
        RunResult bad = run_cli("core --k 5 --c 2,0");
        CHECK(bad.code == 1);
        bowlab::Json bad_doc = parse_out(bad);
        CHECK(bad_doc["valid"] == false);
        CHECK_FALSE(bad_doc.contains("rank"));
    }
    SUBCASE("depth cap truncates the emitted tree") {
        RunResult capped = run_cli("core --k 1 --c 2,0 --tree --depth 0");
        REQUIRE(capped.code == 0);
        bowlab::Json capped_doc = parse_out(capped);
        CHECK(capped_doc["tree"]["truncated"] == true);
        CHECK_FALSE(capped_doc["tree"].contains("u_child"));
    }
    SUBCASE("node budget from the environment") {
        RunResult starved = run_shell("BOWLAB_NODE_BUDGET=1 '" + g_bow +
                                      "' core --k 1 --c 2,0 --tree 2>/dev/null");
        CHECK(starved.code == 1);
        bowlab::Json starved_doc = parse_out(starved);
        CHECK(starved_doc["error"].is_string());
    }
}

TEST_CASE("hilbert command reads a presentation file") {
    bowlab::Json pres;
    pres["gens"] = bowlab::Json::parse(R"(["x1","x2","x3","v"])");
    pres["rels"] = bowlab::Json::parse(
        R"([[{"coef":1,"exps":[0,0,0,2]},{"coef":-1,"exps":[1,0,0,1]},
             {"coef":-1,"exps":[0,1,0,1]},{"coef":1,"exps":[1,1,0,0]}],
            [{"coef":1,"exps":[0,0,1,1]}]])");
    std::string path = write_temp("pres.json", pres.dump());

    RunResult deg2 = run_cli("hilbert --pres '" + path + "' --degree 2");
    CHECK(deg2.code == 0);
    CHECK(parse_out(deg2)["dimension"] == 4);

    RunResult deg4 = run_cli("hilbert --pres '" + path + "' --degree 4");
    CHECK(deg4.code == 0);
    CHECK(parse_out(deg4)["dimension"] == 8);

    RunResult odd = run_cli("hilbert --pres '" + path + "' --degree 3");
    CHECK(odd.code == 0);
    CHECK(parse_out(odd)["dimension"] == 0);
}

TEST_CASE("selftest reports its tally and honors the seed flag") {
    RunResult res = run_cli("selftest");
    CHECK(res.code == 0);
    bowlab::Json doc = parse_out(res);
    CHECK(doc["failures"] == 0);
    CHECK(doc["checks"].get<long long>() > 0);
    CHECK(doc["seed"] == 12345);
    CHECK_FALSE(doc.contains("failed"));

    RunResult seeded = run_cli("selftest --seed 777");
    CHECK(seeded.code == 0);
    CHECK(parse_out(seeded)["seed"] == 777);
}

int run_doctest(int argc, char** argv) {
    doctest::Context ctx;
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        std::string arg = argv[i];
        if (i > 0 && !arg.empty() && arg[0] != '-' && g_bow.empty()) {
            g_bow = arg;
            continue;
        }
        args.push_back(argv[i]);
    }
    ctx.applyCommandLine(static_cast<int>(args.size()), args.data());
    if (g_bow.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary> [doctest args]\n");
        return 3;
    }
    return ctx.run();
}

int main(int argc, char** argv) { return run_doctest(argc, argv); }
