#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Run the binary with the given arguments and capture stdout (stderr too
// when merge_stderr is set).
RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(WEYLMOD_BIN) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::string data(const std::string& file) { return std::string(TEST_DATA_DIR) + "/" + file; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool mentions(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("golden outputs") {

TEST_CASE("grid pairs of a word") {
    RunResult r = run("rho " + data("k22.q") + " --word \"2 3 1 3 4 1\"");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(data("golden/rho.out")));
}

TEST_CASE("blocked embedding") {
    RunResult r = run("embed " + data("k22.q") + " --m 1:3 --u 0:2,0:3,0:4");
    CHECK(r.code == 1);
    CHECK(r.out == slurp(data("golden/embed.out")));
}

TEST_CASE("leftmost word") {
    RunResult r = run("leftmost " + data("k22.q") + " --word \"2 3 1 2 1\"");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(data("golden/leftmost.out")));
}

} // TEST_SUITE("golden outputs")

TEST_SUITE("subcommands") {

TEST_CASE("coxmat") {
    RunResult r = run("coxmat " + data("k22.q"));
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 3 3\n2 1 3 3\n3 3 1 2\n3 3 2 1\n");
    CHECK(run("coxmat " + data("kronecker.q")).out == "1 inf\ninf 1\n");
    CHECK(run("coxmat " + data("b2.cartan")).out == "1 4\n4 1\n");
}

TEST_CASE("cmp") {
    std::string input = data("k22.q");
    RunResult less = run("cmp " + input + " --w1 \"2 3 2\" --w2 \"3 2 3\"");
    CHECK(less.code == 0);
    CHECK(less.out == "less\n");
    CHECK(run("cmp " + input + " --w1 \"3 2 3\" --w2 \"2 3 2\"").out == "greater\n");
    CHECK(run("cmp " + input + " --w1 \"1 2\" --w2 \"1 2\"").out == "equal\n");
}

TEST_CASE("reduced") {
    RunResult yes = run("reduced " + data("k22.q") + " --word \"2 3 2\"");
    CHECK(yes.code == 0);
    CHECK(yes.out == "reduced\n");
    RunResult no = run("reduced " + data("k22.q") + " --word \"2 3 1 2 1\"");
    CHECK(no.code == 1);
    CHECK(no.out == "not reduced\n");
}

TEST_CASE("leftmost methods agree") {
    std::string base = "leftmost " + data("k22.q") + " --word \"3 2 3\" --method ";
    CHECK(run(base + "bfs").out == "2 3 2\n");
    CHECK(run(base + "greedy").out == "2 3 2\n");
    CHECK(run(base + "both").out == "2 3 2\n");
    CHECK(run(base + "sideways", true).code == 2);
}

TEST_CASE("embed variants") {
    std::string input = data("k22.q");
    RunResult yes = run("embed " + input + " --m 1:1 --u 0:3,0:4");
    CHECK(yes.code == 0);
    CHECK(yes.out == "YES: M embeds; final middle (0,3),(0,4)\n");

    RunResult empty = run("embed " + input + " --m \"\" --u 0:3");
    CHECK(empty.code == 0);
    CHECK(empty.out == "YES: M embeds; final middle -\n");

    RunResult traced = run("embed " + input + " --m 1:3 --u 0:2,0:3,0:4 --trace");
    CHECK(traced.code == 1);
    CHECK(traced.out ==
          "init: -> middle {1:1,1:2} coker {0:3}\n"
          "step 1: replace 1:1 -> middle {0:4,1:2} coker {0:1}\n"
          "step 2: replace 1:2 -> middle {0:3,0:4^2} coker {0:1,0:2}\n"
          "NO: requires (0,4)^2, U provides 1\n");
}

TEST_CASE("closed by word and by excluded set") {
    std::string input = data("k22.q");
    RunResult closed = run("closed " + input + " --word \"2 3 2\"");
    CHECK(closed.code == 0);
    CHECK(closed.out == "closed\n");

    RunResult open = run("closed " + input + " --word \"3 2 3\"");
    CHECK(open.code == 1);
    CHECK(open.out == "not closed: (1,3) embeds into (0,4),(1,1)\n");

    RunResult byset = run("closed " + input + " --excluded 0:3,1:1,1:3");
    CHECK(byset.code == 1);
    CHECK(byset.out == "not closed: (1,3) embeds into (0,4),(1,2)\n");

    RunResult empty_word = run("closed " + input + " --word \"\"");
    CHECK(empty_word.code == 0);
    CHECK(empty_word.out == "closed\n");

    CHECK(run("closed " + input, true).code == 2);
    CHECK(run("closed " + input + " --word \"1\" --excluded 0:1", true).code == 2);
}

TEST_CASE("enumerate lists the table") {
    RunResult r = run("enumerate " + data("a2.q") + " --max-len 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "- -> -\n"
          "1 -> 0:1\n"
          "2 -> 0:2\n"
          "1 2 -> 0:1,0:2\n"
          "2 1 -> 0:2,1:1\n"
          "1 2 1 -> 0:1,0:2,1:1\n");
    // Finite type sweeps the whole group even past the requested bound.
    CHECK(run("enumerate " + data("a2.q") + " --max-len 0").out == r.out);
}

TEST_CASE("enumerate verifies the correspondence") {
    RunResult r = run("enumerate " + data("a2.q") + " --max-len 2 --verify");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "words checked: 15\n"
          "dropped: 8\n"
          "leftmost: 6\n"
          "closed: 6\n"
          "weyl group size: 6\n"
          "ok\n");

    RunResult kr = run("enumerate " + data("kronecker.q") + " --max-len 4 --verify");
    CHECK(kr.code == 0);
    CHECK(kr.out ==
          "words checked: 31\n"
          "dropped: 0\n"
          "leftmost: 9\n"
          "closed: 9\n"
          "ok\n");
}

TEST_CASE("grid exports") {
    RunResult dot = run("ar-dot " + data("a2.q") + " --slices 2");
    CHECK(dot.code == 0);
    CHECK(dot.out ==
          "digraph grid {\n"
          "  rankdir=RL;\n"
          "  node [shape=box];\n"
          "  \"0:1\" [label=\"0:1 [1,0]\"];\n"
          "  \"0:2\" [label=\"0:2 [1,1]\"];\n"
          "  \"1:1\" [label=\"1:1 [0,1]\"];\n"
          "  \"0:2\" -> \"0:1\" [label=\"1\"];\n"
          "  \"1:1\" -> \"0:2\" [label=\"1\"];\n"
          "}\n");

    RunResult dims = run("dims " + data("k22.q") + " --slices 2");
    CHECK(dims.code == 0);
    CHECK(dims.out ==
          "0:1 (1,0,0,0)\n"
          "0:2 (0,1,0,0)\n"
          "0:3 (1,1,1,0)\n"
          "0:4 (1,1,0,1)\n"
          "1:1 (1,2,1,1)\n"
          "1:2 (2,1,1,1)\n"
          "1:3 (2,2,1,2)\n"
          "1:4 (2,2,2,1)\n");

    RunResult valued = run("dims " + data("b2.cartan") + " --slices 1", true);
    CHECK(valued.code == 2);
    CHECK(mentions(valued.out, "dimension vectors need quiver input"));
}

TEST_CASE("oracle check") {
    RunResult a2 = run("oracle-check " + data("a2.q"));
    CHECK(a2.code == 0);
    CHECK(a2.out == "indecomposables: 3\nsubsets: 8\nclosed: 6\nagreement: 8/8\n");

    RunResult a3 = run("oracle-check " + data("a3.q"));
    CHECK(a3.code == 0);
    CHECK(a3.out == "indecomposables: 6\nsubsets: 64\nclosed: 24\nagreement: 64/64\n");

    RunResult wild = run("oracle-check " + data("k22.q"), true);
    CHECK(wild.code == 2);
}

} // TEST_SUITE("subcommands")

TEST_SUITE("failure modes") {

TEST_CASE("bad inputs exit with 2 and a message") {
    RunResult missing = run("coxmat /nonexistent/thing.q", true);
    CHECK(missing.code == 2);
    CHECK(mentions(missing.out, "error: "));
    CHECK(mentions(missing.out, "cannot open input file"));

    RunResult letter = run("rho " + data("a2.q") + " --word \"5\"", true);
    CHECK(letter.code == 2);
    CHECK(mentions(letter.out, "error: "));

    CHECK(run("frobnicate " + data("a2.q"), true).code == 2);
    CHECK(run("rho " + data("a2.q") + " --word 1 --wat", true).code == 2);
    CHECK(run("", true).code == 2);

    RunResult neg = run("enumerate " + data("a2.q") + " --max-len -1", true);
    CHECK(neg.code == 2);
    CHECK(mentions(neg.out, "nonnegative"));
}

TEST_CASE("help is not an error") {
    RunResult help = run("--help");
    CHECK(help.code == 0);
    CHECK(mentions(help.out, "Usage"));
    CHECK(mentions(help.out, "coxmat"));
}

} // TEST_SUITE("failure modes")

TEST_SUITE("structured output") {

TEST_CASE("json mirrors the text verdicts over a randomized sample") {
    std::mt19937 rng(123456);
    std::uniform_int_distribution<int> letter(1, 4), len(0, 6), row(0, 2), mult(1, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    std::string input = data("k22.q");

    auto random_word = [&] {
        std::string w;
        int l = len(rng);
        for (int k = 0; k < l; ++k) w += (k ? " " : "") + std::to_string(letter(rng));
        return w;
    };
    auto random_multiset = [&] {
        std::string m;
        int l = len(rng) / 2 + 1;
        for (int k = 0; k < l; ++k) {
            m += (k ? "," : "") + std::to_string(row(rng)) + ":" + std::to_string(letter(rng));
            int c = mult(rng);
            if (c > 1) m += "^" + std::to_string(c);
        }
        return m;
    };

    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::string args;
        std::string verdict_key;
        switch (kind(rng)) {
        case 0: args = "rho " + input + " --word \"" + random_word() + "\""; break;
        case 1:
            args = "cmp " + input + " --w1 \"" + random_word() + "\" --w2 \"" + random_word() +
                   "\"";
            break;
        case 2:
            args = "reduced " + input + " --word \"" + random_word() + "\"";
            verdict_key = "reduced";
            break;
        case 3: args = "leftmost " + input + " --word \"" + random_word() + "\""; break;
        case 4:
            args = "embed " + input + " --m " + random_multiset() + " --u " + random_multiset();
            verdict_key = "embeds";
            break;
        default: {
            // Excluded sets come from words so they are always well-formed.
            args = "closed " + input + " --word \"" + random_word() + "\"";
            verdict_key = "closed";
            break;
        }
        }
        CAPTURE(args);
        RunResult text = run(args);
        RunResult structured = run(args + " --json");
        CHECK(text.code == structured.code);
        json j = json::parse(structured.out, nullptr, false);
        REQUIRE_FALSE(j.is_discarded());
        if (!verdict_key.empty()) {
            REQUIRE(j.contains(verdict_key));
            CHECK(j[verdict_key].get<bool>() == (text.code == 0));
        }
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("json payloads carry the same data as the text") {
    RunResult r = run("embed " + data("k22.q") + " --m 1:3 --u 0:2,0:3,0:4 --trace --json");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["embeds"] == false);
    CHECK(j["witness"]["r"] == 0);
    CHECK(j["witness"]["i"] == 4);
    CHECK(j["required"] == 2);
    CHECK(j["available"] == 1);
    REQUIRE(j["trace"].size() == 3);
    CHECK(j["trace"][0]["middle"].size() == 2);

    json lm = json::parse(run("leftmost " + data("k22.q") + " --word \"3 2 3\" --json").out);
    CHECK(lm["leftmost"] == json::array({2, 3, 2}));
    CHECK(lm["already_leftmost"] == false);

    json cox = json::parse(run("coxmat " + data("kronecker.q") + " --json").out);
    CHECK(cox["coxeter"][0][1] == "inf");
    CHECK(cox["coxeter"][0][0] == 1);

    json en = json::parse(run("enumerate " + data("a2.q") + " --max-len 3 --json").out);
    CHECK(en["ok"] == true);
    CHECK(en["weyl_size"] == 6);
    CHECK(en["table"].size() == 6);

    json dot = json::parse(run("ar-dot " + data("a2.q") + " --slices 1 --json").out);
    CHECK(dot["slices"] == 1);
    CHECK(mentions(dot["dot"].get<std::string>(), "digraph grid"));
}

} // TEST_SUITE("structured output")
