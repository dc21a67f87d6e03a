#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "weylmod/errors.hpp"
#include "weylmod/io.hpp"

#include "util.hpp"

using namespace weylmod;

namespace {

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

bool mentions(const std::string& message, const std::string& needle) {
    return message.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("input parsing") {

TEST_CASE("quiver description") {
    InputSpec in = parse_input_text("n 4\narrows: 1 3; 1 4; 2 3; 2 4\n", "test");
    CHECK(in.cartan == fixtures::k22());
    CHECK(in.valuation.empty());
}

TEST_CASE("comments, blank lines and trailing semicolons") {
    InputSpec in = parse_input_text(
        "# two columns\n\nn 2   # rank\narrows: 1 2; 1 2;  # doubled\n", "test");
    CHECK(in.cartan == fixtures::kronecker());
}

TEST_CASE("cartan matrix description") {
    InputSpec in = parse_input_text("cartan:\n2 -1\n-2 2\n", "test");
    CHECK(in.cartan == fixtures::b2_valued());
}

TEST_CASE("valuation quadruples ride along with a matrix") {
    InputSpec in = parse_input_text("cartan:\n2 -2\n-2 2\nvaluation: 1 2 4 1\n", "test");
    CHECK(in.cartan == fixtures::kronecker_valued());
    REQUIRE(in.valuation.size() == 1);
    CHECK(in.valuation[0].i == 1);
    CHECK(in.valuation[0].j == 2);
    CHECK(in.valuation[0].a_ij == 4);
    CHECK(in.valuation[0].a_ji == 1);
}

TEST_CASE("committed fixture files parse to the fixtures") {
    CHECK(parse_input_file(std::string(TEST_DATA_DIR) + "/k22.q").cartan == fixtures::k22());
    CHECK(parse_input_file(std::string(TEST_DATA_DIR) + "/a2.q").cartan == fixtures::a2());
    CHECK(parse_input_file(std::string(TEST_DATA_DIR) + "/a3.q").cartan == fixtures::a3());
    CHECK(parse_input_file(std::string(TEST_DATA_DIR) + "/kronecker.q").cartan ==
          fixtures::kronecker());
    CHECK(parse_input_file(std::string(TEST_DATA_DIR) + "/b2.cartan").cartan ==
          fixtures::b2_valued());
    InputSpec kv = parse_input_file(std::string(TEST_DATA_DIR) + "/kronecker_valued.cartan");
    CHECK(kv.cartan == fixtures::kronecker_valued());
    CHECK(kv.valuation.size() == 1);
}

TEST_CASE("missing files are reported") {
    std::string msg = thrown_message([] { parse_input_file("/nonexistent/x.q"); });
    CHECK(mentions(msg, "cannot open input file"));
}

TEST_CASE("errors carry the location") {
    std::string msg = thrown_message([] {
        parse_input_text("n 2\narrows: 1 2\narrows: 2 1\n", "file.q");
    });
    CHECK(mentions(msg, "file.q:3: "));
    CHECK(mentions(msg, "does not go from a smaller to a larger index"));

    msg = thrown_message([] { parse_input_text("n 2\narrows: 1 x\n", "f"); });
    CHECK(mentions(msg, "f:2: "));
    CHECK(mentions(msg, "expected an integer, got 'x'"));

    msg = thrown_message([] { parse_input_text("n 2\narrows: 1 5\n", "f"); });
    CHECK(mentions(msg, "outside 1..2"));

    msg = thrown_message([] { parse_input_text("n 2\narrows: 1\n", "f"); });
    CHECK(mentions(msg, "is not a 'src dst' pair"));
}

TEST_CASE("structural errors") {
    CHECK(mentions(thrown_message([] { parse_input_text("arrows: 1 2\n", "f"); }),
                   "needs a preceding 'n <count>' line"));
    CHECK(mentions(thrown_message([] { parse_input_text("", "f"); }),
                   "no 'n <count>' or 'cartan:' section"));
    CHECK(mentions(thrown_message([] { parse_input_text("hello\n", "f"); }),
                   "unrecognized directive 'hello'"));
    CHECK(mentions(thrown_message([] { parse_input_text("n 0\n", "f"); }),
                   "rank must be at least 1"));
    CHECK(mentions(
        thrown_message([] { parse_input_text("n 2\narrows: 1 2\ncartan:\n2\n", "f"); }),
        "mixes 'arrows:' and 'cartan:' sections"));
    CHECK(mentions(thrown_message([] { parse_input_text("n 2\narrows: 1 2\nvaluation: 1 2 1 2\n",
                                                        "f"); }),
                   "only meaningful for Cartan-matrix input"));
}

TEST_CASE("cartan table errors") {
    CHECK(mentions(thrown_message([] { parse_input_text("cartan:\n", "f"); }),
                   "'cartan:' has no rows"));
    CHECK(mentions(thrown_message([] { parse_input_text("cartan:\n2 -1\n", "f"); }),
                   "not square"));
    CHECK(mentions(thrown_message([] { parse_input_text("cartan:\n2 -1 0\n-1 2\n", "f"); }),
                   "expected 3"));
    CHECK(mentions(thrown_message([] { parse_input_text("n 3\ncartan:\n2 -1\n-1 2\n", "f"); }),
                   "the 'n' line says 3"));
    // Axiom violations from the matrix constructor keep the table location.
    std::string msg = thrown_message([] { parse_input_text("cartan:\n2 1\n1 2\n", "f"); });
    CHECK(mentions(msg, "f:1: "));
}

} // TEST_SUITE("input parsing")

TEST_SUITE("token parsing") {

TEST_CASE("words") {
    CHECK(parse_word("2 3 1 3 4 1") == Word{2, 3, 1, 3, 4, 1});
    CHECK(parse_word("") == Word{});
    CHECK(parse_word("  7  ") == Word{7});
    CHECK_THROWS_AS(parse_word("0"), InputError);
    CHECK_THROWS_AS(parse_word("1 x"), InputError);
}

TEST_CASE("vertices") {
    CHECK(parse_vertex("1:3") == Vertex{1, 3});
    CHECK(parse_vertex("0:12") == Vertex{0, 12});
    CHECK_THROWS_AS(parse_vertex("1"), InputError);
    CHECK_THROWS_AS(parse_vertex("1:2:3"), InputError);
    CHECK_THROWS_AS(parse_vertex("a:2"), InputError);
}

TEST_CASE("multisets") {
    ModMultiset m = parse_vertex_multiset("0:2,0:3,0:4^2");
    CHECK(m.count({0, 2}) == 1);
    CHECK(m.count({0, 3}) == 1);
    CHECK(m.count({0, 4}) == 2);
    CHECK(m.total() == 4);
    CHECK(parse_vertex_multiset("").empty());
    CHECK(parse_vertex_multiset(" 1:1 , 1:1 ").count({1, 1}) == 2);
    CHECK_THROWS_AS(parse_vertex_multiset("0:4^0"), InputError);
    CHECK_THROWS_AS(parse_vertex_multiset("0:4^x"), InputError);
}

TEST_CASE("sets") {
    std::set<Vertex> s = parse_vertex_set("0:3,1:1,1:3");
    CHECK(s == std::set<Vertex>{{0, 3}, {1, 1}, {1, 3}});
    CHECK(parse_vertex_set("").empty());
    CHECK(mentions(thrown_message([] { parse_vertex_set("0:3^2"); }),
                   "sets take each vertex once"));
    CHECK(mentions(thrown_message([] { parse_vertex_set("0:3,0:3"); }), "is repeated"));
}

} // TEST_SUITE("token parsing")

TEST_SUITE("exports") {

TEST_CASE("dimension table") {
    ARQuiver a2(fixtures::a2());
    CHECK(dims_table(a2, 2) == "0:1 (1,0)\n0:2 (1,1)\n1:1 (0,1)\n");
    CHECK(dims_table(a2, 1) == "0:1 (1,0)\n0:2 (1,1)\n");
    // Rows past the end of the grid contribute nothing.
    CHECK(dims_table(a2, 9) == dims_table(a2, 2));
    CHECK_THROWS_AS(dims_table(a2, 0), InputError);
    CHECK_THROWS_AS(dims_table(ARQuiver(fixtures::b2_valued()), 1), InputError);
}

TEST_CASE("grid graph snapshot") {
    ARQuiver a2(fixtures::a2());
    CHECK(dot_export(a2, 2) ==
          "digraph grid {\n"
          "  rankdir=RL;\n"
          "  node [shape=box];\n"
          "  \"0:1\" [label=\"0:1 [1,0]\"];\n"
          "  \"0:2\" [label=\"0:2 [1,1]\"];\n"
          "  \"1:1\" [label=\"1:1 [0,1]\"];\n"
          "  \"0:2\" -> \"0:1\" [label=\"1\"];\n"
          "  \"1:1\" -> \"0:2\" [label=\"1\"];\n"
          "}\n");
}

TEST_CASE("valued graphs carry both multiplicities on asymmetric edges") {
    ARQuiver b2(fixtures::b2_valued());
    std::string dot = dot_export(b2, 2);
    CHECK(mentions(dot, "\"1:1\" -> \"0:2\" [label=\"1,2\"]"));
    CHECK(mentions(dot, "\"1:2\" -> \"1:1\" [label=\"2,1\"]"));
    CHECK(mentions(dot, "\"0:2\" -> \"0:1\" [label=\"2,1\"]"));
    // No dimension labels without a quiver.
    CHECK(mentions(dot, "[label=\"0:1\"]"));
    CHECK_THROWS_AS(dot_export(b2, 0), InputError);
}

TEST_CASE("one slice yields nodes only") {
    std::string dot = dot_export(ARQuiver(fixtures::a2()), 1);
    CHECK(mentions(dot, "\"0:1\""));
    CHECK(mentions(dot, "\"0:2\""));
    CHECK_FALSE(mentions(dot, "->"));
    CHECK_FALSE(mentions(dot, "\"1:1\""));
}

} // TEST_SUITE("exports")
