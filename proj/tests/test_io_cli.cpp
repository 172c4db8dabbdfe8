#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "suboplex/cli.hpp"
#include "suboplex/io.hpp"

using namespace suboplex;

namespace {

std::string data(const std::string& name) { return std::string(SUBOPLEX_DATA_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

constexpr const char* kSumTable =
    "        0  1  2 3\n"
    "total: 10 17 10 2\n"
    "    4: 10 11  3 .\n"
    "    5:  .  6  7 2\n";

const std::vector<std::string> kBundled{"two_chains_poset.json",   "sum_poset.json", "sum_class.json",
                                        "sum_direct_sum.json", "sum_matrix.json", "sum_graph.json",
                                        "delta4_class.json", "triangle_square.json"};

}  // namespace

TEST_CASE("json loaders") {
    const LoadedInput poset = load_input(parse_json(R"({"n":2,"elements":["00","10","11"]})", "test"));
    REQUIRE(poset.poset.has_value());
    CHECK(poset.poset->size() == 3);

    const LoadedInput cls = load_input(parse_json(R"({"n":3,"functions":["100","010"]})", "test"));
    CHECK_FALSE(cls.poset.has_value());
    CHECK(cls.cls.size() == 2);

    const LoadedInput closed = load_input(parse_json(R"({"n":2,"functions":["00","10"]})", "test"));
    CHECK(closed.poset.has_value());

    const LoadedInput cube = build_input("cube:2");
    CHECK(cube.poset->size() == 10);

    CHECK_THROWS_AS(parse_json("{", "test"), ValidationError);
    CHECK_THROWS_AS(load_input(parse_json(R"({"n":3,"functions":["10"]})", "test")), ValidationError);
    CHECK_THROWS_AS(load_input(parse_json(R"({"n":2})", "test")), ValidationError);
    CHECK_THROWS_AS(load_input(parse_json(R"({"type":"uniform","k":5,"m":2})", "test")), ValidationError);
    CHECK_THROWS_AS(build_input("nothing:1"), ValidationError);
    CHECK_THROWS_AS(load_input_file(data("does_not_exist.json")), ValidationError);
}

TEST_CASE("round trips through json writers") {
    const LoadedInput in = load_input_file(data("sum_poset.json"));
    const LoadedInput poset_again = load_input(poset_to_json(*in.poset));
    CHECK(poset_again.cls == in.cls);
    const LoadedInput class_again = load_input(class_to_json(in.cls));
    CHECK(class_again.cls == in.cls);
    CHECK(poset_to_json(*in.poset).dump() == R"({"n":4,"elements":["0000","1000","0100","0010","0001","1100","1010","1001","0111","1111"]})");
}

TEST_CASE("worked example through the command line") {
    for (const char* file : {"sum_direct_sum.json", "sum_matrix.json", "sum_graph.json", "sum_poset.json"}) {
        const Run r = run({"betti", "--input", data(file), "--field", "2", "--format", "m2"});
        CHECK(r.code == 0);
        CHECK(r.out == kSumTable);
    }
    const std::string spec = R"(matroid:{"type":"direct_sum","parts":[{"type":"uniform","k":1,"m":1},{"type":"uniform","k":2,"m":3}]})";
    CHECK(run({"betti", "--build", spec, "--field", "2", "--format", "m2"}).out == kSumTable);
    CHECK(run({"vcdim", "--input", data("sum_class.json")}).out == "3\n");
    CHECK(run({"hdim", "--input", data("sum_class.json")}).out == "3\n");
    CHECK(run({"oracle", "reg", "--input", data("sum_class.json")}).out == "4\n");
    CHECK(run({"shatter", "--input", data("sum_class.json"), "--set", "1110"}).out == "shattered\n");
    CHECK(run({"shatter", "--input", data("sum_class.json"), "--set", "1111"}).out == "not shattered\n");
    CHECK(run({"extentures", "--input", data("sum_class.json")}).out == "*110\n*101\n*011\n");
    CHECK(run({"mobius", "--input", data("sum_poset.json"), "--lower", "0000", "--upper", "1111"}).out == "-2\n");
    CHECK(run({"vcdim", "--input", data("sum_class.json"), "--format", "json"}).out == "{\"vcdim\":3}\n");
}

TEST_CASE("check command") {
    const Run two_chains = run({"check", "--interval-cm", "--input", data("two_chains_poset.json")});
    CHECK(two_chains.code == 0);
    CHECK(two_chains.out == "interval-CM: yes; CM: no\n");
    const Run all = run({"check", "--input", data("sum_poset.json")});
    CHECK(all.out == "intersection-closed: yes\ninterval-CM: yes; CM: yes\nacyclic: yes\n");
    CHECK(run({"check", "--acyclic", "--exhaustive", "--input", data("sum_poset.json")}).out == "acyclic: yes\n");
    CHECK(run({"check", "--intersection-closed", "--input", data("delta4_class.json")}).out ==
          "intersection-closed: no\n");
}

TEST_CASE("betti and oracle betti agree on bundled examples") {
    for (const std::string& file : kBundled) {
        for (const char* field : {"2", "3", "Q"}) {
            const Run fast = run({"betti", "--input", data(file), "--field", field});
            const Run slow = run({"oracle", "betti", "--input", data(file), "--field", field});
            CHECK_MESSAGE(fast.code == 0, file);
            CHECK_MESSAGE(fast.out == slow.out, file);
        }
    }
}

TEST_CASE("output is deterministic and independent of thread count") {
    for (const std::string& file : kBundled) {
        const Run a = run({"betti", "--input", data(file), "--format", "json"});
        const Run b = run({"betti", "--input", data(file), "--format", "json"});
        const Run c = run({"betti", "--input", data(file), "--format", "json", "--threads", "4"});
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
    const Run cube = run({"betti", "--build", "cube:3", "--threads", "1"});
    CHECK(cube.out == run({"betti", "--build", "cube:3", "--threads", "6"}).out);
}

TEST_CASE("methods") {
    const std::string f = data("sum_poset.json");
    const Run intervals = run({"betti", "--input", f, "--method", "intervals"});
    CHECK(run({"betti", "--input", f, "--method", "mobius"}).out == intervals.out);
    CHECK(run({"betti", "--input", f, "--method", "oracle"}).out == intervals.out);
    CHECK(run({"vcdim", "--input", f, "--method", "brute"}).out == "3\n");
    CHECK(run({"vcdim", "--input", f, "--method", "closure"}).out == "3\n");
    CHECK(run({"vcdim", "--input", data("delta4_class.json"), "--method", "closure"}).code == kExitValidation);
    CHECK(run({"betti", "--input", data("delta4_class.json")}).code == kExitOk);
    CHECK(run({"betti", "--input", data("delta4_class.json"), "--method", "intervals"}).code == kExitValidation);
}

TEST_CASE("exit codes and messages") {
    const Run missing = run({"vcdim", "--input", data("does_not_exist.json")});
    CHECK(missing.code == kExitValidation);
    CHECK(missing.err.rfind("error: ", 0) == 0);
    CHECK(run({"vcdim", "--build", "cube:9"}).code == kExitValidation);
    CHECK(run({"betti", "--build", "cube:2", "--field", "4"}).code == kExitValidation);
    CHECK(run({"frobnicate"}).code == kExitValidation);
    CHECK(run({"vcdim"}).code == kExitValidation);
    CHECK(run({"vcdim", "--input", "a", "--build", "cube:2"}).code == kExitValidation);
    CHECK(run({"--help"}).code == kExitOk);
    const Run cap = run({"oracle", "betti", "--build", "cube:3"});
    CHECK(cap.code == kExitCap);
    CHECK(cap.err.rfind("error: ", 0) == 0);
    CHECK(run({"hdim", "--build", R"(formula:{"type":"kcnf","d":5,"k":1})"}).code == kExitCap);
}

TEST_CASE("default field from the environment") {
    ::setenv(kFieldEnvVar, "4", 1);
    CHECK(run({"hdim", "--build", "cube:2"}).code == kExitValidation);
    ::setenv(kFieldEnvVar, "Q", 1);
    CHECK(run({"hdim", "--build", "cube:2"}).out == "3\n");
    CHECK(run({"hdim", "--build", "cube:2", "--field", "2"}).out == "3\n");
    ::unsetenv(kFieldEnvVar);
    CHECK(run({"hdim", "--build", "cube:2"}).out == "3\n");
}

TEST_CASE("simplicial complex input") {
    const SimplicialComplex k = complex_from_json(parse_json(R"({"vertices":3,"facets":[[1,0],[1,2],[0,2]]})", "test"));
    CHECK(k.facets() == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(complex_from_json(parse_json(R"({"vertices":2,"facets":[[0,2]]})", "test")), ValidationError);
    CHECK_THROWS_AS(load_input_file(data("two_triangles_complex.json")), ValidationError);

    const Run all = run({"check", "--input", data("two_triangles_complex.json")});
    CHECK(all.code == 0);
    CHECK(all.out == "homology: H~[-1..2] = [0, 0, 0, 0]\nCM: no\n");
    CHECK(run({"check", "--cm", "--input", data("two_triangles_complex.json"), "--format", "json"}).out ==
          "{\"cm\":false}\n");
    CHECK(run({"check", "--acyclic", "--input", data("two_triangles_complex.json")}).code == kExitValidation);
}
