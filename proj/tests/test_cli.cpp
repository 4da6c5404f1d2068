#include <doctest.h>

#include <sstream>

#include "chowlab/cli.hpp"
#include "chowlab/json_io.hpp"

using namespace chowlab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("chow-poly and aug-chow-poly") {
    Run r = cli({"chow-poly", "--boolean", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + 4x + x^2\n");

    CHECK(cli({"chow-poly", "--boolean", "3", "--via-model"}).out == "1 + 4x + x^2\n");
    CHECK(cli({"aug-chow-poly", "--boolean", "2"}).out == "1 + 3x + x^2\n");
    CHECK(cli({"aug-chow-poly", "--uniform", "1", "1"}).out == "1 + x\n");

    Run j = cli({"--format", "json", "chow-poly", "--boolean", "3"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["coeffs"] == nlohmann::json({"1", "4", "1"}));

    CHECK(cli({"--format", "csv", "chow-poly", "--boolean", "3"}).out == "1 4 1\n");
}

TEST_CASE("euler subcommand") {
    Run r = cli({"euler", "--max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "A_1 = 1\nA_2 = 1 + x\n");
}

TEST_CASE("matroid info") {
    Run r = cli({"matroid", "info", "--uniform", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank: 2") != std::string::npos);
    CHECK(r.out.find("flats: 5") != std::string::npos);
    CHECK(r.out.find("coloops: none") != std::string::npos);

    Run j = cli({"--format", "json", "matroid", "info", "--boolean", "2"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["ground"] == 2);
    CHECK(parsed["r"] == 2);
    CHECK(parsed["flats"].size() == 4);
}

TEST_CASE("kls subcommand") {
    CHECK(cli({"kls", "--boolean", "3"}).out == "1\n");
    CHECK(cli({"kls", "--uniform", "3", "4"}).out == "1 + 2x\n");
    CHECK(cli({"kls", "--uniform", "3", "4", "--left"}).out == "1 + 2x\n");
}

TEST_CASE("verify exit codes and output") {
    Run r = cli({"verify", "--suite", "euler"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    Run j = cli({"--format", "json", "verify", "--suite", "coloop"});
    CHECK(j.code == 0);
    std::istringstream lines(j.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto parsed = nlohmann::json::parse(line);
        CHECK(parsed["pass"] == true);
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
    Run r = cli({"chow-poly"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    Run bad = cli({"matroid", "info", "--json", R"({"ground":2,"kind":"explicit",)"
                                                R"("flats":[[],[0],[0,1]]})"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("cover-partition") != std::string::npos);

    Run garbage = cli({"matroid", "info", "--json", "{not json"});
    CHECK(garbage.code == 2);

    Run unknown = cli({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("deterministic output") {
    Run a = cli({"verify", "--suite", "thm1", "--hilbert-bound", "4"});
    Run b = cli({"verify", "--suite", "thm1", "--hilbert-bound", "4"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("matroid json round trip") {
    Matroid m = uniform_matroid(2, 4);
    Matroid back = matroid_from_json(matroid_to_json(m));
    CHECK(back == m);
    CHECK(matroid_from_json(nlohmann::json{{"ground", 3}, {"kind", "boolean"}}) ==
          boolean_matroid(3));
    CHECK(matroid_from_json(nlohmann::json{{"ground", 3}, {"kind", "uniform"}, {"r", 2}}) ==
          uniform_matroid(2, 3));
}

TEST_CASE("poset json") {
    // chain 0 < 1 < 2 given by cover relations and one rank hint
    nlohmann::json j{{"elements", 3},
                     {"leq", {{0, 1}, {1, 2}}},
                     {"rank", {{0, 1, 1}, {1, 2, 1}}}};
    PosetPtr p = poset_from_json(j);
    CHECK(p->size() == 3);
    CHECK(p->leq(0, 2)); // closure
    CHECK(p->rank(0, 2) == 2);

    nlohmann::json cyc{{"elements", 2}, {"leq", {{0, 1}, {1, 0}}}, {"rank", {{0, 1, 1}}}};
    CHECK_THROWS_AS(poset_from_json(cyc), ValidationError);

    nlohmann::json under{{"elements", 2}, {"leq", {{0, 1}}}};
    CHECK_THROWS_AS(poset_from_json(under), ValidationError);

    // polynomial round trip
    IntPolynomial q({mpz_class(1), mpz_class(-2), mpz_class(7)});
    CHECK(poly_from_json(poly_to_json(q)) == q);
}
