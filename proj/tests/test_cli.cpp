#include <doctest.h>

#include "knotkit/cli.hpp"
#include "knotkit/gordian.hpp"
#include "knotkit/tangle.hpp"

using namespace knotkit::cli;

namespace {

CommandResult run(std::vector<std::string> args) { return dispatch(args); }

}  // namespace

TEST_CASE("golden outputs") {
  CommandResult r = run({"knot", "invariants", "3/1"});
  REQUIRE(r.exit_code() == 0);
  CHECK(r.payload_json ==
        R"({"class":"3/1","parity":"knot","h1":[3],"e2":1,"determinant":3})");

  CommandResult canon = run({"tangle", "canon", "0/1"});
  REQUIRE(canon.exit_code() == 0);
  CHECK(canon.payload_json == R"({"input":"0/1","cf":[0]})");

  CommandResult fam = run({"family", "kn", "--n", "1"});
  REQUIRE(fam.exit_code() == 0);
  CHECK(fam.payload_json ==
        R"({"n":1,"conway_coefficients":[1,0,0,0,-1,0,-1],"det_value":49})");

  CommandResult eval = run({"tangle", "eval", "[2,3,4]"});
  REQUIRE(eval.exit_code() == 0);
  CHECK(eval.payload_json == R"({"input":"[2,3,4]","fraction":"30/13"})");

  CommandResult unknot = run({"knot", "invariants", "1/1"});
  REQUIRE(unknot.exit_code() == 0);
  CHECK(unknot.payload_json ==
        R"({"class":"unknot","parity":"knot","h1":[],"e2":0,"determinant":1})");
}

TEST_CASE("identical argv yields byte-identical output") {
  const std::vector<std::vector<std::string>> cases = {
      {"knot", "invariants", "15/4"},
      {"knot", "classify", "-5/2"},
      {"gordian", "chain", "--move", "H2", "--m", "3"},
      {"gordian", "certify-end", "--move", "X", "--radius", "2"},
      {"ends", "estimate", "--family", "A", "--removal", "glue", "--R", "6",
       "--M", "6"},
      {"ends", "exact", "--family", "A"},
  };
  for (const auto& argv : cases) {
    CommandResult a = run(argv);
    CommandResult b = run(argv);
    REQUIRE(a.exit_code() == 0);
    CHECK(a.payload_json == b.payload_json);
    CHECK_FALSE(a.payload_json.empty());
  }
}

TEST_CASE("emitted strings re-parse to equal values") {
  using knotkit::gordian::SymbolicKnot;
  using knotkit::tangle::Fraction;

  CommandResult r = run({"knot", "witness", "3/1"});
  REQUIRE(r.exit_code() == 0);
  // witness_fraction is embedded in the JSON; re-parse the value
  const std::string needle = "\"witness_fraction\":\"";
  std::size_t at = r.payload_json.find(needle);
  REQUIRE(at != std::string::npos);
  std::size_t start = at + needle.size();
  std::size_t end = r.payload_json.find('"', start);
  Fraction parsed = Fraction::parse(r.payload_json.substr(start, end - start));
  CHECK(parsed == Fraction(5, 4));

  SymbolicKnot k = SymbolicKnot::parse("3/1#5/2");
  CHECK(SymbolicKnot::parse(k.str()) == k);
}

TEST_CASE("exit codes distinguish domain and usage faults") {
  CHECK(run({"tangle", "canon", "1/0"}).exit_code() == 1);   // no expansion
  CHECK(run({"knot", "invariants", "2/1"}).exit_code() == 1);  // link parity
  CHECK(run({"knot", "invariants", "x/y"}).exit_code() == 2);  // bad token
  CHECK(run({"nonsense"}).exit_code() == 2);
  CHECK(run({}).exit_code() == 2);
  CHECK(run({"knot"}).exit_code() == 2);  // missing verb

  CommandResult bad = run({"knot", "invariants", "x/y"});
  REQUIRE_FALSE(bad.diagnostics.empty());
  CHECK(bad.diagnostics.front().find("x/y") != std::string::npos);
}

TEST_CASE("gordian bound through the CLI") {
  CommandResult r =
      run({"gordian", "bound", "--move", "X", "--knot", "3/1#3/1", "--to",
           "unknot"});
  REQUIRE(r.exit_code() == 0);
  CHECK(r.payload_json.find("\"bound\":\"2\"") != std::string::npos);

  CommandResult half = run({"gordian", "bound", "--move", "Delta", "--knot",
                            "3/1#3/1#3/1", "--to", "unknot"});
  REQUIRE(half.exit_code() == 0);
  CHECK(half.payload_json.find("\"bound\":\"3/2\"") != std::string::npos);
  CHECK(half.payload_json.find("\"bound_ceil\":2") != std::string::npos);
}

TEST_CASE("text format flattens the payload") {
  CommandResult r = run({"--format", "text", "knot", "invariants", "3/1"});
  REQUIRE(r.exit_code() == 0);
  CHECK(r.payload_text.find("class: 3/1") != std::string::npos);
  CHECK(r.payload_text.find("determinant: 3") != std::string::npos);
}

TEST_CASE("certificates and avoidance run end to end") {
  CommandResult cert =
      run({"gordian", "certify-end", "--move", "r(3/1)", "--radius", "4"});
  REQUIRE(cert.exit_code() == 0);
  CHECK(cert.payload_json.find("\"pass\":true") != std::string::npos);

  CommandResult avoid = run({"gordian", "avoid", "--move", "H2",
                             "--forbid-prefix", "5"});
  REQUIRE(avoid.exit_code() == 0);
  CHECK(avoid.payload_json.find("\"pass\":true") != std::string::npos);

  CommandResult ends = run({"ends", "estimate", "--family", "zd", "--d", "2",
                            "--removal", "ball:3", "--R", "10", "--M", "10"});
  REQUIRE(ends.exit_code() == 0);
  CHECK(ends.payload_json.find("\"unbounded\":1") != std::string::npos);
}

TEST_CASE("large determinants are emitted as decimal strings") {
  CommandResult fam = run({"family", "kn", "--n", "30"});
  REQUIRE(fam.exit_code() == 0);
  CHECK(fam.payload_json.find("\"det_value\":\"13835058055282163713\"") !=
        std::string::npos);
}
