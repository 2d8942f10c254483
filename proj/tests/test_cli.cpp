#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "mzv/json_io.hpp"
#include "mzv/multizeta.hpp"

using namespace mzv;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("powersum output") {
  CHECK(invoke({"powersum", "--q", "2", "--d", "1", "--k", "1"}).out == "1/(t^2 + t)\n");
  CHECK(invoke({"powersum", "--q", "3", "--d", "1", "--k", "-2"}).out == "2\n");
  const Outcome brute = invoke({"powersum", "--q", "3", "--d", "2", "--k", "5", "--method", "brute"});
  const Outcome engine = invoke({"powersum", "--q", "3", "--d", "2", "--k", "5"});
  CHECK(brute.code == cli::kOk);
  CHECK(brute.out == engine.out);
  CHECK(invoke({"powersum", "--p", "2", "--s", "2", "--d", "1", "--k", "3", "--method", "special"}).code == cli::kOk);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"powersum", "--q", "2", "--d", "1"}).code == cli::kUsage);
  CHECK(invoke({"powersum", "--q", "6", "--d", "1", "--k", "1"}).code == cli::kUsage);
  CHECK(invoke({"powersum", "--q", "2", "--d", "1", "--k", "1", "--format", "xml"}).code == cli::kUsage);
  CHECK(invoke({"relation", "--q", "2", "--a", "0", "--b", "1"}).code == cli::kUsage);
  CHECK(invoke({"family", "--q", "2", "--id", "nope"}).code == cli::kUsage);
  const Outcome big = invoke({"powersum", "--q", "2", "--d", "30", "--k", "3"});
  CHECK(big.code == cli::kBudget);
  CHECK(big.err.find("budget") != std::string::npos);
  CHECK(invoke({"zeta", "--q", "2", "--indices", "1", "--prec", "100000000"}).code == cli::kBudget);
}

TEST_CASE("relation output") {
  const Outcome text = invoke({"relation", "--q", "2", "--a", "1", "--b", "2", "--verify", "1,2,3"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("depth 3: pass") != std::string::npos);

  const Outcome js = invoke({"relation", "--q", "3", "--a", "3", "--b", "2", "--format", "json"});
  REQUIRE(js.code == cli::kOk);
  const Json j = Json::parse(js.out);
  CHECK(j["pairs"] == Json::parse("[[2,3]]"));
  CHECK(j["parity"] == Json::parse("[true]"));
  const FieldCtx f3 = make_field(3, 1);
  CHECK(relation_from_json(j) == derive_relation(f3, 3, 2));

  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 9; ++b) {
      const Outcome o = invoke({"relation", "--q", "4", "--a", std::to_string(a), "--b", std::to_string(b), "--format", "json"});
      REQUIRE(o.code == cli::kOk);
      CHECK(relation_from_json(Json::parse(o.out)) == derive_relation(make_field(2, 2), a, b));
    }
  }
}

TEST_CASE("zeta output round-trips") {
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const FieldCtx f = make_field_for_order(q);
    const Outcome o = invoke({"zeta", "--q", std::to_string(q), "--indices", "1,2", "--prec", "12", "--format", "json"});
    REQUIRE(o.code == cli::kOk);
    const Json j = Json::parse(o.out);
    if (f.s() > 1) CHECK(j["coefficients"][0].is_array());
    CHECK(laurent_from_json(j, f) == zeta_trunc(f, {MZIndex{{1, 2}}, 12}));
    CHECK_THROWS_AS(laurent_from_json(j, make_field_for_order(q == 2 ? 3 : 2)), std::invalid_argument);
  }
}

TEST_CASE("family runs") {
  const Outcome a3 = invoke({"family", "--q", "2", "--id", "a3", "--b", "1..60"});
  CHECK(a3.code == cli::kOk);
  CHECK(lines_of(a3.out).size() == 60);
  CHECK(a3.out.find("fail") == std::string::npos);
  CHECK(invoke({"family", "--q", "5", "--id", "small", "--a", "3", "--b", "1..30"}).code == cli::kOk);
  CHECK(invoke({"family", "--q", "3", "--id", "negN", "--n", "1..3"}).code == cli::kOk);
  CHECK(invoke({"family", "--q", "2", "--id", "a3", "--b", "9..2"}).code == cli::kUsage);
}

TEST_CASE("table archive") {
  const auto dir = std::filesystem::temp_directory_path() / "mzv_test_cli";
  std::filesystem::create_directories(dir);
  const auto one = (dir / "one.jsonl").string(), many = (dir / "many.jsonl").string();
  REQUIRE(invoke({"table", "--q", "3", "--a-max", "20", "--b-max", "20", "--jobs", "1", "--out", one}).code == cli::kOk);
  REQUIRE(invoke({"table", "--q", "3", "--a-max", "20", "--b-max", "20", "--jobs", "4", "--out", many}).code == cli::kOk);
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string body = slurp(one);
  CHECK(body == slurp(many));
  const auto rows = lines_of(body);
  REQUIRE(rows.size() == 400);
  const FieldCtx f3 = make_field(3, 1);
  std::size_t k = 0;
  for (int a = 1; a <= 20; ++a) {
    for (int b = 1; b <= 20; ++b, ++k) {
      const RelationSet rel = relation_from_json(Json::parse(rows[k]));
      CHECK(rel.a == a);
      CHECK(rel.b == b);
      CHECK(rel.parity_ok());
    }
  }
  CHECK(relation_from_json(Json::parse(rows[7 * 20 + 4])) == derive_relation(f3, 8, 5));
  std::filesystem::remove_all(dir);
}
