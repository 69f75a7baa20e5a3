#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using lenscob::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::size_t lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("analyze text output") {
  const Result r = invoke({"analyze", "5", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "lens space: L(5,2)"));
  CHECK(contains(r.out, "boundary components: 3"));
  CHECK(contains(r.out, "a: [1, 0]"));
  CHECK(contains(r.out, "t: [-1, -7]"));
  CHECK(contains(r.out, "l1,2: -2"));
  CHECK(contains(r.out, "determinant: 1"));
  CHECK_FALSE(contains(r.out, "trace:"));

  const Result traced = invoke({"analyze", "5", "2", "--trace"});
  CHECK(traced.code == 0);
  CHECK(contains(traced.out, "trace:"));

  const Result two = invoke({"analyze", "7", "3"});
  CHECK(contains(two.out, "boundary components: 2"));
  CHECK(contains(two.out, "determinant: -1"));
}

TEST_CASE("analyze normalizes and reports special cases") {
  CHECK(contains(invoke({"analyze", "-5", "2"}).out, "L(5,3)"));
  CHECK(contains(invoke({"analyze", "5", "12"}).out, "L(5,2)"));

  const Result sphere = invoke({"analyze", "1", "0"});
  CHECK(sphere.code == 0);
  CHECK_FALSE(contains(sphere.out, "boundary components"));

  const Result special = invoke({"analyze", "0", "1", "--json"});
  CHECK(special.code == 0);
  CHECK(nlohmann::json::parse(special.out).contains("special"));
}

TEST_CASE("analyze exit codes") {
  CHECK(invoke({"analyze", "6", "2"}).code == 2);
  CHECK(invoke({"analyze", "5"}).code == 64);
  CHECK(invoke({"analyze", "5", "x"}).code == 64);
  CHECK(invoke({"analyze", "5", "2", "--cap", "0"}).code == 64);
  CHECK(invoke({"analyze", "5", "2", "--cap", "1"}).code == 3);
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("analyze --json emits a certificate") {
  CHECK_FALSE(nlohmann::json::parse(invoke({"analyze", "5", "2", "--json"}).out).contains("trace"));
  const Result r = invoke({"analyze", "5", "2", "--json", "--trace"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("p") == "5");
  CHECK(doc.at("det") == "1");
  CHECK(doc.at("valid") == true);
  CHECK(doc.at("trace").at("q_prime") == "7");
}

TEST_CASE("table output") {
  const Result small = invoke({"table", "2"});
  CHECK(small.code == 0);
  CHECK(small.out == "p\tq\tboundaries\tdet\n2\t1\t2\t1\n");

  // Rows: p=2:1, 3:2, 4:2, 5:4 => 9 rows plus header.
  const Result five = invoke({"table", "5"});
  CHECK(lines(five.out) == 10);
  CHECK(contains(five.out, "5\t2\t3\t1\n"));

  const Result summary = invoke({"table", "7", "--summary"});
  CHECK(contains(summary.out, "# summary\np\ttwo\tthree\n"));
  CHECK(contains(summary.out, "\n5\t2\t2\n"));
  CHECK(contains(summary.out, "\n7\t6\t0\n"));

  const Result jsonl = invoke({"table", "5", "--format", "jsonl"});
  CHECK(jsonl.code == 0);
  CHECK(lines(jsonl.out) == 9);
  std::istringstream rows(jsonl.out);
  for (std::string row; std::getline(rows, row);) {
    CHECK_NOTHROW((void)nlohmann::json::parse(row));
  }

  // Parallel and serial runs are byte-identical.
  CHECK(invoke({"table", "40", "--jobs", "4"}).out == invoke({"table", "40", "--jobs", "1"}).out);
  CHECK(invoke({"table", "5", "--format", "xml"}).code == 64);
}

TEST_CASE("verify round trip through stdin and files") {
  const Result cert = invoke({"analyze", "8", "3", "--json"});
  REQUIRE(cert.code == 0);
  const Result ok = invoke({"verify", "-"}, cert.out);
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "OK L(8,3)"));

  const auto path = std::filesystem::temp_directory_path() / "lenscob_test_cli_cert.json";
  {
    std::ofstream file(path);
    file << invoke({"analyze", "5", "2", "--json"}).out;
  }
  CHECK(invoke({"verify", path.string()}).code == 0);

  auto doc = nlohmann::json::parse(invoke({"analyze", "5", "2", "--json"}).out);
  doc["t"][1] = "-8";
  {
    std::ofstream file(path);
    file << doc.dump();
  }
  const Result tampered = invoke({"verify", path.string()});
  CHECK(tampered.code == 1);
  CHECK(contains(tampered.out, "INVALID"));

  const std::string text = cert.out;
  CHECK(invoke({"verify", "-"}, text.substr(0, text.size() / 2)).code == 65);
  CHECK(invoke({"verify", "-"}, "{}").code == 65);
  CHECK(invoke({"verify", "/nonexistent/cert.json"}).code == 65);
  CHECK(invoke({"verify"}).code == 64);
  std::filesystem::remove(path);
}

TEST_CASE("verify rejects a stored det that disagrees") {
  auto doc = nlohmann::json::parse(invoke({"analyze", "7", "3", "--json"}).out);
  doc["det"] = "1";
  CHECK(invoke({"verify", "-"}, doc.dump()).code == 1);
  doc = nlohmann::json::parse(invoke({"analyze", "7", "3", "--json"}).out);
  doc["valid"] = false;
  CHECK(invoke({"verify", "-"}, doc.dump()).code == 1);
}

TEST_CASE("hc subcommand") {
  CHECK(invoke({"hc", "7", "2", "23", "2"}).out == "hc <= 1\n");
  CHECK(invoke({"hc", "5", "2", "7", "2", "23", "2"}).out == "hc <= 2\n");
  const Result none = invoke({"hc", "5", "2", "7", "3"});
  CHECK(none.code == 0);
  CHECK(none.out == "no bound\n");
  CHECK(invoke({"hc", "5", "2", "7"}).code == 64);
  CHECK(invoke({"hc", "6", "2"}).code == 2);
}

TEST_CASE("oracle subcommands") {
  CHECK(invoke({"oracle", "qr", "2", "7"}).out == "true\n");
  CHECK(invoke({"oracle", "qr", "3", "7"}).out == "false\n");
  CHECK(invoke({"oracle", "n2", "7", "3"}).out == "a=3 t=-4\n");
  CHECK(invoke({"oracle", "n2", "5", "2"}).out == "none\n");
  CHECK(invoke({"oracle", "n3", "3", "1", "--box", "0"}).out == "none\n");
  const Result n3 = invoke({"oracle", "n3", "5", "2", "--box", "3"});
  CHECK(n3.code == 0);
  CHECK(contains(n3.out, "holes: 2"));
  CHECK(invoke({"oracle", "form", "-7", "2", "-1", "-7"}).out == "x=1 y=0\n");
  CHECK(invoke({"oracle", "form", "1", "0", "1", "3"}).out == "none\n");
  CHECK(invoke({"oracle", "n3", "5", "2", "--box", "99999"}).code == 64);
}
