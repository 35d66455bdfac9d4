#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fperfect::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json results_of(const Run& r) {
  REQUIRE(r.code == 0);
  return json::parse(r.out).at("results");
}

}  // namespace

TEST_CASE("search reports solutions and bounds as JSON") {
  Run r = run_cli({"--format", "json", "search", "--b", "3", "--limit", "30000"});
  json res = results_of(r);
  CHECK(res.at("a") == 2);
  CHECK(res.at("b") == 3);
  REQUIRE(res.at("solutions").size() == 3);
  CHECK(res.at("solutions")[0].at("n") == "10");
  CHECK(res.at("solutions")[1].at("n") == "65");
  CHECK(res.at("solutions")[2].at("n") == "20737");
  CHECK(res.at("solutions")[2].at("factors")[0].at("prime") == "89");
  CHECK(res.at("solutions")[2].at("factors")[1].at("prime") == "233");
  CHECK(res.at("bounds").at("three_prime_cutoff") == "1");
  json doc = json::parse(r.out);
  CHECK(doc.at("command") == "search");
  CHECK(doc.at("completeness") == "up-to-limit");
  CHECK(doc.at("config").at("limit") == "30000");
}

TEST_CASE("verify pins the landmark values") {
  Run r = run_cli({"--format", "json", "verify", "28"});
  json res = results_of(r);
  CHECK(res.at("f_perfect") == false);
  CHECK(res.at("sigma3").at("divisible") == false);
  CHECK(res.at("sigma3").at("classification") == "the-exception-28");

  r = run_cli({"--format", "json", "verify", "20737"});
  res = results_of(r);
  CHECK(res.at("f_perfect") == true);
  CHECK(res.at("sigma3").at("shape") == "semiprime-distinct");

  r = run_cli({"--format", "json", "verify", "496"});
  res = results_of(r);
  CHECK(res.at("sigma3").at("divisible") == true);
  CHECK(res.at("sigma3").at("classification") == "even-perfect");
}

TEST_CASE("certify emits twin-prime certificates") {
  Run r = run_cli({"--format", "json", "certify", "--max-k", "7"});
  json res = results_of(r);
  REQUIRE(res.at("certificates").size() == 3);
  CHECK(res.at("certificates")[0].at("k") == 2);
  CHECK(res.at("certificates")[1].at("k") == 3);
  CHECK(res.at("certificates")[2].at("k") == 6);
  CHECK(res.at("certificates")[2].at("n") == "20737");
  CHECK(res.at("certificates")[2].at("digits") == 5);
  CHECK(res.at("certificates")[2].at("lo_verdict") == "provable-prime");
  CHECK(res.at("certificates")[2].at("identity_checked") == true);
  CHECK(res.at("certificates")[2].at("direct_checked") == true);
}

TEST_CASE("continued fraction and Pell queries") {
  Run r = run_cli({"--format", "json", "cf", "13"});
  json res = results_of(r);
  CHECK(res.at("a0") == "3");
  CHECK(res.at("period") == json::array({"1", "1", "1", "1", "6"}));
  CHECK(res.at("period_length") == 5);

  r = run_cli({"--format", "json", "pell", "--neg", "13"});
  res = results_of(r);
  CHECK(res.at("solvable") == true);
  CHECK(res.at("fundamental").at("x") == "18");
  CHECK(res.at("fundamental").at("y") == "5");

  r = run_cli({"--format", "json", "pell", "--neg", "21"});
  res = results_of(r);
  CHECK(res.at("solvable") == false);
  CHECK(res.at("fundamental").is_null());

  r = run_cli({"--format", "json", "pell", "--neg4", "13"});
  res = results_of(r);
  CHECK(res.at("solvable") == true);
  CHECK(res.at("witness").at("x") == "36");
  CHECK(res.at("witness").at("y") == "10");

  r = run_cli({"--format", "json", "pell", "--neg4", "21"});
  res = results_of(r);
  CHECK(res.at("solvable") == false);
}

TEST_CASE("markov scan and certificates") {
  Run r = run_cli({"--format", "json", "markov", "--k", "3", "--bound", "100"});
  json res = results_of(r);
  REQUIRE(res.at("pairs").size() == 6);
  CHECK(res.at("pairs")[0] == json({{"x", "1"}, {"y", "1"}}));
  CHECK(res.at("pairs")[5] == json({{"x", "34"}, {"y", "89"}}));

  r = run_cli({"--format", "json", "markov", "--k", "7", "--certify"});
  json doc = json::parse(r.out);
  CHECK(doc.at("results").at("certificate") == "period-6");
  CHECK(doc.at("results").at("certified") == true);
  CHECK(doc.at("results").at("period_length") == 6);
  CHECK(doc.at("completeness") == "certified");

  r = run_cli({"--format", "json", "markov", "--k", "4", "--certify"});
  CHECK(json::parse(r.out).at("results").at("certificate") == "parity-mod-4");
}

TEST_CASE("sigma3 scans") {
  Run r = run_cli({"--format", "json", "sigma3", "scan", "--shape",
                   "semiprime", "--limit", "100000"});
  CHECK(results_of(r).at("solutions") == json::array({"6"}));

  r = run_cli({"--format", "json", "sigma3", "scan", "--shape", "2powp",
               "--limit", "10000"});
  json res = results_of(r);
  REQUIRE(res.at("solutions").size() == 3);
  CHECK(res.at("solutions")[1].at("n") == "496");
  CHECK(res.at("solutions")[1].at("classification") == "even-perfect");

  r = run_cli({"--format", "json", "sigma3", "scan", "--shape", "conjecture",
               "--limit", "100000"});
  res = results_of(r);
  CHECK(res.at("scanned") == 33759);
  CHECK(res.at("dividing") == json::array({"6", "496", "8128"}));
  CHECK(res.at("counterexamples") == json::array());
  CHECK(res.at("missing_perfect") == json::array());

  r = run_cli({"--format", "json", "sigma3", "scan", "--shape", "conjecture",
               "--limit", "100000", "--omega-mode", "multiplicity"});
  CHECK(results_of(r).at("dividing") == json::array({"6"}));
}

TEST_CASE("fibonacci queries") {
  Run r = run_cli({"--format", "json", "fib", "--index", "0"});
  json res = results_of(r);
  CHECK(res.at("fib") == "0");
  CHECK(res.at("lucas") == "2");

  r = run_cli({"--format", "json", "fib", "--is", "34"});
  res = results_of(r);
  CHECK(res.at("is_fibonacci") == true);
  CHECK(res.at("index") == 9);

  r = run_cli({"--format", "json", "fib", "--is", "35"});
  res = results_of(r);
  CHECK(res.at("is_fibonacci") == false);
  CHECK(res.at("index").is_null());
}

TEST_CASE("text format renders one fact per line") {
  Run r = run_cli({"search", "--b", "3", "--limit", "30000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("command: search") != std::string::npos);
  CHECK(r.out.find("n = 20737 = 89 * 233") != std::string::npos);
  CHECK(r.out.find("completeness: up-to-limit") != std::string::npos);

  r = run_cli({"--no-timing", "verify", "28"});
  CHECK(r.out.find("classification: the-exception-28") != std::string::npos);
  CHECK(r.out.find("elapsed: 0 ms") != std::string::npos);
}

TEST_CASE("usage problems exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"search"}).code == 2);                       // missing --b
  CHECK(run_cli({"verify"}).code == 2);                       // missing n
  CHECK(run_cli({"verify", "12a"}).code == 2);                // not a number
  CHECK(run_cli({"verify", "-5"}).code == 2);
  CHECK(run_cli({"--format", "yaml", "verify", "6"}).code == 2);
  CHECK(run_cli({"--threads", "0", "verify", "6"}).code == 2);
  CHECK(run_cli({"pell", "--neg", "13", "--neg4", "13"}).code == 2);
  CHECK(run_cli({"pell"}).code == 2);                         // neither form
  CHECK(run_cli({"fib"}).code == 2);
  CHECK(run_cli({"sigma3", "scan"}).code == 2);               // missing shape
  CHECK(run_cli({"markov", "--bound", "10"}).code == 2);      // missing k
  Run r = run_cli({"verify", "12a"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("domain violations exit 3") {
  CHECK(run_cli({"verify", "1"}).code == 3);
  CHECK(run_cli({"cf", "16"}).code == 3);
  CHECK(run_cli({"cf", "1"}).code == 3);
  CHECK(run_cli({"pell", "--neg4", "8"}).code == 3);
  CHECK(run_cli({"markov", "--k", "3", "--certify"}).code == 3);
  CHECK(run_cli({"search", "--b", "3", "--limit", "200000000"}).code == 3);
  Run r = run_cli({"cf", "16"});
  CHECK(r.err.find("domain error") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("help exits cleanly") {
  Run r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fperfect") != std::string::npos);
  CHECK(run_cli({"search", "--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> argv = {"--format", "json", "--no-timing",
                                   "--seed",   "42",   "certify",
                                   "--max-k",  "20"};
  Run a = run_cli(argv);
  Run b = run_cli(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  // thread count shapes execution, never bytes
  std::vector<std::string> scan = {"--format", "json", "--no-timing",
                                   "search",   "--b",  "3",
                                   "--limit",  "50000"};
  Run one = run_cli(scan);
  std::vector<std::string> scan8 = scan;
  scan8.insert(scan8.begin(), {"--threads", "8"});
  Run eight = run_cli(scan8);
  CHECK(one.out == eight.out);
}

TEST_CASE("thread count falls back to the environment") {
  setenv("FPERFECT_THREADS", "3", 1);
  Run r = run_cli({"--format", "json", "--no-timing", "fib", "--index", "10"});
  CHECK(r.code == 0);
  setenv("FPERFECT_THREADS", "junk", 1);
  CHECK(run_cli({"fib", "--index", "10"}).code == 2);
  setenv("FPERFECT_THREADS", "0", 1);
  CHECK(run_cli({"fib", "--index", "10"}).code == 2);
  unsetenv("FPERFECT_THREADS");
  CHECK(run_cli({"fib", "--index", "10"}).code == 0);
}
