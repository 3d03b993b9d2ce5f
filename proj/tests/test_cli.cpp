#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli_support.hpp"

using lapspec::testing::run_cli;
using nlohmann::json;

TEST_CASE("gen") {
  CHECK(run_cli({"gen", "complete", "3"}).out == "3\n1 2\n1 3\n2 3\n");
  CHECK(run_cli({"gen", "threshold", "IID"}).out == "4\n1 4\n2 4\n3 4\n");
  CHECK(run_cli({"gen", "kxx-minus-matching", "2"}).out == "4\n1 4\n2 3\n");
  CHECK(run_cli({"gen", "multipartite", "2,2"}).out == "4\n1 3\n1 4\n2 3\n2 4\n");
  CHECK(run_cli({"gen", "complete", "2", "--format", "json"}).out == "{\"n\":2,\"edges\":[[1,2]]}\n");

  CHECK(run_cli({"gen", "complete", "0"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"gen", "complete", "x"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"gen", "wheel", "5"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"gen", "threshold", "IXD"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"gen", "multipartite", "2,0"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"gen"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"frobnicate"}).status == lapspec::cli::kUsageError);
}

TEST_CASE("charpoly from every input source") {
  CHECK(run_cli({"charpoly", "complete", "3"}).out == "0 -9 6 -1\n");
  CHECK(run_cli({"charpoly", "-"}, "3\n1 2\n1 3\n2 3\n").out == "0 -9 6 -1\n");
  CHECK(run_cli({"charpoly", "-"}, "1\n").out == "0 -1\n");
  CHECK(run_cli({"charpoly", "-"}, "2\n").out == "0 0 1\n");
  CHECK(run_cli({"charpoly", "--pretty", "-"}, "2\n1 2\n").out == "-2*x + x^2\n");

  const auto path = std::filesystem::temp_directory_path() / "lapspec_cli_test_graph.txt";
  {
    std::ofstream f(path);
    f << "3\n1 2\n2 3\n";
  }
  CHECK(run_cli({"charpoly", path.string()}).out == "0 -3 4 -1\n");
  {
    std::ofstream f(path);
    f << "3\n1 2\n2 2\n";
  }
  const auto bad = run_cli({"charpoly", path.string()});
  CHECK(bad.status == lapspec::cli::kUsageError);
  CHECK(bad.err.find("line 3") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run_cli({"charpoly", "/nonexistent/graph.txt"}).status == lapspec::cli::kUsageError);
  const auto loop = run_cli({"charpoly", "-"}, "2\n1 1\n");
  CHECK(loop.status == lapspec::cli::kUsageError);
  CHECK(loop.err.find("line 2") != std::string::npos);

  const json doc = json::parse(run_cli({"charpoly", "complete", "3", "--format", "json"}).out);
  CHECK(lapspec::testing::valid_charpoly_record(doc));
  CHECK(doc["coefficients"] == json({"0", "-9", "6", "-1"}));
}

TEST_CASE("spectrum accepts only families") {
  CHECK(run_cli({"spectrum", "complete", "5"}).out == "0^1 5^4\n");
  CHECK(run_cli({"spectrum", "kxx-minus-matching", "5"}).out == "0^1 3^4 5^4 8^1\n");
  CHECK(run_cli({"spectrum", "threshold", "IID"}).out == "0^1 1^2 4^1\n");
  CHECK(run_cli({"spectrum", "multipartite", "3,2"}).out == "0^1 2^2 3^1 5^1\n");
  const auto general = run_cli({"spectrum", "-"}, "3\n1 2\n");
  CHECK(general.status == lapspec::cli::kUsageError);
  CHECK(general.err.find("charpoly") != std::string::npos);
  CHECK(run_cli({"spectrum", "threshold", ""}).status == lapspec::cli::kUsageError);

  const json doc = json::parse(run_cli({"spectrum", "kxx-minus-matching", "5", "--format", "json"}).out);
  CHECK(lapspec::testing::valid_spectrum_record(doc));
  CHECK(doc["text"] == "0^1 3^4 5^4 8^1");
}

TEST_CASE("tau") {
  const auto report = run_cli({"tau", "complete", "4", "--method", "all"});
  CHECK(report.status == 0);
  CHECK(report.out ==
        "n           4\n"
        "edges       6\n"
        "cofactor    16\n"
        "rankone     16\n"
        "charpoly    16\n"
        "bruteforce  16\n"
        "agreement   true\n");
  CHECK(run_cli({"tau", "--method", "charpoly", "-"}, "3\n1 2\n2 3\n").out == "1\n");
  CHECK(run_cli({"tau", "--method", "cofactor", "--row", "2", "--col", "3", "complete", "5"}).out == "125\n");
  CHECK(run_cli({"tau", "--method", "rankone", "--u", "1,0,0,0", "--v", "2,-1,0,0", "complete", "4"}).out == "16\n");

  const auto refused = run_cli({"tau", "--method", "bruteforce", "complete", "8"});
  CHECK(refused.status == lapspec::cli::kUsageError);
  CHECK(refused.err.find("24") != std::string::npos);
  CHECK(run_cli({"tau", "--method", "rankone", "--u", "1,-1,0", "complete", "3"}).status ==
        lapspec::cli::kUsageError);
  CHECK(run_cli({"tau", "--method", "rankone", "--u", "1,1", "complete", "3"}).status == lapspec::cli::kUsageError);
  CHECK(run_cli({"tau", "--method", "charpoly", "--u", "1,1,1", "complete", "3"}).status ==
        lapspec::cli::kUsageError);
  CHECK(run_cli({"tau", "--method", "nope", "complete", "3"}).status == lapspec::cli::kUsageError);

  const json all = json::parse(run_cli({"tau", "complete", "4", "--format", "json"}).out);
  CHECK(lapspec::testing::valid_tau_report(all));
  CHECK(all["methods"]["bruteforce"] == "16");
  CHECK(all["agreement"] == true);

  const json skipped = json::parse(run_cli({"tau", "complete", "8", "--format", "json"}).out);
  CHECK(lapspec::testing::valid_tau_report(skipped));
  CHECK(skipped["methods"]["bruteforce"].is_null());
  CHECK(skipped["methods"]["charpoly"] == "262144");
}

TEST_CASE("gen output pipes into charpoly and tau") {
  const std::string edges = run_cli({"gen", "kxx-minus-matching", "5"}).out;
  CHECK(run_cli({"tau", "-", "--method", "charpoly"}, edges).out == "40500\n");
  CHECK(run_cli({"charpoly", "-"}, run_cli({"gen", "complete", "3"}).out).out == "0 -9 6 -1\n");
}

TEST_CASE("verify is deterministic and reports the seed") {
  const auto first = run_cli({"verify", "thm1", "--seed", "1", "--trials", "100"});
  const auto second = run_cli({"verify", "thm1", "--seed", "1", "--trials", "100"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("seed 1\n", 0) == 0);
  CHECK(first.out.find("thm1        PASS  100 checks") != std::string::npos);

  CHECK(run_cli({"verify", "families"}).status == 0);
  CHECK(run_cli({"verify", "merris-hk"}).status == 0);
  CHECK(run_cli({"verify", "bogus"}).status == lapspec::cli::kUsageError);

  const json doc = json::parse(run_cli({"verify", "eq3", "--format", "json"}).out);
  CHECK(lapspec::testing::valid_verify_record(doc));
  CHECK(doc["suites"][0]["checks"] == 294);
}

TEST_CASE("-o writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "lapspec_cli_test_out.txt";
  CHECK(run_cli({"gen", "complete", "3", "-o", path.string()}).out.empty());
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text == "3\n1 2\n1 3\n2 3\n");
  std::filesystem::remove(path);
}
