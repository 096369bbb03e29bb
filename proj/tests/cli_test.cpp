#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "forest/engine.hpp"
#include "forest/graph6.hpp"
#include "forest/json_io.hpp"

using namespace forest;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "forestproc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"poly", "--family", "kst", "--s", "3", "--t", "3", "--t", "3"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"poly", "--g6", "C~", "--family", "kn", "--n", "4"}).code == 2);
  CHECK(invoke({"poly", "--family", "kst", "--s", "3"}).code == 2);
  CHECK(invoke({"poly", "--family", "kn", "--n", "4", "--format", "xml"}).code == 2);
  CHECK(invoke({"closed", "kn"}).code == 2);
  const Result help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("poly") != std::string::npos);
}

TEST_CASE("computation errors exit with 1") {
  const Result r = invoke({"poly", "--g6", "C"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("MalformedGraph6") != std::string::npos);
  CHECK(invoke({"poly", "--family", "cycle", "--n", "17"}).code == 1);
  CHECK(invoke({"poly", "--family", "kst", "--s", "3", "--t", "4", "--method", "brute"}).code == 1);
  CHECK(invoke({"poly", "--family", "cycle", "--n", "5", "--method", "closed"}).code == 1);
}

TEST_CASE("poly output") {
  const Result r = invoke({"poly", "--family", "multipartite", "--parts", "3,3,3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\":9,\"m\":27,\"probs\":{\"1\":\"1992/26125\",\"2\":\"11724/26125\",\"3\":\"10951/26125\",\"4\":"
        "\"1458/26125\"}}\n");
  CHECK(invoke({"poly", "--g6", "C~", "--format", "text"}).out == "4/5 x + 1/5 x^2\n");
  CHECK(invoke({"poly", "--family", "kn", "--n", "4", "--method", "closed", "--format", "text"}).out ==
        "4/5 x + 1/5 x^2\n");
  CHECK(invoke({"poly", "--family", "path", "--n", "4", "--method", "brute", "--format", "csv"}).out ==
        "k,probability\n1,2/3\n2,1/3\n");
  CHECK(invoke({"poly", "--family", "star", "--s", "3", "--method", "closed"}).out ==
        "{\"n\":4,\"m\":3,\"probs\":{\"1\":\"1/1\"}}\n");

  const std::string path = (std::filesystem::temp_directory_path() / "forestproc_cli_edges.txt").string();
  std::ofstream(path) << "4 4\n0 1\n1 2\n2 3\n3 0\n";
  CHECK(invoke({"one-comp", "--edges", path, "--format", "text"}).out == "2/3\n");
  CHECK(invoke({"poly", "--edges", "missing-file.txt"}).code == 2);
}

TEST_CASE("closed forms and scalar commands") {
  CHECK(invoke({"closed", "gnm-expect", "--n", "4", "--m", "6", "--format", "text"}).out == "6/5\n");
  CHECK(invoke({"closed", "gnm-bound", "--n", "3", "--m", "3", "--format", "text"}).out == "1/1\n");
  CHECK(invoke({"closed", "kst", "--s", "2", "--t", "3", "--format", "text"}).out == "1/2 x + 1/2 x^2\n");
  CHECK(invoke({"closed", "cycle1", "--n", "6"}).out == "{\"value\":\"2/15\"}\n");
  CHECK(invoke({"closed", "q", "--s", "2", "--t", "2", "--a", "2", "--b", "2", "--l", "1", "--format", "text"}).out ==
        "2/3\n");
  CHECK(invoke({"closed", "path", "--n", "3", "--format", "text"}).out == "2/3 x + 1/3 x^2\n");
  CHECK(invoke({"expect", "--family", "kst", "--s", "2", "--t", "2", "--format", "text"}).out == "4/3\n");
  CHECK(invoke({"cheeger", "--family", "kn", "--n", "4", "--format", "text"}).out == "2/3\n");
  CHECK(invoke({"conjecture", "--k", "2", "--format", "text"}).out == "2\ttrue\n");
}

TEST_CASE("stochastic commands are reproducible") {
  const std::vector<std::string> sim{"simulate", "--family", "kst", "--s", "2", "--t", "2", "--trials", "5000",
                                     "--sim-seed", "3"};
  const Result a = invoke(sim);
  CHECK(a.code == 0);
  CHECK(a.out == invoke(sim).out);
  auto threaded = sim;
  threaded.insert(threaded.begin(), {"--threads", "3"});
  CHECK(invoke(threaded).out == a.out);
  const Json j = Json::parse(a.out);
  CHECK(j["trials"] == 5000);

  const std::vector<std::string> decay{"decay", "--d", "3", "--n-values", "6,8", "--trials", "2000", "--format",
                                       "csv"};
  const Result d = invoke(decay);
  CHECK(d.code == 0);
  CHECK(lines(d.out).size() == 3);
  CHECK(lines(d.out)[0] == "n,p1_hat,neg_log_p1_over_n,cheeger");
  CHECK(d.out == invoke(decay).out);

  const Result g = invoke({"gnm-sim", "--n", "5", "--m", "1", "--graphs", "10", "--orderings", "2"});
  CHECK(Json::parse(g.out)["mean"] == 1.0);
}

TEST_CASE("search output") {
  const Result pairs = invoke({"search", "pairs", "--n", "4"});
  CHECK(pairs.code == 0);
  for (const auto& line : lines(pairs.out)) {
    const Json j = Json::parse(line);
    const auto shared = distribution_from_json(j["shared_polynomial"]);
    CHECK(same_polynomial(forest_polynomial(parse_graph6(j["graph6_a"].get<std::string>())), shared));
    CHECK(same_polynomial(forest_polynomial(parse_graph6(j["graph6_b"].get<std::string>())), shared));
  }
  CHECK(invoke({"search", "trees", "--n", "8"}).out.empty());
  CHECK(invoke({"search", "logconcave", "--max-n", "5"}).out.empty());
  CHECK(!invoke({"search", "twins", "--n", "6"}).out.empty());
}

TEST_CASE("tables round trip through the engine") {
  const Result r = invoke({"table", "small-graphs", "--max-n", "5"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 1 + 2 + 6 + 21);
  ForestEngine engine;
  for (const auto& row : rows) {
    const Json j = Json::parse(row);
    const Graph g = parse_graph6(j["graph6"].get<std::string>());
    CHECK(distribution_from_json(j["distribution"]) == engine.polynomial(g));
  }
  CHECK(r.out == invoke({"table", "small-graphs", "--max-n", "5"}).out);

  const Result trees = invoke({"table", "trees", "--max-n", "7", "--format", "text"});
  CHECK(lines(trees.out).size() == 1 + 1 + 2 + 3 + 6 + 11);
}
