#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qclique/graph_io.hpp"
#include "qclique/runner.hpp"

namespace {

enum Exit { kPass = 0, kAuditFailure = 1, kConfigError = 2, kDataError = 3 };

qclique::cli::RunConfig load(const std::string& path) {
  if (path.empty()) return qclique::cli::parse_config(nlohmann::json::object());
  std::ifstream in(path);
  if (!in) throw qclique::cli::ConfigError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw qclique::cli::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return qclique::cli::parse_config(j);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw qclique::cli::ConfigError("cannot write '" + out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed APSP simulator"};
  app.require_subcommand(1);

  std::string configPath, outPath, mode;
  std::uint64_t seed = 0;
  bool strict = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", configPath, "JSON config file");
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--out", outPath, "write the report here instead of stdout");
    sub->add_option("--mode", mode, "quantum-sim | oracle-exhaustive")
        ->check(CLI::IsMember({"quantum-sim", "oracle-exhaustive"}));
    sub->add_flag("--strict", strict, "throw on the first bandwidth violation");
  };
  CLI::App* apsp = app.add_subcommand("apsp", "all-pairs shortest paths against Floyd-Warshall");
  CLI::App* findEdges = app.add_subcommand("find-edges", "pairs in negative triangles against brute force");
  CLI::App* verify = app.add_subcommand("verify", "randomized checks with pass rates");
  CLI::App* bench = app.add_subcommand("bench", "round counts per n as CSV");
  for (CLI::App* sub : {apsp, findEdges, verify, bench}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    qclique::cli::RunConfig config = load(configPath);
    for (CLI::App* sub : {apsp, findEdges, verify, bench})
      if (sub->parsed() && sub->count("--seed") > 0) config.seed = seed;
    if (!mode.empty()) config.mode = qclique::cli::parse_mode(mode);
    if (strict) config.net = qclique::NetMode::Strict;

    if (bench->parsed()) {
      const auto rows = qclique::cli::bench_rounds(config);
      emit(qclique::cli::bench_csv(rows), outPath);
      for (const auto& r : rows)
        if (r.aborted) return kAuditFailure;
      return kPass;
    }

    qclique::cli::Report rep;
    if (apsp->parsed()) rep = qclique::cli::run_apsp(config);
    else if (findEdges->parsed()) rep = qclique::cli::run_find_edges(config);
    else rep = qclique::cli::verify_lemmas(config);
    emit(qclique::cli::render(rep.json), outPath);
    if (rep.json.value("negativeCycle", false)) return kDataError;
    return rep.pass ? kPass : kAuditFailure;
  } catch (const qclique::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const qclique::ParseError& e) {
    std::cerr << "graph file error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kConfigError;
  }
}
