#include <CLI11.hpp>

#include <iostream>

#include "troprank/cli.hpp"
#include "troprank/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Rate alternatives from pairwise comparison matrices"};

  std::string scale = "mult";
  std::string backend = "exact";
  std::string normalize = "none";
  std::string format = "text";
  std::string labels;
  std::string constraints;
  std::vector<std::string> inputs;

  app.add_option("inputs", inputs, "Comparison matrix files (CSV or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--scale", scale, "mult (max-times) or add (max-plus)")
      ->check(CLI::IsMember({"mult", "add"}));
  app.add_option("--backend", backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--constraints", constraints, "Constraint matrix file")
      ->check(CLI::ExistingFile);
  app.add_option("--normalize", normalize, "sum, max or none")
      ->check(CLI::IsMember({"sum", "max", "none"}));
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--labels", labels, "Comma-separated alternative names");

  CLI11_PARSE(app, argc, argv);

  troprank::cli::RunConfig config;
  try {
    config.scale = troprank::parse_semifield_kind(scale);
    config.backend = troprank::parse_backend(backend);
    config.normalize = troprank::cli::parse_normalize(normalize);
    config.format = troprank::cli::parse_format(format);
  } catch (const troprank::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  config.inputs = inputs;
  if (!constraints.empty()) config.constraints_path = constraints;
  if (!labels.empty()) {
    std::string cur;
    for (char ch : labels) {
      if (ch == ',') {
        config.labels.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    config.labels.push_back(cur);
  }
  return troprank::cli::run(config, std::cout, std::cerr);
}
