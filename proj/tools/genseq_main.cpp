/*
 * Copyright 2026 The genseq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// genseq: command-line front end.
//
//   genseq build --config F [--out F]      run the construction, write F (JSON) and F.txt
//   genseq ideal --config F --sigma S      minimal monomial generators of the valuation ideal
//   genseq verify-example [--golden F]     rerun the shipped worked example against golden data
//
// Exit codes: 0 success, 1 golden mismatch, 2 configuration or usage error,
// 3 internal consistency error.

#include <genseq/example.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using genseq::Config;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kConsistency = 3;

struct Common {
  std::optional<std::size_t> max_t_index;
  std::optional<std::string> max_value;
  bool json = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-t-index", c.max_t_index, "Largest global T index to construct")->check(CLI::PositiveNumber);
  cmd->add_option("--max-value", c.max_value, "Stop before processing a T whose value exceeds this, e.g. \"40\"");
  cmd->add_flag("--json", c.json, "Print the JSON report instead of the text report");
  cmd->add_flag("--quiet", c.quiet, "Print nothing on success");
}

// Command-line bounds override the document.
Config apply_overrides(Config cfg, const Common& c) {
  if (c.max_t_index) cfg.bounds.max_t_index = *c.max_t_index;
  if (c.max_value) {
    try {
      genseq::parse_value(*c.max_value, genseq::make_basis(cfg.basis));
    } catch (const std::exception& e) {
      throw genseq::ConfigError(std::vector<genseq::ConfigDiagnostic>{{"--max-value", e.what()}});
    }
    cfg.bounds.max_value = *c.max_value;
  }
  return cfg;
}

void write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Runs `body`, mapping exceptions to exit codes with diagnostics on stderr.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const genseq::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const genseq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const genseq::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const genseq::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConsistency;
  }
}

int emit_report(const genseq::PipelineResult& run, const std::string& out_path, const Common& c) {
  std::string json = genseq::report_json(run).dump(2) + "\n";
  std::string text = genseq::report_text(run);
  if (!out_path.empty()) {
    write_atomically(out_path, json);
    write_atomically(out_path + ".txt", text);
  }
  if (!c.quiet) {
    if (c.json) {
      std::cout << json;
    } else if (out_path.empty()) {
      std::cout << text;
    } else {
      std::cout << "wrote " << out_path << " and " << out_path << ".txt\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating sequences of rank one valuations on k[x,y,z]"};
  app.require_subcommand(1);

  Common build_opts;
  std::string build_config, build_out;
  auto* build = app.add_subcommand("build", "Construct the jumping polynomials and write the report");
  build->add_option("--config", build_config, "Configuration document (JSON)")->required();
  build->add_option("--out", build_out, "Write the JSON report here and the text report to <out>.txt");
  add_common(build, build_opts);

  Common ideal_opts;
  std::string ideal_config, ideal_sigma;
  auto* ideal = app.add_subcommand("ideal", "Minimal monomial generators of the ideal of values >= sigma");
  ideal->add_option("--config", ideal_config, "Configuration document (JSON)")->required();
  ideal->add_option("--sigma", ideal_sigma, "Threshold value, e.g. \"2*sqrt(2)\"")->required();
  add_common(ideal, ideal_opts);

  Common verify_opts;
  std::string verify_golden, verify_out;
  auto* verify = app.add_subcommand("verify-example", "Rerun the shipped worked example and diff it against golden data");
  verify->add_option("--golden", verify_golden, "Alternative golden data file");
  verify->add_option("--out", verify_out, "Also write the JSON report here and the text report to <out>.txt");
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*build) {
    return guarded([&] {
      Config cfg = apply_overrides(genseq::load_config(build_config), build_opts);
      auto run = genseq::run_pipeline(cfg);
      return emit_report(*run, build_out, build_opts);
    });
  }

  if (*ideal) {
    return guarded([&] {
      Config cfg = apply_overrides(genseq::load_config(ideal_config), ideal_opts);
      auto model = genseq::build_model(cfg);
      genseq::Value sigma = genseq::parse_value(ideal_sigma, model->basis());
      genseq::JumpState state(model, cfg.bounds);
      state.build_p_chain();
      state.build_t_chain();
      genseq::IdealGenerators gens = genseq::ideal_generators(state, sigma);
      if (ideal_opts.quiet) return kOk;
      if (ideal_opts.json) {
        nlohmann::ordered_json j;
        j["sigma"] = genseq::value_json(sigma);
        j["complete"] = gens.complete;
        j["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : gens.members) {
          nlohmann::ordered_json e = genseq::pair_json(g);
          e["value"] = genseq::value_json(genseq::value_of(g, state.values()));
          j["generators"].push_back(std::move(e));
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sigma = " << sigma.to_string() << " (" << (gens.complete ? "complete" : "may be incomplete")
                  << ")\n";
        for (const auto& g : gens.members) {
          std::cout << "  " << g.to_string() << "  value " << genseq::value_of(g, state.values()).to_string() << "\n";
        }
      }
      return kOk;
    });
  }

  return guarded([&] {
    std::string golden_text(genseq::worked_example_golden_text());
    if (!verify_golden.empty()) {
      std::ifstream in(verify_golden, std::ios::binary);
      if (!in) throw genseq::UsageError("cannot read " + verify_golden);
      std::ostringstream ss;
      ss << in.rdbuf();
      golden_text = ss.str();
    }
    nlohmann::json golden;
    try {
      golden = nlohmann::json::parse(golden_text);
    } catch (const nlohmann::json::exception& e) {
      throw genseq::UsageError(std::string("golden data: ") + e.what());
    }
    Config cfg = apply_overrides(genseq::parse_config(genseq::worked_example_config_text()), verify_opts);
    auto run = genseq::run_pipeline(cfg);
    std::vector<std::string> diffs;
    try {
      diffs = genseq::compare_with_golden(*run, golden);
    } catch (const nlohmann::json::exception& e) {
      throw genseq::UsageError(std::string("golden data: ") + e.what());
    }
    if (!verify_out.empty() || verify_opts.json) {
      Common quiet_text = verify_opts;
      if (!verify_opts.json) quiet_text.quiet = true;
      emit_report(*run, verify_out, quiet_text);
    }
    if (!diffs.empty()) {
      std::cerr << "worked example differs from golden data in " << diffs.size() << " field(s):\n";
      for (const auto& d : diffs) std::cerr << "  " << d << "\n";
      return kMismatch;
    }
    if (!verify_opts.quiet && !verify_opts.json) std::cout << "worked example matches golden data\n";
    return kOk;
  });
}
