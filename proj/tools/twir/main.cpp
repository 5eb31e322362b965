// Copyright 2026 The twir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// twir: key-rate sweeps, session campaigns and verification suites.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twir/keyrate.hpp"
#include "twir/protocol.hpp"
#include "twir/report_json.hpp"
#include "twir/rng.hpp"
#include "twir/verification.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kIo = 1, kUsage = 2, kVerifyFailed = 3 };

struct Common {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
};

struct Header {
  std::vector<std::string> argv;
  std::uint64_t seed = 0;

  std::string csv() const {
    std::string s = "# twir " TWIR_VERSION "\n# argv:";
    for (const auto& a : argv) s += " " + a;
    return s + "\n# seed: " + std::to_string(seed) + "\n";
  }
  json to_json() const { return {{"tool", "twir"}, {"version", TWIR_VERSION}, {"argv", argv}, {"seed", seed}}; }
};

std::string g12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output path (default stdout)");
  sub->add_option("--seed", c.seed, "Master seed");
}

// Writes text to --out or stdout. Returns false on I/O failure.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  f.close();
  return static_cast<bool>(f);
}

twir::Protocol parse_protocol(const std::string& s) {
  return s == "bb84" ? twir::Protocol::kBb84 : twir::Protocol::kSixState;
}

// keyrate -------------------------------------------------------------------

struct KeyrateArgs {
  std::string protocol = "six-state";
  double emin = 0.0, emax = 0.35, step = 1e-3;
  std::string curves = "proposed,vollbrecht,bstep,oneway";
};

int cmd_keyrate(const KeyrateArgs& a, const Common& c, const Header& h) {
  std::vector<twir::Curve> curves;
  std::stringstream ss(a.curves);
  for (std::string name; std::getline(ss, name, ',');) {
    const auto cv = twir::parse_curve(name);
    if (!cv) {
      std::cerr << "keyrate: unknown curve '" << name << "'\n";
      return kUsage;
    }
    curves.push_back(*cv);
  }
  if (curves.empty() || !(a.step > 0.0) || a.emin < 0.0 || a.emax < a.emin || a.emax > 0.5) {
    std::cerr << "keyrate: need 0 <= emin <= emax <= 0.5, step > 0 and at least one curve\n";
    return kUsage;
  }
  const auto proto = parse_protocol(a.protocol);
  const auto rows = twir::sweep(a.emin, a.emax, a.step, proto);
  const bool bb84 = proto == twir::Protocol::kBb84;
  std::string text;
  if (c.format == "csv") {
    text = h.csv() + "e";
    for (auto cv : curves) text += "," + std::string(twir::curve_name(cv));
    if (bb84) text += ",p11_argmin";
    text += "\n";
    for (const auto& r : rows) {
      text += g12(r.e);
      for (auto cv : curves) text += "," + g12(r.clamped(cv));
      if (bb84) text += "," + g12(r.p11_argmin.value_or(0.0));
      text += "\n";
    }
  } else {
    json j = h.to_json();
    j["protocol"] = a.protocol;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(twir::to_json(r));
    text = j.dump(2) + "\n";
  }
  return emit(c.out, text) ? kOk : kIo;
}

// simulate ------------------------------------------------------------------

struct SimulateArgs {
  double e = 0.05;
  std::string protocol = "six-state";
  std::size_t n = 1000, trials = 1, m = 10000;
  double delta = 0.05, margin = 0.0, abort_tol = 0.02;
  std::string rate_basis = "nominal";
};

int cmd_simulate(const SimulateArgs& a, const Common& c, const Header& h) {
  const auto proto = parse_protocol(a.protocol);
  twir::SessionConfig cfg;
  try {
    cfg.channel = twir::channel_for_error(proto, a.e);
    cfg.protocol = proto;
    cfg.n = a.n;
    cfg.m = a.m;
    cfg.delta = a.delta;
    cfg.finite_size_margin = a.margin;
    cfg.abort_tolerance = a.abort_tol;
    cfg.code_rate_basis = a.rate_basis == "estimated" ? twir::RateBasis::kEstimated : twir::RateBasis::kNominal;
    cfg.validate();
  } catch (const std::exception& ex) {
    std::cerr << "simulate: " << ex.what() << "\n";
    return kUsage;
  }
  if (a.trials == 0) {
    std::cerr << "simulate: --trials must be >= 1\n";
    return kUsage;
  }
  twir::CodeCache cache;
  std::vector<twir::SessionReport> reports;
  reports.reserve(a.trials);
  for (std::size_t t = 0; t < a.trials; ++t) {
    cfg.seed = twir::derive_seed(c.seed, t);
    reports.push_back(twir::run_full_session(cfg, cache));
  }
  std::size_t ok = 0;
  double rate_sum = 0.0, leak_sum = 0.0;
  for (const auto& r : reports) {
    ok += !r.aborted && r.reconciliation_ok && r.key_match;
    rate_sum += r.empirical_key_rate;
    leak_sum += static_cast<double>(r.leak_bits) / (2.0 * static_cast<double>(r.n));
  }
  const double k = static_cast<double>(reports.size());
  const json summary = {{"trials", reports.size()},
                        {"success_fraction", ok / k},
                        {"mean_empirical_key_rate", rate_sum / k},
                        {"mean_leak_per_bit", leak_sum / k}};
  std::string text;
  if (c.format == "json") {
    json j = h.to_json();
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(twir::to_json(r));
    j["summary"] = summary;
    text = j.dump(2) + "\n";
  } else {
    text = h.csv() +
           "trial,seed,aborted,estimated_e,leak_bits,n0_hat,n0_in_bounds,t2_sent,reconciliation_ok,key_match,"
           "key_length,empirical_key_rate\n";
    for (std::size_t t = 0; t < reports.size(); ++t) {
      const auto& r = reports[t];
      text += std::to_string(t) + "," + std::to_string(r.seed) + "," + std::to_string(r.aborted) + "," +
              g12(r.estimated_e) + "," + std::to_string(r.leak_bits) + "," + std::to_string(r.n0_hat) + "," +
              std::to_string(r.n0_in_bounds) + "," + std::to_string(r.t2_sent) + "," +
              std::to_string(r.reconciliation_ok) + "," + std::to_string(r.key_match) + "," +
              std::to_string(r.key_alice.size()) + "," + g12(r.empirical_key_rate) + "\n";
    }
    text += "# success_fraction: " + g12(ok / k) + "\n# mean_empirical_key_rate: " + g12(rate_sum / k) +
            "\n# mean_leak_per_bit: " + g12(leak_sum / k) + "\n";
  }
  return emit(c.out, text) ? kOk : kIo;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t samples = 0;
};

std::size_t default_samples(const std::string& suite) {
  if (suite == "lemmas") return 200;
  if (suite == "coset") return 50;
  if (suite == "types") return 20;
  if (suite == "hash") return 8192;  // the whole seed family
  return 100;
}

int cmd_verify(const VerifyArgs& a, const Common& c, const Header& h) {
  std::vector<std::string> names = a.suite == "all" ? twir::suite_names() : std::vector<std::string>{a.suite};
  std::vector<twir::SuiteResult> results;
  for (const auto& name : names) {
    results.push_back(twir::run_suite(name, a.samples ? a.samples : default_samples(name), c.seed));
  }
  json failures = json::array();
  for (const auto& r : results) {
    for (const auto& x : r.assertions) {
      if (!x.passed) failures.push_back({{"suite", r.suite}, {"assertion", x.name}, {"max_deviation", x.max_deviation},
                                         {"tolerance", x.tolerance}});
    }
  }
  std::string text;
  if (c.format == "json") {
    json j = h.to_json();
    j["suites"] = json::array();
    for (const auto& r : results) {
      json s = {{"suite", r.suite}, {"passed", r.passed()}, {"assertions", json::array()}};
      for (const auto& x : r.assertions) {
        s["assertions"].push_back({{"name", x.name}, {"max_deviation", x.max_deviation}, {"tolerance", x.tolerance},
                                   {"passed", x.passed}});
      }
      j["suites"].push_back(s);
    }
    j["failures"] = failures;
    text = j.dump(2) + "\n";
  } else {
    text = h.csv() + "suite,assertion,max_deviation,tolerance,passed\n";
    for (const auto& r : results) {
      for (const auto& x : r.assertions) {
        text += r.suite + "," + x.name + "," + g12(x.max_deviation) + "," + g12(x.tolerance) + "," +
                (x.passed ? "1" : "0") + "\n";
      }
    }
  }
  if (!emit(c.out, text)) return kIo;
  if (!failures.empty()) {
    std::cerr << failures.dump() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twir: key rates, reconciliation sessions and verification suites"};
  app.set_version_flag("--version", TWIR_VERSION);
  app.require_subcommand(1);

  Common common;
  Header header;
  for (int i = 0; i < argc; ++i) header.argv.emplace_back(argv[i]);

  KeyrateArgs kr;
  auto* keyrate = app.add_subcommand("keyrate", "Sweep key-rate curves over an error grid");
  keyrate->add_option("--protocol", kr.protocol)->check(CLI::IsMember({"six-state", "bb84"}));
  keyrate->add_option("--emin", kr.emin);
  keyrate->add_option("--emax", kr.emax);
  keyrate->add_option("--step", kr.step);
  keyrate->add_option("--curves", kr.curves, "Comma-separated: proposed,first_arg,second_arg,vollbrecht,bstep,oneway");
  add_common(keyrate, common);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run seeded reconciliation sessions");
  simulate->add_option("--e", sim.e, "Channel error rate")->check(CLI::Range(0.0, 0.5));
  simulate->add_option("--protocol", sim.protocol)->check(CLI::IsMember({"six-state", "bb84"}));
  simulate->add_option("--n", sim.n, "Blocks per session (raw keys have 2n bits)");
  simulate->add_option("--trials", sim.trials);
  simulate->add_option("--m", sim.m, "Estimation sample size");
  simulate->add_option("--delta", sim.delta, "Code-rate margin");
  simulate->add_option("--margin", sim.margin, "Finite-size margin subtracted from the key rate");
  simulate->add_option("--abort-tol", sim.abort_tol, "Abort when the estimate is further than this from --e");
  simulate->add_option("--rate-basis", sim.rate_basis, "Channel used to size the codes")
      ->check(CLI::IsMember({"nominal", "estimated"}));
  add_common(simulate, common);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = twir::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", ver.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--samples", ver.samples, "Samples (hash: seeds); 0 means the suite default");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  header.seed = common.seed;
  try {
    if (*keyrate) return cmd_keyrate(kr, common, header);
    if (*simulate) return cmd_simulate(sim, common, header);
    return cmd_verify(ver, common, header);
  } catch (const std::invalid_argument& e) {
    std::cerr << "twir: " << e.what() << "\n";
    return kUsage;
  }
}
