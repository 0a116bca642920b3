// Copyright 2026 The wgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wgs: build graph states, run fusion protocols and scans, verify.
//
// Exit codes: 0 ok, 1 verification failure, 2 input validation, 3 numerical abort.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wgs/acceptance.hpp"
#include "wgs/fusion_protocols.hpp"
#include "wgs/graph_io.hpp"
#include "wgs/parallel.hpp"
#include "wgs/projection_analysis.hpp"

using json = nlohmann::json;
using namespace wgs;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kValidation = 2, kAbort = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NumericalAbort:
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::DegenerateGram:
    case ErrorKind::DegenerateArgument:
      return kAbort;
    default:
      return kValidation;
  }
}

struct Config {
  std::vector<std::string> graphs;
  std::string unitary;
  std::string out;
  std::string type = "i";
  std::string a, b;
  std::string quantity;
  int points = 50;
  int sample = 0;
  std::optional<std::uint64_t> seed;
  Real tol = 1e-10;
  Real chi = kPi / 2;
  std::optional<Real> chi2;
  bool quick = false;
  bool amplitudes = false;
  Real perturb = 0.0;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + cfg.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

ChainState load_chain(const std::string& path) {
  GraphDocument doc = load_graph(path);
  for (const auto& w : doc.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  ChainState c{doc.graph, canonical_state(doc.graph, doc.logical_pairs), doc.logical_pairs};
  validate_chain(c);
  return c;
}

int vertex(const ChainState& c, const std::string& label, const char* flag) {
  if (label.empty()) throw Error(ErrorKind::InvalidInput, std::string(flag) + " is required");
  return c.graph.index_of(label);
}

// ---------------------------------------------------------------- build

void cmd_build(const Config& cfg) {
  if (cfg.graphs.size() != 1) throw Error(ErrorKind::InvalidInput, "build takes exactly one --graph");
  GraphDocument doc = load_graph(cfg.graphs[0]);
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << '\n';
  const PureState s = canonical_state(doc.graph, doc.logical_pairs);
  json j;
  j["qubits"] = s.num_qubits();
  j["edges"] = doc.graph.edges().size();
  j["norm"] = s.norm();
  j["logical_pairs"] = doc.logical_pairs.size();
  j["warnings"] = doc.warnings;
  if (cfg.amplitudes) {
    j["amplitudes"] = json::array();
    for (Eigen::Index k = 0; k < s.amplitudes().size(); ++k) {
      j["amplitudes"].push_back({s.amplitudes()(k).real(), s.amplitudes()(k).imag()});
    }
  }
  emit(cfg, j.dump(2));
}

// ---------------------------------------------------------------- fuse

json generalized_report(const ChainState& left, int a, const ChainState& right, int b, const ModeUnitary& u) {
  const FusionContext ctx = make_fusion_context(left.state, a, right.state, b);
  json arr = json::array();
  for (const auto& o : fuse_generalized(left, a, right, b, u)) {
    json j{{"i", o.i}, {"j", o.j}, {"probability", o.probability}, {"relevant", o.relevant()}};
    if (o.register_state && o.relevant()) {
      const EntanglementReport r = entanglement_report(o.m_matrix, ctx.z);
      j["det_rho"] = r.det_rho;
      j["entropy_bits"] = r.entropy_bits;
    }
    arr.push_back(j);
  }
  return {{"z", {ctx.z.real(), ctx.z.imag()}}, {"outcomes", arr}};
}

void cmd_fuse(const Config& cfg) {
  if (cfg.graphs.size() != 2) throw Error(ErrorKind::InvalidInput, "fuse takes --graph LEFT --graph RIGHT");
  if (cfg.sample > 0 && !cfg.seed) throw Error(ErrorKind::InvalidInput, "--sample needs --seed");
  const ChainState left = load_chain(cfg.graphs[0]);
  const ChainState right = load_chain(cfg.graphs[1]);
  const int a = vertex(left, cfg.a, "--a");
  const int b = vertex(right, cfg.b, "--b");

  if (cfg.type == "gen") {
    if (cfg.unitary.empty()) throw Error(ErrorKind::InvalidInput, "--unitary is required for gen");
    const ModeUnitary u = parse_mode_unitary(read_text_file(cfg.unitary));
    emit(cfg, generalized_report(left, a, right, b, u).dump(2));
    return;
  }
  std::vector<ProtocolOutcome> outs;
  if (cfg.type == "i") {
    outs = fuse_type_i(left, a, right, b);
  } else if (cfg.type == "ii") {
    outs = fuse_type_ii(left, a, right, b);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown fusion type '" + cfg.type + "'");
  }
  json report{{"outcomes", json::parse(dump_outcomes(outs))}};
  if (cfg.sample > 0) {
    Rng rng(*cfg.seed);
    std::map<std::string, int> counts;
    for (const auto& o : outs) counts[o.label] = 0;
    for (int k = 0; k < cfg.sample; ++k) ++counts[outs[sample_outcome(outs, rng)].label];
    report["samples"] = counts;
  }
  emit(cfg, report.dump(2));
}

// ---------------------------------------------------------------- scan

struct Row {
  std::vector<Real> values;
};

std::string csv(const std::string& header, const std::vector<Row>& rows, Real tol) {
  std::ostringstream s;
  s.precision(17);
  s << header << ",ok\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.values.size(); ++k) s << (k ? "," : "") << r.values[k];
    s << ',' << (r.values.back() <= tol ? 1 : 0) << '\n';
  }
  return s.str();
}

// chi on (0, pi], n points, pi last.
Real grid_chi(int k, int n) { return kPi * (k + 1) / n; }

void cmd_scan(const Config& cfg) {
  if (cfg.points < 1) throw Error(ErrorKind::InvalidInput, "--points must be positive");
  const int n = cfg.points;
  std::vector<Row> rows(static_cast<std::size_t>(n));
  std::string header;
  const auto at = [&](long long k) -> Row& { return rows[static_cast<std::size_t>(k)]; };

  if (cfg.quantity == "logical-prob") {
    header = "chi,analytic,simulated,residual";
    parallel_for(n, [&](long long k) {
      const Real chi = grid_chi(static_cast<int>(k), n);
      WeightedGraph g({"c1", "b1", "a", "b2", "c2"});
      g.add_edge(0, 1, kPi / 3);
      g.add_edge(1, 2, chi);
      g.add_edge(2, 3, chi);
      g.add_edge(3, 4, -kPi / 5);
      const Real sim = create_logical_qubit(make_chain(g), 2).front().probability;
      const Real ana = (1 - std::cos(chi)) / 4;
      at(k) = {{chi, ana, sim, std::abs(sim - ana)}};
    });
  } else if (cfg.quantity == "failure-split") {
    header = "chi,analytic_plus_minus,simulated_plus_minus,analytic_minus_plus,simulated_minus_plus,residual";
    parallel_for(n, [&](long long k) {
      const Real chi = grid_chi(static_cast<int>(k), n);
      WeightedGraph g({"f", "b", "g"});
      g.add_edge(0, 1, chi);
      g.add_edge(1, 2, -chi);
      WeightedGraph l({"x", "a"});
      l.add_edge(0, 1, kPi);
      const auto outs = fuse_type_ii(add_logical_pair(make_chain(l), 1, "e"), 1, make_chain(g), 1);
      const Real re_z = (1 + std::cos(chi)) / 2;
      const Real p1 = outs[2].probability, p2 = outs[3].probability;
      const Real a1 = (1 - re_z) / 4, a2 = (1 + re_z) / 4;
      at(k) = {{chi, a1, p1, a2, p2, std::max(std::abs(p1 - a1), std::abs(p2 - a2))}};
    });
  } else if (cfg.quantity == "det-entropy") {
    header = "abs_z,analytic_det,dense_det,entropy_bits,residual";
    Rng rng(cfg.seed.value_or(1));
    const ModeUnitary u = balanced_unitary(rng);
    parallel_for(n, [&](long long k) {
      const Complex z = std::polar(0.95 * static_cast<Real>(k) / std::max(1, n - 1), cfg.chi);
      const FusionContext ctx = make_synthetic_context(z);
      const auto brute = oracle_enumerate(ctx, u);
      for (const auto& o : enumerate_outcomes(ctx, u)) {
        if (!o.relevant() || o.probability < tol::kZeroOutcome) continue;
        const auto& bo = *std::find_if(brute.begin(), brute.end(), [&](const auto& x) { return x.i == o.i && x.j == o.j; });
        const Matrix rho = reduced_density(*bo.register_state, ctx.left_qubits());
        const Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
        const Real dense = eig.eigenvalues()(0) * eig.eigenvalues()(1);
        const Real ana = (1 - std::norm(z)) / 4;
        at(k) = {{std::abs(z), ana, dense, entanglement_report(o.m_matrix, z).entropy_bits, std::abs(dense - ana)}};
        return;
      }
    });
  } else if (cfg.quantity == "ghz-range") {
    header = "chi1,chi2,analytic_max_phi,simulated_max_phi,residual";
    parallel_for(n, [&](long long k) {
      const Real c1 = grid_chi(static_cast<int>(k), n);
      const Real c2 = cfg.chi2.value_or(c1);
      const GhzPair g = ghz_pair_projection(c1, c2, 1 / std::sqrt(2.0));
      const Real sim = std::max(g.outcome_phi[0], g.outcome_phi[1]);
      const Real ana = ghz_weight_limit(c1, c2);
      at(k) = {{c1, c2, ana, sim, std::abs(sim - ana)}};
    });
  } else if (cfg.quantity == "xi-solve") {
    header = "chi_bf,target,xi,achieved,residual";
    const Real chi_bf = cfg.chi;
    parallel_for(n, [&](long long k) {
      const Real target = chi_bf * (-0.98 + 1.96 * (static_cast<Real>(k) + 0.5) / n);
      const XiSolution s = solve_xi_for_weight(chi_bf, target);
      const Real got = resulting_weight(hyperbola_projection(s.xi, chi_bf), chi_bf);
      at(k) = {{chi_bf, target, s.xi, got, angle_distance(got, target)}};
    });
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown scan quantity '" + cfg.quantity + "'");
  }
  emit(cfg, csv(header, rows, cfg.tol));
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Config& cfg) {
  AcceptanceOptions opt;
  opt.quick = cfg.quick;
  opt.perturbation = cfg.perturb;
  if (cfg.seed) opt.seed = *cfg.seed;
  std::ostringstream s;
  bool ok = true;
  for (const auto& r : run_acceptance(opt)) {
    s << format_result(r) << '\n';
    ok = ok && r.pass;
  }
  s << (ok ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  emit(cfg, s.str());
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted graph state fusion toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* build = app.add_subcommand("build", "build a graph state and print a summary");
  build->add_option("--graph", cfg.graphs, "graph JSON")->required();
  build->add_flag("--amplitudes", cfg.amplitudes, "include the amplitude table");
  build->add_option("--out", cfg.out, "output file");

  auto* fuse = app.add_subcommand("fuse", "run a fusion protocol and print the outcome report");
  fuse->add_option("--type", cfg.type, "i, ii or gen")->check(CLI::IsMember({"i", "ii", "gen"}));
  fuse->add_option("--graph", cfg.graphs, "left and right graph JSON")->required();
  fuse->add_option("--a", cfg.a, "left vertex label")->required();
  fuse->add_option("--b", cfg.b, "right vertex label")->required();
  fuse->add_option("--unitary", cfg.unitary, "mode unitary JSON (gen)");
  fuse->add_option("--sample", cfg.sample, "draw N outcomes")->check(CLI::NonNegativeNumber);
  fuse->add_option("--seed", cfg.seed, "sampling seed");
  fuse->add_option("--out", cfg.out, "output file");

  auto* scan = app.add_subcommand("scan", "sweep a quantity and print CSV");
  scan->add_option("quantity", cfg.quantity, "logical-prob, failure-split, det-entropy, ghz-range, xi-solve")
      ->required()
      ->check(CLI::IsMember({"logical-prob", "failure-split", "det-entropy", "ghz-range", "xi-solve"}));
  scan->add_option("--points", cfg.points, "grid size");
  scan->add_option("--chi", cfg.chi, "fixed weight (xi-solve: chi_bf; det-entropy: arg z), radians");
  scan->add_option("--chi2", cfg.chi2, "second weight for ghz-range, radians");
  scan->add_option("--tol", cfg.tol, "residual threshold for the ok column")->check(CLI::PositiveNumber);
  scan->add_option("--seed", cfg.seed, "seed for random unitaries");
  scan->add_option("--out", cfg.out, "output file");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_flag("--quick", cfg.quick, "reduced ensembles");
  verify->add_option("--perturb", cfg.perturb, "offset added to every analytic reference");
  verify->add_option("--seed", cfg.seed, "base seed");
  verify->add_option("--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*build) cmd_build(cfg);
    if (*fuse) cmd_fuse(cfg);
    if (*scan) cmd_scan(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAbort;
  }
  return kOk;
}
