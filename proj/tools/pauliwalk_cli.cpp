#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pauliwalk/casimir.hpp"
#include "pauliwalk/circuit.hpp"
#include "pauliwalk/moment.hpp"
#include "pauliwalk/ortho.hpp"
#include "pauliwalk/report.hpp"
#include "pauliwalk/sampler.hpp"
#include "pauliwalk/state_design.hpp"
#include "pauliwalk/su2.hpp"
#include "pauliwalk/verify.hpp"

namespace {

using namespace pauliwalk;
using Clock = std::chrono::steady_clock;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

std::string matrix_csv(const MatrixXd& m) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ",";
      os << m(i, j);
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_csv(const MatrixXcd& m) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ",";
      os << m(i, j).real() << (m(i, j).imag() < 0 ? "" : "+")
         << m(i, j).imag() << "j";
    }
    os << "\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Random Pauli-rotation walks: spectral gaps, closed-form "
               "bounds, circuit compilation, orthogonal and state designs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::uint64_t seed = 0;
  Eigen::Index dense_limit = 4096;
  app.add_option("--out", out_path, "output path (default stdout)")
      ->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--dense-limit", dense_limit,
                 "largest dense matrix dimension")
      ->capture_default_str();

  // gap
  auto* gap_cmd = app.add_subcommand(
      "gap", "spectral gap of the t-th moment operator");
  int gap_n = 1, gap_t = 1, gap_dim = 0;
  std::string gap_group = "su", gap_basis = "elementary";
  gap_cmd->add_option("--qubits", gap_n, "number of qubits (su group)");
  gap_cmd->add_option("--t", gap_t, "moment order")->required();
  gap_cmd->add_option("--group", gap_group, "su or so")
      ->check(CLI::IsMember({"su", "so"}));
  gap_cmd->add_option("--dim", gap_dim, "matrix dimension N (so group)");
  gap_cmd->add_option("--basis", gap_basis,
                      "so generator set: elementary or skew-pauli")
      ->check(CLI::IsMember({"elementary", "skew-pauli"}));

  // su2
  auto* su2_cmd = app.add_subcommand(
      "su2", "closed-form kernel overlaps and per-irrep norms as CSV");
  int max_ell = 8;
  su2_cmd->add_option("--max-ell", max_ell, "largest irrep label");

  // casimir
  auto* casimir_cmd = app.add_subcommand(
      "casimir", "closed-form gap bounds, optional exact gap");
  int cas_n = 1, cas_t = 1;
  bool cas_exact = false;
  std::string cas_format = "json";
  casimir_cmd->add_option("--qubits", cas_n, "number of qubits")->required();
  casimir_cmd->add_option("--t", cas_t, "moment order")->required();
  casimir_cmd->add_flag("--exact", cas_exact,
                        "also compute the exact gap when feasible");
  casimir_cmd->add_option("--format", cas_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // compile
  auto* compile_cmd = app.add_subcommand(
      "compile", "compile exp(i theta P / 2) into a gate circuit");
  std::string compile_pauli, compile_mode = "spanning-tree",
              compile_graph_path;
  double compile_theta = 0.0;
  bool compile_no_verify = false;
  compile_cmd->add_option("--pauli", compile_pauli, "Pauli letter string")
      ->required();
  compile_cmd->add_option("--theta", compile_theta, "rotation angle")
      ->required();
  compile_cmd->add_option("--mode", compile_mode,
                          "spanning-tree or log-depth")
      ->check(CLI::IsMember({"spanning-tree", "log-depth"}));
  compile_cmd->add_option("--graph", compile_graph_path,
                          "edge-list file (spanning-tree mode; default "
                          "all-to-all)");
  compile_cmd->add_flag("--no-verify", compile_no_verify,
                        "skip the dense unitary verification");

  // sample-unitary
  auto* sample_cmd = app.add_subcommand(
      "sample-unitary", "sample a walk transcript as JSON lines");
  int sample_n = 1;
  std::int64_t sample_steps = 1;
  std::string sample_generator = "full", sample_angles = "pi",
              sample_unitary_out;
  sample_cmd->add_option("--qubits", sample_n, "number of qubits")
      ->required();
  sample_cmd->add_option("--steps", sample_steps, "number of steps")
      ->required();
  sample_cmd->add_option("--generator", sample_generator,
                         "full or skew Pauli set")
      ->check(CLI::IsMember({"full", "skew"}));
  sample_cmd->add_option("--angles", sample_angles,
                         "pi, 2pi, or discrete:<t>");
  sample_cmd->add_option("--unitary-out", sample_unitary_out,
                         "also write the walk unitary as CSV");

  // ortho-sample
  auto* ortho_cmd = app.add_subcommand(
      "ortho-sample", "sample an approximately Haar orthogonal matrix");
  int ortho_dim = 3;
  std::int64_t ortho_steps = 0;
  std::string ortho_basis = "elementary";
  ortho_cmd->add_option("--dim", ortho_dim, "matrix dimension N")->required();
  ortho_cmd->add_option("--steps", ortho_steps, "number of walk steps")
      ->required();
  ortho_cmd->add_option("--basis", ortho_basis, "elementary or skew-pauli")
      ->check(CLI::IsMember({"elementary", "skew-pauli"}));

  // state-design
  auto* state_cmd = app.add_subcommand(
      "state-design", "trace distance of the k-step state moment");
  int state_n = 1, state_t = 1, state_k = 0;
  state_cmd->add_option("--qubits", state_n, "number of qubits")->required();
  state_cmd->add_option("--t", state_t, "moment order")->required();
  state_cmd->add_option("--steps", state_k, "channel applications")
      ->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  std::string verify_scale = "fast";
  verify_cmd->add_option("--scale", verify_scale, "fast or slow")
      ->check(CLI::IsMember({"fast", "slow"}));

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "compare the Givens walk against QR-based Haar sampling");
  int bench_dim = 256;
  std::int64_t bench_steps = 1000;
  int bench_samples = 3;
  bench_cmd->add_option("--dim", bench_dim, "matrix dimension N")->required();
  bench_cmd->add_option("--steps", bench_steps, "walk steps per sample")
      ->required();
  bench_cmd->add_option("--samples", bench_samples, "timing repetitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const auto start = Clock::now();
  auto seconds = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  if (gap_cmd->parsed()) {
    GapReport report;
    if (gap_group == "su") {
      report = spectral_gap_report(gap_n, gap_t, dense_limit);
    } else {
      if (gap_dim == 0) {
        throw CLI::ValidationError("--dim is required for --group so");
      }
      report = orthogonal_moment_gap(gap_dim, gap_t,
                                     gap_basis == "elementary"
                                         ? OrthoBasis::elementary
                                         : OrthoBasis::skew_pauli,
                                     dense_limit);
    }
    emit(report_envelope(gap_report_json(report, seed), seed, seconds())
             .dump(2),
         out_path);
    return 0;
  }

  if (su2_cmd->parsed()) {
    std::ostringstream os;
    os << std::setprecision(17) << "ell,f,norm\n";
    for (int ell = 1; ell <= max_ell; ++ell) {
      os << ell << "," << kernel_overlap(ell) << "," << irrep_gap_norm(ell)
         << "\n";
    }
    emit(os.str(), out_path);
    return 0;
  }

  if (casimir_cmd->parsed()) {
    const GapBound bound = gap_bound(cas_n, cas_t);
    double exact_gap = -1.0;
    if (cas_exact) {
      exact_gap = spectral_gap_report(cas_n, cas_t, dense_limit).gap_norm;
    }
    if (cas_format == "csv") {
      std::ostringstream os;
      os << std::setprecision(17) << "n,t,main_bound,small_t_bound,exact_gap\n"
         << cas_n << "," << cas_t << "," << bound.main << ",";
      if (bound.small_t.has_value()) os << *bound.small_t;
      os << ",";
      if (exact_gap >= 0) os << exact_gap;
      os << "\n";
      emit(os.str(), out_path);
    } else {
      nlohmann::json j;
      j["n"] = cas_n;
      j["t"] = cas_t;
      j["main_bound"] = bound.main;
      j["main_bound_formula"] = "1 - (1/(4t)) N^2/(N^2-1) - 1/(N^2-1)";
      if (bound.small_t.has_value()) {
        j["small_t_bound"] = *bound.small_t;
        j["small_t_bound_formula"] = "1 - (1/(2t)) N(N-t+1)/(N^2-1)";
      }
      if (exact_gap >= 0) j["exact_gap"] = exact_gap;
      emit(report_envelope(j, seed, seconds()).dump(2), out_path);
    }
    return 0;
  }

  if (compile_cmd->parsed()) {
    const PauliString p = PauliString::from_str(compile_pauli);
    CompiledCircuit circuit;
    if (compile_mode == "log-depth") {
      circuit = compile_log_depth(p, compile_theta);
    } else {
      ConnectivityGraph graph = ConnectivityGraph::complete(p.num_qubits);
      if (!compile_graph_path.empty()) {
        std::ifstream in(compile_graph_path);
        if (!in) {
          throw CLI::ValidationError("cannot open graph file " +
                                     compile_graph_path);
        }
        graph = ConnectivityGraph::parse(in);
      }
      circuit = compile_spanning_tree(p, compile_theta, graph);
    }
    emit(circuit.str(), out_path);
    if (!compile_no_verify && p.num_qubits <= 10) {
      const MatrixXcd u = circuit_to_unitary(circuit);
      const MatrixXcd expected = pauli_rotation_matrix(p, compile_theta);
      const double deviation = max_abs(u - expected);
      nlohmann::json j;
      j["verified"] = deviation <= 1e-10;
      j["max_entry_deviation"] = deviation;
      j["depth"] = circuit.depth();
      j["gates"] = circuit.gates.size();
      std::cerr << j.dump() << "\n";
      if (deviation > 1e-10) {
        throw std::runtime_error(
            "violated inequality ||circuit - exp(i theta P/2)|| <= 1e-10");
      }
    }
    return 0;
  }

  if (sample_cmd->parsed()) {
    AngleMode mode = AngleMode::continuous(M_PI);
    if (sample_angles == "2pi") {
      mode = AngleMode::continuous(2 * M_PI);
    } else if (sample_angles.rfind("discrete:", 0) == 0) {
      mode = AngleMode::discrete(std::stoi(sample_angles.substr(9)));
    } else if (sample_angles != "pi") {
      throw CLI::ValidationError("--angles must be pi, 2pi, or discrete:<t>");
    }
    const WalkConfig cfg =
        sample_generator == "skew"
            ? WalkConfig::skew_walk(sample_n, sample_steps, mode, seed)
            : WalkConfig::pauli_walk(sample_n, sample_steps, mode, seed);
    std::ostringstream os;
    for (std::int64_t i = 0; i < cfg.steps; ++i) {
      os << transcript_json_line(i, sample_step(cfg, i)) << "\n";
    }
    emit(os.str(), out_path);
    if (!sample_unitary_out.empty()) {
      emit(matrix_csv(walk_unitary(cfg, dense_limit)), sample_unitary_out);
    }
    return 0;
  }

  if (ortho_cmd->parsed()) {
    OrthoSamplerConfig cfg{ortho_dim, ortho_steps,
                           ortho_basis == "elementary"
                               ? GeneratorKind::elementary
                               : GeneratorKind::skew_pauli,
                           seed};
    emit(matrix_csv(sample_orthogonal(cfg)), out_path);
    return 0;
  }

  if (state_cmd->parsed()) {
    const VectorXcd alpha = random_state(1 << state_n, seed);
    const StateDesignResult r =
        state_design_distance(state_n, state_t, state_k, alpha, dense_limit);
    nlohmann::json j;
    j["distance"] = r.distance;
    j["bound"] = r.bound;
    j["bound_formula"] =
        "sqrt(binom(N+t-1,t)) (1 - N/(2t(N+1)) - N/(2(N^2-1)))^k";
    j["dim_sym"] = static_cast<std::int64_t>(r.dim_sym);
    j["k"] = state_k;
    emit(report_envelope(j, seed, seconds()).dump(2), out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const VerifyScale scale =
        verify_scale == "slow" ? VerifyScale::slow : VerifyScale::fast;
    const auto results = run_acceptance_checks(scale);
    int failures = 0;
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.passed ? "PASS" : "FAIL") << " " << r.name << " ("
         << std::fixed << std::setprecision(2) << r.seconds << "s): "
         << r.detail << "\n";
      os.unsetf(std::ios::fixed);
      failures += r.passed ? 0 : 1;
    }
    os << (failures == 0 ? "all checks passed"
                         : std::to_string(failures) + " check(s) failed")
       << "\n";
    emit(os.str(), out_path);
    return failures == 0 ? 0 : 1;
  }

  if (bench_cmd->parsed()) {
    const OrthoBenchmark b = benchmark_ortho(bench_dim, bench_steps,
                                             bench_samples);
    nlohmann::json j;
    j["N"] = b.N;
    j["k"] = b.steps;
    j["givens_ns_per_sample"] = b.givens_ns_per_sample;
    j["gs_ns_per_sample"] = b.gs_ns_per_sample;
    j["givens_ops_per_sample"] = b.givens_ops_per_sample;
    j["gs_flops_estimate"] = b.gs_flops_estimate;
    j["givens_faster"] = b.givens_faster;
    emit(j.dump(2), out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
