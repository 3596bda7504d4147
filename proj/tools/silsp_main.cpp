// Batch front end for the structured inverse least-squares solver.
//
// Subcommands:
//   solve   full solve (rho, minimal-norm solution, family member)
//   rho     optimal residual only
//   check   structure-membership check of a matrix
//   oracle  brute-force reference solve, cross-checked against the closed form
//
// Exit codes: 0 success, 2 parse/validation error, 3 domain rejection
// (x = 0, Z outside the class or not a contraction).

#include "silsp/json_io.hpp"
#include "silsp/oracle.hpp"
#include "silsp/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

namespace {

using silsp::Json;
using silsp::Matrix;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << j.dump(2) << "\n";
  }
}

silsp::ProblemFile load_problem(const std::string& path,
                                const std::string& structure_path,
                                const std::string& norm_flag,
                                const std::string& z_path, double rtol_flag) {
  Json j = load_json(path);
  if (!structure_path.empty()) j["structure"] = load_json(structure_path);
  silsp::ProblemFile p = silsp::problem_from_json(j);
  if (norm_flag == "fro") p.norm = silsp::NormKind::Frobenius;
  if (norm_flag == "spec") p.norm = silsp::NormKind::Spectral;
  if (!z_path.empty()) p.z = silsp::matrix_from_json(load_json(z_path));
  if (rtol_flag >= 0) p.rtol = rtol_flag;
  return p;
}

// Deterministic structured contraction for --seed sampling.
Matrix sample_structured_contraction(const silsp::StructureClass& s,
                                     Eigen::Index n, unsigned long seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double im = (s.field == silsp::Field::Complex) ? dist(gen) : 0.0;
      z(i, j) = silsp::Complex(dist(gen), im);
    }
  }
  z = silsp::structured_project(z, s);
  const double zn = silsp::spectral_norm(z);
  if (zn > 0) z /= zn;
  return z;
}

int cmd_solve(const silsp::ProblemFile& p, std::optional<unsigned long> seed,
              const std::string& out_path) {
  const Eigen::Index n = p.x.rows();
  const double rtol = p.rtol.value_or(0.0);

  silsp::SilspSolution sol;
  if (p.norm == silsp::NormKind::Frobenius) {
    sol = silsp::min_frobenius(p.structure, p.x, p.b, rtol);
  } else {
    Matrix z;
    if (p.z) {
      z = *p.z;
    } else if (seed) {
      z = sample_structured_contraction(p.structure, n, *seed);
    } else {
      z = Matrix::Zero(n, n);
    }
    sol = silsp::min_spectral_family(p.structure, p.x, p.b, z, rtol);
  }
  emit(silsp::solution_to_json(sol, p.structure, p.x, p.b), out_path);
  return 0;
}

int cmd_rho(const silsp::ProblemFile& p, const std::string& out_path) {
  Json out;
  out["rho"] = silsp::rho(p.structure, p.x, p.b, p.rtol.value_or(0.0));
  out["class_resolved"] =
      silsp::kind_name(silsp::to_prototype(p.structure, p.x, p.b).proto.kind);
  emit(out, out_path);
  return 0;
}

int cmd_check(const std::string& path, const std::string& structure_path,
              const std::string& out_path) {
  Json j = load_json(path);
  if (!structure_path.empty()) j["structure"] = load_json(structure_path);
  if (!j.contains("A") || !j.contains("structure")) {
    throw std::invalid_argument("check: input needs A and structure");
  }
  const silsp::StructureClass s = silsp::structure_from_json(j.at("structure"));
  const Matrix a = silsp::matrix_from_json(j.at("A"));
  Json out;
  out["defect"] = silsp::membership_defect(a, s);
  out["member"] = silsp::is_member(a, s);
  emit(out, out_path);
  return 0;
}

int cmd_oracle(const silsp::ProblemFile& p, const std::string& out_path) {
  const silsp::OracleResult r = silsp::oracle_solve(p.structure, p.x, p.b);
  const double rho_closed =
      silsp::rho(p.structure, p.x, p.b, p.rtol.value_or(0.0));
  Json out;
  out["rho_oracle"] = r.rho;
  out["rho"] = rho_closed;
  out["match"] = std::abs(r.rho - rho_closed) <= 1e-8 * (1.0 + p.b.norm());
  out["A"] = silsp::matrix_to_json(r.a_min_fro);
  out["coeff_dim"] = r.coeff_dim;
  emit(out, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured inverse least-squares solver"};
  app.require_subcommand(1);

  std::string problem_path, structure_path, z_path, out_path, norm_flag;
  double rtol_flag = -1.0;
  std::optional<unsigned long> seed;

  auto add_common = [&](CLI::App* sub, bool with_solver_flags) {
    sub->add_option("problem", problem_path, "problem JSON file")->required();
    sub->add_option("--structure", structure_path,
                    "structure JSON file overriding the problem's structure");
    sub->add_option("--out", out_path, "result file (default: stdout)");
    if (with_solver_flags) {
      sub->add_option("--rtol", rtol_flag, "rank tolerance override");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a problem file");
  add_common(solve, true);
  solve->add_option("--norm", norm_flag, "fro or spec")
      ->check(CLI::IsMember({"fro", "spec"}));
  solve->add_option("--z", z_path, "family parameter Z (matrix JSON)");
  unsigned long seed_value = 0;
  CLI::Option* seed_opt = solve->add_option(
      "--seed", seed_value, "sample a random structured contraction Z");

  CLI::App* rho_cmd = app.add_subcommand("rho", "optimal residual only");
  add_common(rho_cmd, true);

  CLI::App* check = app.add_subcommand("check", "membership check of A");
  add_common(check, false);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solve");
  add_common(oracle, true);

  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count() > 0) seed = seed_value;

  try {
    if (app.got_subcommand(check)) {
      return cmd_check(problem_path, structure_path, out_path);
    }
    const silsp::ProblemFile p =
        load_problem(problem_path, structure_path, norm_flag, z_path, rtol_flag);
    if (app.got_subcommand(solve)) return cmd_solve(p, seed, out_path);
    if (app.got_subcommand(rho_cmd)) return cmd_rho(p, out_path);
    return cmd_oracle(p, out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
