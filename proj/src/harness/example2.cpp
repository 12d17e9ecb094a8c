#include <cmath>
#include <limits>

#include "sclab/caustic/caustic_solution.hpp"
#include "sclab/caustic/dual_phase.hpp"
#include "sclab/errors.hpp"
#include "sclab/harness/experiments.hpp"
#include "sclab/model/hamiltonian.hpp"
#include "sclab/numerics/eigensolver.hpp"
#include "sclab/projection/projection.hpp"
#include "sclab/wkb/density.hpp"
#include "sclab/wkb/turning_points.hpp"

namespace sclab::harness {

namespace {

constexpr std::size_t kEigenpairs = 10;
constexpr double kContinuityTolerance = 1e-8;
constexpr double kAllowedNonMonotoneSteps = 1.0;

double bump12(double X) {
  const double s = (1.5 - X) * (1.5 + X) / (1.5 * 1.5);
  return std::pow(s, 6);
}

double caustic_g1(double X) { return bump12(X) * (1.0 + std::exp(-X * X)); }
double caustic_g2(double X) { return bump12(X) * (1.0 - X * X + X * X * X * X); }

MassPoint example2_point(const ExperimentConfig& cfg, double M, std::string& stage) {
  MassPoint point;
  stage = "operator";
  const double half = 2.0 * std::sqrt(cfg.E);
  const auto grid = model::Grid1D::periodic(-half, half, cfg.grid_for(M));
  point.grid_n = grid.n;
  const auto V = [](double X) { return X * X; };
  const auto H = model::build_scalar_hamiltonian(V, M, grid);

  stage = "eigensolve";
  auto pairs = numerics::eigs_near(H.matrix, cfg.E, kEigenpairs);

  stage = "cluster";
  double center = cfg.E;
  if (cfg.keep_center == KeepCenter::nearest_eigenvalue) {
    center = pairs.front().value;
    for (const auto& p : pairs) {
      if (std::abs(p.value - cfg.E) < std::abs(center - cfg.E)) center = p.value;
    }
  }
  const auto sel = projection::cluster_eigenvalues(std::move(pairs), center, M);
  const double E0 = sel.E0;
  point.E0 = E0;
  point.kept = sel.kept.size();

  stage = "caustic solution";
  const auto dp = caustic::dual_phase(E0);
  const auto sol = caustic::assemble_caustic_solution(dp, M, grid, cfg.expansion_order);

  stage = "projection";
  const auto projected = projection::project_best_subset(sol.phi, sel, 1, grid.h);
  const auto rho_proj = wkb::density_of_wave(projected.wave, grid, 1);
  point.mask = projected.chosen_mask;

  stage = "observables";
  const auto interval = wkb::find_turning_points(V, E0, 0.0, half);
  const double md_ratio = wkb::md_weighted_integral(caustic_g1, V, E0, interval) /
                          wkb::md_weighted_integral(caustic_g2, V, E0, interval);
  const double q_ratio = wkb::observable(caustic_g1, rho_proj) / wkb::observable(caustic_g2, rho_proj);
  point.err_g1 = std::abs(md_ratio - q_ratio);

  const wkb::Density rho_md{grid, wkb::md_cell_averages(V, E0, interval, grid)};
  point.err_g2 = wkb::l1_distance(rho_proj, rho_md);

  const auto rho_glued = wkb::density_of_wave(sol.phi, grid, 1);
  point.extra["X0"] = sol.X0;
  point.extra["continuity_defect"] = sol.continuity_defect(dp);
  point.extra["l1_glued_vs_projected"] = wkb::l1_distance(rho_glued, rho_proj);
  point.extra["projection_distance"] = projected.distance;
  return point;
}

}  // namespace

ConvergenceReport run_example2(const ExperimentConfig& cfg) {
  if (cfg.experiment != Experiment::example2_caustic) {
    throw InvalidArgument("run_example2: experiment must be example2_caustic");
  }
  if (cfg.masses.empty()) throw InvalidArgument("run_example2: empty mass list");
  if (!(cfg.E > 0.0)) throw InvalidArgument("run_example2: E must be positive");
  auto report = begin_report(cfg);
  report.points = sweep_masses(
      cfg, [&](double M, std::string& stage) { return example2_point(cfg, M, stage); });

  double worst_defect = 0.0;
  double non_monotone = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& p : report.points) {
    if (!p.ok()) {
      worst_defect = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    worst_defect = std::max(worst_defect, p.extra.at("continuity_defect").get<double>());
    if (p.err_g2 > previous) non_monotone += 1.0;
    previous = p.err_g2;
  }
  add_check(report, "glue_continuity", worst_defect, 0.0, kContinuityTolerance);
  add_check(report, "l1_non_monotone_steps", non_monotone, 0.0, kAllowedNonMonotoneSteps);
  finish_report(report, cfg, false);
  return report;
}

}  // namespace sclab::harness
