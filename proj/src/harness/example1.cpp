#include <cmath>
#include <numbers>

#include "sclab/errors.hpp"
#include "sclab/harness/experiments.hpp"
#include "sclab/model/hamiltonian.hpp"
#include "sclab/model/two_state_model.hpp"
#include "sclab/numerics/eigensolver.hpp"
#include "sclab/projection/projection.hpp"
#include "sclab/wkb/density.hpp"
#include "sclab/wkb/wkb_state.hpp"

namespace sclab::harness {

namespace {

constexpr std::size_t kEigenpairs = 10;

MassPoint example1_point(const ExperimentConfig& cfg, double M, std::string& stage) {
  using std::numbers::pi;
  MassPoint point;
  stage = "operator";
  const auto model = model::standard_two_state_model(cfg.c, M);
  const auto grid = model::Grid1D::periodic(-pi, pi, cfg.grid_for(M));
  point.grid_n = grid.n;
  const auto H = model::build_two_state_hamiltonian(model, grid);

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

  stage = "surfaces";
  const auto surfaces = model::electronic_surfaces(model, grid);
  const auto selected = model::select_surface(surfaces, E0);
  const auto& v = selected.branch == model::Branch::plus ? surfaces.v_plus : surfaces.v_minus;

  stage = "wkb";
  const auto rho_md = wkb::md_density(selected.values, E0, grid);
  const auto theta = wkb::wkb_phase(selected.values, E0, grid);
  const auto phi = wkb::md_ansatz(rho_md, theta, v, M).wave();

  stage = "projection";
  const auto projected = projection::project_best_subset(phi, sel, H.channels, grid.h);
  const auto rho_proj = wkb::density_of_wave(projected.wave, grid, H.channels);
  point.mask = projected.chosen_mask;

  stage = "observables";
  point.err_g1 = wkb::observable_error([](double X) { return X * X; }, rho_md, rho_proj);
  point.err_g2 = wkb::observable_error(model.V, rho_md, rho_proj);
  point.extra["branch"] = selected.branch == model::Branch::plus ? "plus" : "minus";
  point.extra["projection_distance"] = projected.distance;
  return point;
}

}  // namespace

ConvergenceReport run_example1(const ExperimentConfig& cfg) {
  if (cfg.experiment != Experiment::example1_gap && cfg.experiment != Experiment::example1_crossing) {
    throw InvalidArgument("run_example1: experiment must be example1_gap or example1_crossing");
  }
  if (cfg.masses.empty()) throw InvalidArgument("run_example1: empty mass list");
  auto report = begin_report(cfg);
  report.points = sweep_masses(
      cfg, [&](double M, std::string& stage) { return example1_point(cfg, M, stage); });
  finish_report(report, cfg, true);
  return report;
}

}  // namespace sclab::harness
