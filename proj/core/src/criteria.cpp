#include "fent/criteria.hpp"

#include <cmath>

#include <json.hpp>

#include "fent/concurrence.hpp"
#include "fent/errors.hpp"

namespace fent {

namespace {
constexpr double kBand = 1e-9;
}

Verdict verdict_of(double indicator) {
  if (indicator > kBand) return Verdict::Detected;
  if (indicator < -kBand) return Verdict::NotDetected;
  return Verdict::Inconclusive;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Detected: return "entangled";
    case Verdict::Inconclusive: return "inconclusive";
    default: return "not-detected";
  }
}

double d_von_neumann(const DensityMatrix& rho) {
  return von_neumann(rho.reduced_spectrum()) - von_neumann(rho.global_spectrum()) -
         std::log(static_cast<double>(rho.particle_count()));
}

double d_linear(const DensityMatrix& rho) {
  if (rho.particle_count() != 2)
    throw UnsupportedParticleCount("d_linear is defined for two fermions only");
  return linear_entropy(rho.reduced_spectrum()) - linear_entropy(rho.global_spectrum()) - 0.5;
}

double r_q(const DensityMatrix& rho, EntropicOrder q) {
  return renyi(rho.reduced_spectrum(), q) - renyi(rho.global_spectrum(), q) -
         std::log(static_cast<double>(rho.particle_count()));
}

double r_infinity(const DensityMatrix& rho) {
  return std::log(rho.global_spectrum().max()) - std::log(rho.reduced_spectrum().max()) -
         std::log(static_cast<double>(rho.particle_count()));
}

bool slater_rank_one_test(const DensityMatrix& rho) {
  if (rho.global_spectrum().max() < 1.0 - 1e-9)
    throw NotPure("slater_rank_one_test requires a pure state");
  double purity = 0.0;
  for (double v : rho.reduced_spectrum().values()) purity += v * v;
  return std::abs(purity - 1.0 / static_cast<double>(rho.particle_count())) <= 1e-9;
}

bool IndicatorReport::any_detected() const {
  if (d_vn_verdict == Verdict::Detected || r_inf_verdict == Verdict::Detected) return true;
  if (d_l && d_l_verdict == Verdict::Detected) return true;
  if (concurrence && concurrence_verdict == Verdict::Detected) return true;
  for (Verdict v : r_verdicts)
    if (v == Verdict::Detected) return true;
  return false;
}

IndicatorReport full_report(const DensityMatrix& rho, const std::vector<EntropicOrder>& q_grid) {
  IndicatorReport rep;
  rep.n_particles = rho.particle_count();
  rep.d_vn = d_von_neumann(rho);
  rep.d_vn_verdict = verdict_of(rep.d_vn);
  rep.r_inf = r_infinity(rho);
  rep.r_inf_verdict = verdict_of(rep.r_inf);
  if (rho.particle_count() == 2) {
    rep.d_l = d_linear(rho);
    rep.d_l_verdict = verdict_of(*rep.d_l);
  }
  for (const EntropicOrder& q : q_grid) {
    const double v = r_q(rho, q);
    rep.r_values.emplace_back(q, v);
    rep.r_verdicts.push_back(verdict_of(v));
  }
  if (rho.single_particle_dim() == 4 && rho.particle_count() == 2) {
    rep.concurrence = esbl_concurrence(rho);
    rep.concurrence_verdict = *rep.concurrence > kBand
                                  ? Verdict::Detected
                                  : Verdict::NotDetected;
  }
  return rep;
}

std::string report_to_json(const IndicatorReport& rep) {
  nlohmann::json j;
  j["n_particles"] = rep.n_particles;
  j["d_vn"] = rep.d_vn;
  j["d_vn_verdict"] = verdict_name(rep.d_vn_verdict);
  if (rep.d_l) {
    j["d_l"] = *rep.d_l;
    j["d_l_verdict"] = verdict_name(rep.d_l_verdict);
  }
  j["r_inf"] = rep.r_inf;
  j["r_inf_verdict"] = verdict_name(rep.r_inf_verdict);
  nlohmann::json rq = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.r_values.size(); ++i) {
    nlohmann::json item;
    const EntropicOrder& q = rep.r_values[i].first;
    if (q.is_infinity())
      item["q"] = "inf";
    else
      item["q"] = q.value();
    item["value"] = rep.r_values[i].second;
    item["verdict"] = verdict_name(rep.r_verdicts[i]);
    rq.push_back(std::move(item));
  }
  j["r_q"] = std::move(rq);
  if (rep.concurrence) {
    j["concurrence"] = *rep.concurrence;
    j["concurrence_verdict"] = verdict_name(rep.concurrence_verdict);
  }
  j["entangled"] = rep.any_detected();
  return j.dump(2);
}

} // namespace fent
