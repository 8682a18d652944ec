#include "plasmonq/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "plasmonq/errors.hpp"
#include "plasmonq/parallel.hpp"
#include "plasmonq/source.hpp"

namespace plasmonq {

namespace {

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

void check_mz(const MzSpec& mz) {
  for (double eta : {mz.eta_in1, mz.eta_in2, mz.eta_out_a, mz.eta_out_b}) {
    if (eta < 0.0 || eta > 1.0) {
      throw DomainError("coupler efficiencies must be within [0, 1]");
    }
  }
  if (!(mz.lambda_eff_nm > 0.0)) {
    throw DomainError("lambda_eff must be positive");
  }
}

}  // namespace

HeraldedState heralded_spp_state(double theta_deg, double gamma,
                                 double eta_in1, double eta_in2) {
  StateEnsemble pair = post_selected_pair(gamma);

  // Herald first: the remote projection touches only the alpha modes, so
  // it commutes with everything on the beta side. Conditioning on the
  // herald must not be diluted by downstream arm losses.
  EnsembleProjection heralded = project(pair, polarizer(theta_deg));
  const double herald_probability = heralded.probability;

  const std::array<ModeId, 4> route_modes = pbs_route_modes();
  const std::array<ModeId, 2> beta1{kBeta1};
  const std::array<ModeId, 1> arm1{kBeta1};
  const std::array<ModeId, 1> arm2{kBeta2};
  const std::array<std::pair<ModeId, ModeId>, 2> to_spp{
      std::pair{kBeta1, kSpp1}, std::pair{kBeta2, kSpp2}};
  const std::array<ModeId, 2> spp_modes{kSpp1, kSpp2};
  (void)beta1;

  const ScatteringElement pbs = pbs_route();
  const ScatteringElement in1 = coupler(eta_in1);
  const ScatteringElement in2 = coupler(eta_in2);

  std::vector<StateEnsemble::Branch> branches;
  for (const auto& branch : heralded.state.branches()) {
    const double weight =
        branch.weight * branch.state.norm_squared() / herald_probability;
    PureState state = branch.state.normalized();
    state = with_modes(state, route_modes);
    state = apply_scattering(state, pbs, route_modes);
    state = apply_scattering(state, in1, arm1);
    state = apply_scattering(state, in2, arm2);
    state = relabeled(state, to_spp);
    state = restricted_to(state, spp_modes);
    branches.push_back({weight, std::move(state)});
  }
  return HeraldedState{StateEnsemble(std::move(branches)),
                       herald_probability};
}

DetectionProbs detection_probs(double theta_deg, double gamma,
                               const MzSpec& mz) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must be within [0, 1]");
  }
  check_mz(mz);
  // Construction validates physicality (R + T and the r/t phase).
  (void)lossy_bs(mz.spbs);

  const double r2 = mz.spbs.reflectance;
  const double t2 = mz.spbs.transmittance;
  const double dphi = deg2rad(mz.spbs.phase_diff_deg);
  const double phi = 2.0 * std::numbers::pi * mz.delta_mz_nm / mz.lambda_eff_nm;
  const double c = std::cos(deg2rad(theta_deg));
  const double s = std::sin(deg2rad(theta_deg));

  const double cross = gamma * mz.spbs.mode_overlap * 2.0 * c * s *
                       std::sqrt(mz.eta_in1 * mz.eta_in2 * r2 * t2);
  const double p_a =
      mz.eta_out_a * (t2 * mz.eta_in1 * c * c + r2 * mz.eta_in2 * s * s -
                      cross * std::cos(phi + dphi));
  const double p_b =
      mz.eta_out_b * (r2 * mz.eta_in1 * c * c + t2 * mz.eta_in2 * s * s -
                      cross * std::cos(phi - dphi));
  return DetectionProbs{clamp01(p_a), clamp01(p_b)};
}

FringeScan scan_fringes(double theta_deg, double gamma, const MzSpec& mz,
                        const ScanGrid& grid) {
  if (grid.points < 2) {
    throw DomainError("scan grids need at least 2 points");
  }
  FringeScan scan;
  scan.mode = FringeMode::analytic;
  scan.points.resize(static_cast<std::size_t>(grid.points));
  parallel_for(static_cast<std::size_t>(grid.points), [&](std::size_t i) {
    MzSpec at = mz;
    at.delta_mz_nm = grid.value_at(static_cast<int>(i));
    const DetectionProbs p = detection_probs(theta_deg, gamma, at);
    scan.points[i] = FringePoint{at.delta_mz_nm, p.p_a, p.p_b};
  });
  return scan;
}

std::array<std::array<double, 4>, 4> chsh_outcome_probabilities(
    const ChshSetting& setting, double gamma) {
  StateEnsemble pair = post_selected_pair(gamma);
  const std::array<std::pair<double, double>, 4> settings{
      std::pair{setting.a_deg, setting.b_deg},
      std::pair{setting.a_deg, setting.b_prime_deg},
      std::pair{setting.a_prime_deg, setting.b_deg},
      std::pair{setting.a_prime_deg, setting.b_prime_deg}};

  std::array<std::array<double, 4>, 4> probs{};
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto [angle_a, angle_b] = settings[k];
    std::size_t outcome = 0;
    for (double offset_a : {0.0, 90.0}) {
      EnsembleProjection on_a =
          project(pair, polarizer(angle_a + offset_a, Path::alpha));
      for (double offset_b : {0.0, 90.0}) {
        probs[k][outcome++] = probability_of(
            on_a.state, polarizer(angle_b + offset_b, Path::beta));
      }
    }
  }
  return probs;
}

ChshResult chsh(const ChshSetting& setting, double gamma) {
  const auto probs = chsh_outcome_probabilities(setting, gamma);
  ChshResult result;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& p = probs[k];
    result.correlations[k] = p[0] - p[1] - p[2] + p[3];
  }
  result.s = result.correlations[0] - result.correlations[1] +
             result.correlations[2] + result.correlations[3];
  result.sigma_s = 0.0;
  return result;
}

double gamma_for_bell_parameter(double s_abs) {
  const double lo = std::numbers::sqrt2;
  const double hi = 2.0 * std::numbers::sqrt2;
  if (!(s_abs >= lo - 1e-9 && s_abs <= hi + 1e-9)) {
    throw DomainError("|S| must be within [sqrt(2), 2*sqrt(2)]");
  }
  return std::clamp(s_abs / std::numbers::sqrt2 - 1.0, 0.0, 1.0);
}

namespace {

MzSpec probe_spec(const MzSpec& mz) {
  MzSpec probe = mz;
  probe.eta_in1 = probe.eta_in2 = probe.eta_out_a = probe.eta_out_b = 1.0;
  return probe;
}

void check_characterizable(const MzSpec& mz) {
  if (!(mz.spbs.reflectance > 0.0) || !(mz.spbs.transmittance > 0.0)) {
    throw DomainError(
        "characterization needs non-zero reflectance and transmittance");
  }
  if (!(mz.spbs.mode_overlap > 0.0)) {
    throw DomainError("characterization needs a non-zero mode overlap");
  }
}

ScanGrid characterization_grid(const MzSpec& mz, int points) {
  // One full fringe period; the endpoint stops one step short so no
  // scan position repeats modulo the period.
  const double step = mz.lambda_eff_nm / points;
  return ScanGrid{0.0, mz.lambda_eff_nm - step, points};
}

/// Half the A-B fringe offset, folded into [0, 180).
double phase_from_fits(const FitResult& fit_a, const FitResult& fit_b) {
  double diff = std::fmod(fit_a.phase_deg - fit_b.phase_deg, 360.0);
  if (diff < 0.0) diff += 360.0;
  return diff / 2.0;
}

}  // namespace

SpbsEstimate characterize_spbs(const MzSpec& mz) {
  check_mz(mz);
  check_characterizable(mz);
  const MzSpec probe = probe_spec(mz);

  // Single-arm illumination: theta = 0 feeds arm 1 only, theta = 90 arm 2.
  const DetectionProbs arm1 = detection_probs(0.0, 1.0, probe);
  const DetectionProbs arm2 = detection_probs(90.0, 1.0, probe);
  SpbsEstimate estimate;
  estimate.transmittance = (arm1.p_a + arm2.p_b) / 2.0;
  estimate.reflectance = (arm1.p_b + arm2.p_a) / 2.0;

  const ScanGrid grid = characterization_grid(probe, 64);
  const FringeScan both = scan_fringes(45.0, 1.0, probe, grid);
  const FitResult fit_a = fit_sine(both, Channel::a, probe.lambda_eff_nm);
  const FitResult fit_b = fit_sine(both, Channel::b, probe.lambda_eff_nm);
  estimate.phase_diff_deg = phase_from_fits(fit_a, fit_b);
  return estimate;
}

SpbsCharacterization characterize_spbs(const MzSpec& mz,
                                       const CharacterizeOptions& options) {
  check_mz(mz);
  check_characterizable(mz);
  if (options.points < 4) {
    throw DomainError("characterization needs at least 4 scan points");
  }
  if (!(options.mean_heralds > 0.0)) {
    throw DomainError("mean_heralds must be positive");
  }
  const MzSpec probe = probe_spec(mz);
  const ScanGrid grid = characterization_grid(probe, options.points);

  SpbsCharacterization out;
  const FringeScan arm1 = scan_fringes(0.0, 1.0, probe, grid);
  const FringeScan arm2 = scan_fringes(90.0, 1.0, probe, grid);
  const FringeScan both = scan_fringes(45.0, 1.0, probe, grid);
  out.arm1 = sample_scan(arm1, options.mean_heralds,
                         derive_seed(options.seed, 1));
  out.arm2 = sample_scan(arm2, options.mean_heralds,
                         derive_seed(options.seed, 2));
  out.both = sample_scan(both, options.mean_heralds,
                         derive_seed(options.seed, 3));

  auto pooled = [](const FringeScan& scan, Channel channel) {
    long long heralds = 0;
    long long counts = 0;
    for (const CountRecord& record : scan.records) {
      heralds += record.heralds;
      counts += (channel == Channel::a) ? record.counts_a : record.counts_b;
    }
    if (heralds == 0) throw EstimatorError("no heralds recorded");
    return static_cast<double>(counts) / static_cast<double>(heralds);
  };
  out.estimate.transmittance =
      (pooled(out.arm1, Channel::a) + pooled(out.arm2, Channel::b)) / 2.0;
  out.estimate.reflectance =
      (pooled(out.arm1, Channel::b) + pooled(out.arm2, Channel::a)) / 2.0;

  out.fit_a = fit_sine(out.both, Channel::a, probe.lambda_eff_nm);
  out.fit_b = fit_sine(out.both, Channel::b, probe.lambda_eff_nm);
  out.estimate.phase_diff_deg = phase_from_fits(out.fit_a, out.fit_b);
  return out;
}

}  // namespace plasmonq
