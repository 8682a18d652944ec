#pragma once

#include <array>
#include <cstdint>

#include "plasmonq/elements.hpp"
#include "plasmonq/fock.hpp"
#include "plasmonq/stats.hpp"

namespace plasmonq {

/// The plasmonic Mach-Zehnder: polarizing splitter into two arms, photon
/// to plasmon couplers, a variable delay on arm 1, the lossy plasmonic
/// splitter, and out-couplers to the detector ports.
struct MzSpec {
  SpbsSpec spbs{};
  double delta_mz_nm{0.0};
  double lambda_eff_nm{806.0};
  double eta_in1{1.0};
  double eta_in2{1.0};
  double eta_out_a{1.0};
  double eta_out_b{1.0};
};

/// Analyzer angles (degrees) for the four CHSH settings.
struct ChshSetting {
  double a_deg{0.0};
  double a_prime_deg{45.0};
  double b_deg{22.5};
  double b_prime_deg{67.5};
};

/// Correlations E(a,b), E(a,b'), E(a',b), E(a',b') and
/// S = E0 - E1 + E2 + E3. sigma_s is zero in analytic mode.
struct ChshResult {
  std::array<double, 4> correlations{};
  double s{0.0};
  double sigma_s{0.0};
};

/// Heralded state of the plasmonic arms, conditioned on the remote
/// polarizer click.
struct HeraldedState {
  StateEnsemble state;
  double herald_probability{0.0};
};

struct DetectionProbs {
  double p_a{0.0};
  double p_b{0.0};
};

/// Projects the heralding photon at `theta_deg` and routes its partner
/// into the plasmonic arms. For gamma = 1 the surviving branch is
/// cos(theta)|1,0> - sin(theta)|0,1> over (spp1, spp2); the herald fires
/// with probability 1/2 for every theta and gamma. Sub-unit coupler
/// efficiencies attenuate the heralded state, never the herald itself.
HeraldedState heralded_spp_state(double theta_deg, double gamma,
                                 double eta_in1 = 1.0, double eta_in2 = 1.0);

/// Heralded detection probabilities at the two output ports, closed form.
///
/// With phi = 2 pi delta_mz / lambda_eff and dphi = arg(t) - arg(r):
///   p_a = eta_a * (T n1 c^2 + R n2 s^2 - k cos(phi + dphi))
///   p_b = eta_b * (R n1 c^2 + T n2 s^2 - k cos(phi - dphi))
/// where c = cos(theta), s = sin(theta) and the cross term
/// k = gamma * mu * 2 c s * sqrt(n1 n2 R T) carries both the source
/// indistinguishability and the splitter mode overlap.
DetectionProbs detection_probs(double theta_deg, double gamma,
                               const MzSpec& mz);

/// Evaluates detection_probs over a delay grid. Deterministic; points are
/// independent and evaluated in parallel.
FringeScan scan_fringes(double theta_deg, double gamma, const MzSpec& mz,
                        const ScanGrid& grid);

/// CHSH correlations of the post-selected pair, computed from the sixteen
/// polarizer pass/fail joint probabilities.
ChshResult chsh(const ChshSetting& setting, double gamma);

/// Joint pass/fail probabilities for each of the four settings, ordered
/// (pp, pf, fp, ff); rows ordered (a,b), (a,b'), (a',b), (a',b').
std::array<std::array<double, 4>, 4> chsh_outcome_probabilities(
    const ChshSetting& setting, double gamma);

/// Inverts |S| = sqrt(2) * (1 + gamma) at the standard angle set.
/// DomainError outside [sqrt(2), 2*sqrt(2)].
double gamma_for_bell_parameter(double s_abs);

/// Splitter parameters recovered by the measurement procedure.
struct SpbsEstimate {
  double reflectance{0.0};
  double transmittance{0.0};
  double phase_diff_deg{0.0};
};

/// Characterization options for the sampled (shot-noise) procedure.
struct CharacterizeOptions {
  int points{25};
  double mean_heralds{10000.0};
  std::uint64_t seed{1};
};

/// Characterization record: the estimate plus the probe scans and fits it
/// came from.
struct SpbsCharacterization {
  SpbsEstimate estimate;
  FringeScan arm1;
  FringeScan arm2;
  FringeScan both;
  FitResult fit_a;
  FitResult fit_b;
};

/// Measures the splitter the way the instrument would: single-arm
/// illumination gives reflectance and transmittance; the offset between
/// the two output fringe patterns under balanced two-arm illumination is
/// twice the r-t phase difference. The probe bypasses the configured
/// coupler efficiencies (they are external to the splitter).
///
/// The fringe offset determines the phase difference only modulo 180
/// degrees; the estimate is reported in [0, 180).
SpbsEstimate characterize_spbs(const MzSpec& mz);

/// As characterize_spbs, but through Poisson counting at
/// options.mean_heralds heralds per scan point.
SpbsCharacterization characterize_spbs(const MzSpec& mz,
                                       const CharacterizeOptions& options);

}  // namespace plasmonq
