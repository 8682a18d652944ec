#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "plasmonq/errors.hpp"

namespace plasmonq {

/// Inclusive linear grid of scan positions.
struct ScanGrid {
  double start{0.0};
  double stop{1.0};
  int points{2};

  double value_at(int i) const;
};

/// Counting record for one scan point: heralds on the trigger detector and
/// heralded counts on the two output detectors. Raw Poisson draws can
/// exceed the herald count; `over_unity` flags that.
struct CountRecord {
  long long heralds{0};
  long long counts_a{0};
  long long counts_b{0};
  std::optional<double> delta_mz_nm{};
  std::uint64_t seed{0};
  bool over_unity{false};
};

enum class FringeMode { analytic, sampled };
enum class Channel { a, b };

struct FringePoint {
  double delta_mz_nm;
  double rate_a;
  double rate_b;
};

/// Heralded output rates versus the interferometer delay. `records` is
/// populated (aligned with `points`) in sampled mode only.
struct FringeScan {
  std::vector<FringePoint> points;
  FringeMode mode{FringeMode::analytic};
  std::vector<CountRecord> records;
};

/// Least-squares fit of rate = offset + amplitude*cos(2 pi delta / period
/// + phase). Visibility is amplitude/offset clamped to [0, 1], i.e.
/// (max - min) / (max + min) of the fitted curve.
struct FitResult {
  double offset{0.0};
  double amplitude{0.0};
  double phase_deg{0.0};
  double period_nm{0.0};
  bool period_fixed{true};
  double visibility{0.0};
  double visibility_sigma{0.0};
  double residual_rms{0.0};
};

/// Fit failure. For constant data under a free period the flat fallback
/// (offset = mean, amplitude = 0) is attached.
class FitError : public Error {
 public:
  explicit FitError(const std::string& message) : Error(message) {}
  FitError(const std::string& message, FitResult flat)
      : Error(message), flat_fallback(flat) {}

  std::optional<FitResult> flat_fallback{};
};

/// Pass/fail coincidence counts for one CHSH analyzer setting.
struct SettingCounts {
  long long n_pp{0};
  long long n_pf{0};
  long long n_fp{0};
  long long n_ff{0};

  long long total() const { return n_pp + n_pf + n_fp + n_ff; }
};

/// CHSH estimate from counts, with 1-sigma binomial error propagation.
struct ChshEstimate {
  std::array<double, 4> correlations{};
  std::array<double, 4> sigma_correlations{};
  double s{0.0};
  double sigma_s{0.0};
  /// |S| above the quantum bound 2*sqrt(2): the input counts cannot come
  /// from any quantum state.
  bool exceeds_tsirelson{false};
};

/// Deterministic per-point seed stream: same (master, index) always yields
/// the same seed, independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Draws heralds ~ Poisson(mean_heralds) and per-channel counts ~
/// Poisson(heralds * p). Deterministic for a fixed seed.
CountRecord sample_counts(double p_a, double p_b, double mean_heralds,
                          std::uint64_t seed);
CountRecord sample_counts(double p, double mean_heralds, std::uint64_t seed);

/// Samples every point of an analytic scan at `mean_heralds` heralds per
/// point, with per-point seeds derived from `master_seed`. Rates are
/// counts/heralds.
FringeScan sample_scan(const FringeScan& analytic, double mean_heralds,
                       std::uint64_t master_seed);

/// Multinomial draw of `samples` coincidences over four outcome
/// probabilities (pass/pass, pass/fail, fail/pass, fail/fail).
SettingCounts sample_setting_counts(const std::array<double, 4>& probs,
                                    long long samples, std::uint64_t seed);

/// Sine fit with the period fixed to `fix_period_nm` (linear closed-form
/// solve) or free (grid search plus refinement). Needs >= 4 points fixed,
/// >= 5 free. Throws FitError on insufficient or degenerate data.
FitResult fit_sine(const FringeScan& scan, Channel channel,
                   std::optional<double> fix_period_nm);

/// E = (N_pp - N_pf - N_fp + N_ff) / N per setting, combined into
/// S = E0 - E1 + E2 + E3. Throws EstimatorError on an empty setting.
ChshEstimate chsh_from_counts(const std::array<SettingCounts, 4>& table);

/// Fitted fringe visibility; DomainError when the fit offset is not
/// positive.
double visibility(const FitResult& fit);

}  // namespace plasmonq
