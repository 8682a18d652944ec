#include "plasmonq/source.hpp"

#include <cmath>
#include <numbers>

#include "plasmonq/errors.hpp"

namespace plasmonq {

double PairSourceSpec::coherence_length_nm() const {
  return center_wavelength_nm * center_wavelength_nm /
         (std::numbers::pi * bandwidth_nm);
}

double overlap_gamma(const PairSourceSpec& spec) {
  const double delay_nm = spec.bell_delay_um * 1000.0;
  const double x = delay_nm / spec.coherence_length_nm();
  return std::exp(-x * x);
}

PureState full_pair_state() {
  const std::vector<ModeId> modes{kAlphaH, kAlphaV, kBetaH, kBetaV};
  auto ket = [&](int ah, int av, int bh, int bv) {
    return FockBasisState{{kAlphaH, ah}, {kAlphaV, av}, {kBetaH, bh},
                          {kBetaV, bv}};
  };
  return make_pure_over(modes, {
                                   {+0.5, ket(1, 1, 0, 0)},  // both in alpha
                                   {+0.5, ket(1, 0, 0, 1)},  // H alpha, V beta
                                   {-0.5, ket(0, 1, 1, 0)},  // H beta, V alpha
                                   {-0.5, ket(0, 0, 1, 1)},  // both in beta
                               });
}

StateEnsemble post_selected_pair(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must be within [0, 1]");
  }
  const std::vector<ModeId> modes{kAlphaH, kAlphaV, kBetaH, kBetaV};
  const FockBasisState h_alpha_v_beta{
      {kAlphaH, 1}, {kAlphaV, 0}, {kBetaH, 0}, {kBetaV, 1}};
  const FockBasisState v_alpha_h_beta{
      {kAlphaH, 0}, {kAlphaV, 1}, {kBetaH, 1}, {kBetaV, 0}};

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  PureState singlet = make_pure_over(
      modes, {{inv_sqrt2, h_alpha_v_beta}, {-inv_sqrt2, v_alpha_h_beta}});
  PureState product_hv = make_pure_over(modes, {{1.0, h_alpha_v_beta}});
  PureState product_vh = make_pure_over(modes, {{1.0, v_alpha_h_beta}});

  return StateEnsemble({{gamma, std::move(singlet)},
                        {(1.0 - gamma) / 2.0, std::move(product_hv)},
                        {(1.0 - gamma) / 2.0, std::move(product_vh)}});
}

}  // namespace plasmonq
