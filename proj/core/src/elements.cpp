#include "plasmonq/elements.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "plasmonq/errors.hpp"
#include "plasmonq/fock.hpp"

namespace plasmonq {

namespace {

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

double ScatteringElement::max_singular_value() const {
  if (matrix.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
  return svd.singularValues()(0);
}

ScatteringElement ScatteringElement::checked(Eigen::MatrixXcd matrix,
                                             std::string label) {
  if (matrix.rows() != matrix.cols()) {
    throw ModeMismatch("scattering element '" + label + "' must be square");
  }
  ScatteringElement element{std::move(matrix), std::move(label)};
  const double sigma = element.max_singular_value();
  if (sigma > 1.0 + kNormSlack) {
    std::ostringstream msg;
    msg << "scattering element '" << element.label
        << "' amplifies: largest singular value " << sigma;
    throw Unphysical(msg.str());
  }
  return element;
}

Projector Projector::polarization_at_angle(double theta_deg, Path on) {
  if (is_path_encoded(on)) {
    throw DomainError("polarization projector needs a polarized path, got '" +
                      to_string(on) + "'");
  }
  Projector p(Kind::polarization_at_angle);
  p.data_ = Polarization{theta_deg, on};
  return p;
}

Projector Projector::occupation_pattern(
    std::vector<std::pair<ModeId, int>> pattern) {
  for (const auto& [mode, count] : pattern) {
    if (!is_valid_mode(mode)) {
      throw DomainError("invalid mode '" + to_string(mode) +
                        "' in occupation pattern");
    }
    if (count < 0 || count > kMaxPhotons) {
      throw DomainError("occupation pattern counts must be within [0, " +
                        std::to_string(kMaxPhotons) + "]");
    }
  }
  Projector p(Kind::occupation_pattern);
  p.data_ = Occupation{std::move(pattern)};
  return p;
}

Projector Projector::coincidence(std::vector<Path> paths) {
  if (paths.empty()) {
    throw DomainError("coincidence projector needs at least one path");
  }
  Projector p(Kind::coincidence);
  p.data_ = Coincidence{std::move(paths)};
  return p;
}

double Projector::theta_deg() const {
  return std::get<Polarization>(data_).theta_deg;
}

Path Projector::on_path() const { return std::get<Polarization>(data_).on; }

const std::vector<std::pair<ModeId, int>>& Projector::pattern() const {
  return std::get<Occupation>(data_).pattern;
}

const std::vector<Path>& Projector::paths() const {
  return std::get<Coincidence>(data_).paths;
}

ScatteringElement balanced_bs() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  Eigen::MatrixXcd m(2, 2);
  m << inv_sqrt2, i * inv_sqrt2, i * inv_sqrt2, inv_sqrt2;
  return ScatteringElement::checked(std::move(m), "bs50");
}

std::array<ModeId, 4> pbs_route_modes() {
  return {kBetaH, kBetaV, kBeta1, kBeta2};
}

ScatteringElement pbs_route() {
  // Columns follow pbs_route_modes(): V reflects into beta1, H transmits
  // into beta2. The reverse entries make the map a unitary involution.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(3, 0) = 1.0;  // (beta,H) -> beta2
  m(2, 1) = 1.0;  // (beta,V) -> beta1
  m(1, 2) = 1.0;
  m(0, 3) = 1.0;
  return ScatteringElement::checked(std::move(m), "pbs");
}

Projector polarizer(double theta_deg, Path on) {
  return Projector::polarization_at_angle(theta_deg, on);
}

ScatteringElement lossy_bs(const SpbsSpec& spec) {
  if (spec.reflectance < 0.0 || spec.reflectance > 1.0) {
    throw DomainError("reflectance must be within [0, 1]");
  }
  if (spec.transmittance < 0.0 || spec.transmittance > 1.0) {
    throw DomainError("transmittance must be within [0, 1]");
  }
  if (spec.reflectance + spec.transmittance > 1.0 + kNormSlack) {
    std::ostringstream msg;
    msg << "R+T must be <= 1, got " << spec.reflectance + spec.transmittance;
    throw Unphysical(msg.str());
  }
  const Complex r{std::sqrt(spec.reflectance), 0.0};
  const Complex t = std::sqrt(spec.transmittance) *
                    std::exp(Complex{0.0, deg2rad(spec.phase_diff_deg)});
  Eigen::MatrixXcd m(2, 2);
  m << t, r, r, t;
  // checked() also rejects R+T <= 1 combinations whose phase makes
  // |t + r| exceed one (e.g. R = T = 0.5 at zero phase difference).
  return ScatteringElement::checked(std::move(m), "spbs");
}

ScatteringElement phase_delay(double delta_nm, double lambda_eff_nm) {
  if (!(lambda_eff_nm > 0.0)) {
    throw DomainError("lambda_eff must be positive");
  }
  const double phi = 2.0 * std::numbers::pi * delta_nm / lambda_eff_nm;
  Eigen::MatrixXcd m(1, 1);
  m << std::exp(Complex{0.0, phi});
  return ScatteringElement::checked(std::move(m), "phase");
}

ScatteringElement coupler(double eta) {
  if (eta < 0.0 || eta > 1.0) {
    throw DomainError("coupler efficiency must be within [0, 1]");
  }
  Eigen::MatrixXcd m(1, 1);
  m << Complex{std::sqrt(eta), 0.0};
  return ScatteringElement::checked(std::move(m), "coupler");
}

}  // namespace plasmonq
