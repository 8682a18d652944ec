#include "plasmonq/mode.hpp"

namespace plasmonq {

std::string to_string(Path path) {
  switch (path) {
    case Path::alpha: return "alpha";
    case Path::beta: return "beta";
    case Path::beta1: return "beta1";
    case Path::beta2: return "beta2";
    case Path::spp1: return "spp1";
    case Path::spp2: return "spp2";
    case Path::out_a: return "outA";
    case Path::out_b: return "outB";
    case Path::loss: return "loss";
  }
  return "?";
}

std::string to_string(ModeId mode) {
  std::string name = to_string(mode.path);
  switch (mode.pol) {
    case Pol::H: return name + ":H";
    case Pol::V: return name + ":V";
    case Pol::none: return name;
  }
  return name;
}

}  // namespace plasmonq
