#pragma once

#include <cmath>
#include <random>

#include "lorentzkit/corpus.hpp"
#include "lorentzkit/extremals.hpp"
#include "lorentzkit/transforms.hpp"

namespace testing {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline lorentzkit::RadialProfile cap() {
  using namespace lorentzkit;
  return RadialProfile({make_segment(-1.0, 1.0, 1.0, 0.0, 1.0), make_segment(0.0, 0.0, 0.0, 1.0, kInf)});
}

inline lorentzkit::RadialProfile pure_power(double c, double alpha) {
  using namespace lorentzkit;
  return RadialProfile({make_segment(c, alpha, 0.0, 0.0, kInf)});
}

inline double omega3() { return 4.0 * M_PI / 3.0; }

}  // namespace testing
