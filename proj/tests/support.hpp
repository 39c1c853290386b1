#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brokentoric/cli/document.hpp"
#include "brokentoric/exactla/rational.hpp"
#include "brokentoric/polytope/complex.hpp"

namespace support {

inline brokentoric::exactla::Rational q(long num, long den = 1) { return brokentoric::exactla::make_rational(num, den); }

inline std::string golden_path(const std::string& name) { return std::string(BROKENTORIC_GOLDEN_DIR) + "/" + name; }

inline brokentoric::polytope::PolytopeComplex load_golden(const std::string& name) {
  return brokentoric::cli::build(brokentoric::cli::parse_document(brokentoric::cli::read_file(golden_path(name))));
}

inline std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace support
