#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace relalg {

/// A known representation shipped under fixtures/.
struct Fixture {
  std::string file;
  std::string algebra;
  std::string description;
  nlohmann::json content;
  bool expect_valid = true;
};

std::vector<Fixture> shipped_fixtures();

}  // namespace relalg
