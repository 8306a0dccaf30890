#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace eddeg {

struct AEDEstimate {
  std::string model;
  long long samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::map<int, long long> histogram;  // critical-count value -> frequency; empty if N/A
  int retries = 0;
};

}  // namespace eddeg
