// Times the OpenMP sampling sweeps against their serial reference loops and
// verifies that both produce bit-identical estimates.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "eddeg/montecarlo.hpp"
#include "eddeg/tensors.hpp"

using namespace eddeg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const AEDEstimate& a, const AEDEstimate& b) {
  return a.mean == b.mean && a.std_error == b.std_error && a.histogram == b.histogram &&
         a.retries == b.retries;
}

struct Case {
  std::string model;
  long long samples;
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  double scale = 1.0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (a == "--scale" && i + 1 < argc) {
      scale = std::strtod(argv[++i], nullptr);
    } else {
      std::fprintf(stderr, "usage: bench_montecarlo [--seed S] [--scale F]\n");
      return 2;
    }
  }

  std::vector<Case> cases = {
      {"ellipse", 40000}, {"cardioid", 40000},    {"rnc:3", 40000},
      {"gamma3", 20000},  {"tensor:2,3,3", 400000},
  };

  std::printf("%-14s %10s %10s %10s %8s %6s\n", "model", "samples", "serial_s", "parallel_s",
              "speedup", "equal");
  for (const Case& c : cases) {
    long long n = static_cast<long long>(static_cast<double>(c.samples) * scale);
    if (n < 100) n = 100;
    ModelSpec spec = parse_model(c.model);

    auto t0 = std::chrono::steady_clock::now();
    AEDEstimate serial = aed_estimate_serial(spec, n, seed);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    AEDEstimate parallel = aed_estimate(spec, n, seed, 0);
    double tp = seconds_since(t0);

    std::printf("%-14s %10lld %10.3f %10.3f %8.2fx %6s\n", c.model.c_str(), n, ts, tp,
                ts / tp, same(serial, parallel) ? "yes" : "NO");
  }
  return 0;
}
