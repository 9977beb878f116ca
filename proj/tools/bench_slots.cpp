// Compares the serial base-slot loop against the threaded one on a fully
// supervised ensemble (every instance trains, so the slot loop dominates).
// Results are bit-identical either way; this only measures time.

#include <cstdio>
#include <cstdlib>
#include <cstdint>

#include "driftstream/fase.hpp"
#include "driftstream/generators.hpp"
#include "driftstream/prequential.hpp"

namespace {

constexpr std::uint64_t kSeed = 7;

double bench(int n_learners, bool parallel, std::uint64_t length) {
  using namespace driftstream;
  DriftStream stream(Family::Sea, {}, length, substream(kSeed, 1));
  EnsembleConfig config{n_learners, 0.005, 0.001, substream(kSeed, 3), parallel};
  FaseSupervised policy(family_schema(Family::Sea), config);
  return run_prequential(stream, policy, length, auto_window(length), kSeed).runtime_seconds;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t length = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  std::printf("sea stream, %llu instances, fully labeled\n",
              static_cast<unsigned long long>(length));
  std::printf("%8s %12s %12s %10s %14s\n", "slots", "serial_s", "threaded_s", "speedup",
              "us/inst serial");
  for (int n : {10, 20, 40, 80}) {
    const double serial = bench(n, false, length);
    const double threaded = bench(n, true, length);
    std::printf("%8d %12.3f %12.3f %10.2f %14.3f\n", n, serial, threaded,
                threaded > 0 ? serial / threaded : 0.0,
                1e6 * serial / static_cast<double>(length));
  }
  return 0;
}
