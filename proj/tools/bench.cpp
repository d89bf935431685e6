// Compares the serial reference sweeps against the OpenMP kernels and checks
// that both produce identical verdicts while timing them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "hyp/theorems.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<hyp::Verdict()>& run, hyp::Verdict& out) {
  const auto start = Clock::now();
  out = run();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void compare(const std::string& name, const std::function<hyp::Verdict()>& serial,
             const std::function<hyp::Verdict()>& parallel) {
  hyp::Verdict a;
  hyp::Verdict b;
  const double ts = time_of(serial, a);
  const double tp = time_of(parallel, b);
  const bool same = a == b;
  if (!same) ++failures;
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  verdicts %s\n",
              name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  using hyp::TheoremId;
  const hyp::ExecPolicy parallel{};  // all cores, auto chunking

  compare(
      "ideal sweep, order 2",
      [] { return hyp::verify_exhaustive_serial(TheoremId::Prop8, 2); },
      [&] { return hyp::verify_exhaustive(TheoremId::Prop8, 2, 2, parallel); });
  compare(
      "filter sweep, order 2",
      [] { return hyp::verify_exhaustive_serial(TheoremId::Prop12, 2); },
      [&] { return hyp::verify_exhaustive(TheoremId::Prop12, 2, 2, parallel); });
  compare(
      "duality sweep, order 2 k=6",
      [] { return hyp::verify_exhaustive_serial(TheoremId::Prop17, 2, 6); },
      [&] { return hyp::verify_exhaustive(TheoremId::Prop17, 2, 6, parallel); });
  compare(
      "sampled order 3, 20000 draws",
      [] { return hyp::verify_sampled_serial(TheoremId::Prop8, 3, 1, 1, 20000); },
      [&] { return hyp::verify_sampled(TheoremId::Prop8, 3, 1, 1, 20000, parallel); });
  compare(
      "sampled order 4, 4000 draws",
      [] { return hyp::verify_sampled_serial(TheoremId::Prop17, 4, 2, 1, 4000); },
      [&] { return hyp::verify_sampled(TheoremId::Prop17, 4, 2, 1, 4000, parallel); });

  if (failures != 0) {
    std::fprintf(stderr, "%d sweep(s) disagreed between serial and parallel runs\n", failures);
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
