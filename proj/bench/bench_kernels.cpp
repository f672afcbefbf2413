// Times the OpenMP kernels against their serial reference implementations:
// the identity-validation quintuple scan and the exhaustive enumeration.
//
//   bench_kernels [--dim N] [--field Q|Fp:<p>] [--reps K]

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "leib3/explorer.hpp"
#include "leib3/generators.hpp"

using namespace leib3;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    body();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name,
              serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t dim = 12;
  FieldSpec field = FieldSpec::prime(5);
  int reps = 3;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--dim")
      dim = std::stoul(argv[i + 1]);
    else if (flag == "--field")
      field = FieldSpec::parse(argv[i + 1]);
    else if (flag == "--reps")
      reps = std::stoi(argv[i + 1]);
    else {
      std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  // validation kernel: a central-family instance large enough that the
  // n^5 quintuple scan dominates
  const std::size_t central = 2;
  const Algebra3 subject =
      central_family({dim - central, central, 987654321, field});
  std::printf("validate subject: dim %zu over %s, %zu stored brackets\n",
              subject.dim(), field.str().c_str(), subject.tensor().entry_count());

  volatile std::size_t sink = 0;
  const double validate_serial = time_best_of(reps, [&] {
    sink = sink + subject.validate_serial(1).size();
  });
  const double validate_parallel = time_best_of(reps, [&] {
    sink = sink + subject.validate(1).size();
  });
  report("validate (n^5 scan)", validate_serial, validate_parallel);

  // enumeration kernel: the full F_2 dim-2 space, 65536 candidates
  const FieldSpec f2 = FieldSpec::prime(2);
  EnumerationSummary last{};
  const double enum_serial =
      time_best_of(reps, [&] { last = enumerate_all_serial(f2, 2); });
  const double enum_parallel =
      time_best_of(reps, [&] { last = enumerate_all(f2, 2); });
  report("enumerate (F2, dim 2)", enum_serial, enum_parallel);
  std::printf("enumeration valid_count: %llu of %llu candidates\n",
              static_cast<unsigned long long>(last.valid_count),
              static_cast<unsigned long long>(last.candidates));
  return 0;
}
