// Compares the OpenMP enumeration kernel against the serial reference and
// reports timings. Also cross-checks that both produce identical output.

#include "csk/seifert.hpp"
#include "csk/spectra.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_components(const std::vector<csk::FlatComponent>& a,
                     const std::vector<csk::FlatComponent>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rot.l != b[i].rot.l || a[i].e != b[i].e ||
        a[i].rot.holonomy_sign != b[i].rot.holonomy_sign)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::vector<csk::Int>> cases = {
      {2, 3, 5, 7},
      {2, 3, 5, 7, 11},
      {3, 5, 7, 11, 13},
      {2, 3, 5, 7, 11, 13},
  };
  if (argc > 1) {
    cases.clear();
    std::vector<csk::Int> mult;
    for (int i = 1; i < argc; ++i) mult.push_back(csk::Int(argv[i]));
    cases.push_back(std::move(mult));
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both columns run serially\n";
#endif
  std::cout << "multiplicities\tcomponents\tserial_s\tparallel_s\tspeedup\n";

  for (const auto& mult : cases) {
    const csk::SeifertData data = csk::seifert_data(mult);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = csk::enumerate_components_serial(data);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = csk::enumerate_components(data);
    const double tp = seconds_since(t0);

    if (!same_components(serial, parallel)) {
      std::cerr << "MISMATCH between serial and parallel enumeration\n";
      return 1;
    }

    std::string name;
    for (std::size_t i = 0; i < mult.size(); ++i)
      name += (i ? "," : "") + mult[i].str();
    std::cout << name << "\t" << serial.size() << "\t" << ts << "\t" << tp
              << "\t" << (tp > 0 ? ts / tp : 0.0) << "\n";
  }
  return 0;
}
