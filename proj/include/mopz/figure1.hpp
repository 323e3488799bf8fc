#pragma once

#include "mopz/io.hpp"
#include "mopz/zeros.hpp"

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace mopz {

// Reproduction of the degree-10 / degree-8 pair P_5^{(-1/2,1,0)}(x;-2) and
// P_4^{(1/2,2,1)}(x;-2) on [-2,1]: sampled curves, both zero sets, and the
// consecutive-interlacing verdicts per subinterval.
struct Figure1Result {
  Poly outer;  // n = 5
  Poly inner;  // n = 4, parameters raised by one
  ZeroSet outer_zeros;
  ZeroSet inner_zeros;
  InterlacingVerdict negative_verdict;
  InterlacingVerdict positive_verdict;
  std::vector<std::array<Real, 3>> samples;  // x, outer(x), inner(x)
};

Figure1Result run_figure1(int sample_count = 2001);

void write_figure1_csv(std::ostream& os, const Figure1Result& fig, const RunManifest& manifest);
void write_figure1_gnuplot(std::ostream& os, const std::string& csv_path);
Json figure1_json(const Figure1Result& fig, const RunManifest& manifest);

}  // namespace mopz
