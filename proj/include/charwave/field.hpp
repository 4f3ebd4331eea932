#pragma once

#include <cstddef>
#include <vector>

namespace charwave {

// Dense row-major scalar field over a rectangular index lattice. Solvers fix
// the axis meaning: see Grid1 (i -> T, j -> Y) and Grid2 (i -> X, j -> Y).
struct Field {
  std::size_t ni = 0, nj = 0;
  std::vector<double> a;

  Field() = default;
  Field(std::size_t ni_, std::size_t nj_, double fill = 0.0)
      : ni(ni_), nj(nj_), a(ni_ * nj_, fill) {}

  double& at(std::size_t i, std::size_t j) { return a[i * nj + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * nj + j]; }
  double* row(std::size_t i) { return a.data() + i * nj; }
  const double* row(std::size_t i) const { return a.data() + i * nj; }
};

// Inverse-mapped solution samples: one row per in-domain grid node, carrying
// the physical point, the solution value, and the characteristic coordinates
// it came from (named (a,b) = (Y,T) for the unidirectional family and
// (a,b) = (X,Y) for the wave family).
struct PhysicalSample {
  double t = 0.0, x = 0.0, u = 0.0, a = 0.0, b = 0.0;
};

struct PhysicalSamples {
  std::vector<PhysicalSample> rows;  // deterministic row-major node order
  const char* a_name = "A";
  const char* b_name = "B";
};

}  // namespace charwave
