#pragma once

// Periodic truncation of R^n to the box [-L, L)^n with uniform sampling and
// spectral differentiation. Dimensions 1 and 2 are supported; fields are
// stored row-major over axes (last axis fastest).

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace nlslab {

using Complex = std::complex<double>;
using ArrayXd = Eigen::ArrayXd;
using ArrayXcd = Eigen::ArrayXcd;

struct Grid {
  int dim = 1;             // n, 1 or 2
  double extent = 0.0;     // half-width L; box is [-L, L) per axis
  int points = 0;          // samples per axis N (even, >= 8)
  double cell_volume = 0;  // (2L/N)^n

  double spacing() const { return 2.0 * extent / points; }
  std::int64_t size() const {
    std::int64_t s = 1;
    for (int a = 0; a < dim; ++a) s *= points;
    return s;
  }
  bool operator==(const Grid&) const = default;
};

struct ComplexField {
  Grid grid;
  ArrayXcd samples;
};

struct RealField {
  Grid grid;
  ArrayXd samples;
};

// Sample points x_j = -L + j*(2L/N) along one axis.
ArrayXd axis_coordinates(const Grid& g);
// Wavenumbers (pi/L)*m in FFT layout m = 0..N/2-1, -N/2..-1.
ArrayXd axis_wavenumbers(const Grid& g);
// Coordinate of the given axis as a full field (row-major broadcast).
ArrayXd coordinate_field(const Grid& g, int axis);

Grid make_grid(int n, double extent, int points);

// Spectral multiplier fields, indexed in spectral (FFT) layout.
RealField laplacian_multiplier(const Grid& g);    // -|k|^2
RealField bilaplacian_multiplier(const Grid& g);  // +|k|^4

// Unnormalized forward DFT / 1/N^n-scaled inverse. Round trip is the
// identity to ~1e-15; Parseval holds with weight cell_volume/N^n.
ComplexField to_spectral(const ComplexField& u);
ComplexField from_spectral(const ComplexField& uhat);

// Riemann-sum quadrature: cell_volume * sum(samples).
double integrate(const RealField& f);

// L2 pairing cell_volume * sum(conj(a)*b).
Complex inner(const ComplexField& a, const ComplexField& b);

// sqrt(cell_volume * sum |u|^2)
double l2_norm(const ComplexField& u);

// Maximum over grid-aligned cubes of side `window` (cyclic, one-cell stride)
// of the quadrature of |u|^2 over the cube. The trailing partial cell is
// weighted by its overlap fraction so the cube has side exactly `window`.
double local_mass_sup(const ComplexField& u, double window);

// Throws std::invalid_argument unless a and b live on the same grid.
void require_same_grid(const Grid& a, const Grid& b);

}  // namespace nlslab
