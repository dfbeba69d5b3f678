#include "nlslab/grid.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace nlslab {

Grid make_grid(int n, double extent, int points) {
  if (n != 1 && n != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
  if (!(extent > 0.0)) throw std::invalid_argument("grid extent must be positive");
  if (points < 8 || points % 2 != 0) throw std::invalid_argument("grid points must be even and >= 8");
  Grid g;
  g.dim = n;
  g.extent = extent;
  g.points = points;
  double h = 2.0 * extent / points;
  g.cell_volume = (n == 1) ? h : h * h;
  return g;
}

ArrayXd axis_coordinates(const Grid& g) {
  ArrayXd x(g.points);
  double h = g.spacing();
  for (int j = 0; j < g.points; ++j) x[j] = -g.extent + j * h;
  return x;
}

ArrayXd axis_wavenumbers(const Grid& g) {
  ArrayXd k(g.points);
  double dk = M_PI / g.extent;
  int half = g.points / 2;
  for (int m = 0; m < g.points; ++m) k[m] = dk * (m < half ? m : m - g.points);
  return k;
}

ArrayXd coordinate_field(const Grid& g, int axis) {
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("axis out of range");
  ArrayXd x = axis_coordinates(g);
  if (g.dim == 1) return x;
  ArrayXd out(g.size());
  int N = g.points;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) out[std::int64_t(i) * N + j] = (axis == 0) ? x[i] : x[j];
  return out;
}

RealField laplacian_multiplier(const Grid& g) {
  ArrayXd k = axis_wavenumbers(g);
  RealField f{g, ArrayXd(g.size())};
  if (g.dim == 1) {
    f.samples = -k.square();
  } else {
    int N = g.points;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) f.samples[std::int64_t(i) * N + j] = -(k[i] * k[i] + k[j] * k[j]);
  }
  return f;
}

RealField bilaplacian_multiplier(const Grid& g) {
  RealField f = laplacian_multiplier(g);
  f.samples = f.samples.square();
  return f;
}

namespace {

// FFTW plans are cached per (dim, N, sign). Plan creation is not thread-safe,
// execution via the new-array interface is.
struct PlanCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int>, fftw_plan> plans;

  fftw_plan get(int dim, int N, int sign) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(dim, N, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    std::int64_t total = (dim == 1) ? N : std::int64_t(N) * N;
    fftw_complex* buf_in = fftw_alloc_complex(total);
    fftw_complex* buf_out = fftw_alloc_complex(total);
    fftw_plan p = (dim == 1)
                      ? fftw_plan_dft_1d(N, buf_in, buf_out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
                      : fftw_plan_dft_2d(N, N, buf_in, buf_out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf_in);
    fftw_free(buf_out);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans.emplace(key, p);
    return p;
  }
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

ComplexField transform(const ComplexField& u, int sign) {
  fftw_plan p = plan_cache().get(u.grid.dim, u.grid.points, sign);
  ComplexField out{u.grid, ArrayXcd(u.samples.size())};
  // std::complex<double> is layout-compatible with fftw_complex
  auto* in_ptr = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(u.samples.data()));
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.samples.data());
  fftw_execute_dft(p, in_ptr, out_ptr);
  return out;
}

}  // namespace

ComplexField to_spectral(const ComplexField& u) {
  if (u.samples.size() != u.grid.size()) throw std::invalid_argument("field size does not match grid");
  return transform(u, FFTW_FORWARD);
}

ComplexField from_spectral(const ComplexField& uhat) {
  if (uhat.samples.size() != uhat.grid.size()) throw std::invalid_argument("field size does not match grid");
  ComplexField out = transform(uhat, FFTW_BACKWARD);
  out.samples /= double(uhat.grid.size());
  return out;
}

double integrate(const RealField& f) { return f.grid.cell_volume * f.samples.sum(); }

Complex inner(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid, b.grid);
  return a.grid.cell_volume * (a.samples.conjugate() * b.samples).sum();
}

double l2_norm(const ComplexField& u) {
  return std::sqrt(u.grid.cell_volume * u.samples.abs2().sum());
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

namespace {

// Windowed sums along one axis of a (rows x N) row-major table, all cyclic
// offsets. Window covers `full` whole cells plus `frac` of the next one.
void axis_window_sums(const double* data, std::int64_t rows, int N, int full, double frac,
                      double* out) {
  for (std::int64_t r = 0; r < rows; ++r) {
    const double* row = data + r * N;
    for (int s = 0; s < N; ++s) {
      double acc = 0.0;
      for (int t = 0; t < full; ++t) acc += row[(s + t) % N];
      acc += frac * row[(s + full) % N];
      out[r * N + s] = acc;
    }
  }
}

}  // namespace

double local_mass_sup(const ComplexField& u, double window) {
  const Grid& g = u.grid;
  if (!(window > 0.0) || window > 2.0 * g.extent + 1e-12 * g.extent)
    throw std::invalid_argument("window must lie in (0, 2L]");
  double h = g.spacing();
  int full = int(std::floor(window / h + 1e-12));
  if (full > g.points) full = g.points;
  double frac = (window - full * h) / h;
  if (full == g.points) frac = 0.0;  // window is the whole axis

  ArrayXd dens = u.samples.abs2();
  int N = g.points;
  if (g.dim == 1) {
    ArrayXd sums(N);
    axis_window_sums(dens.data(), 1, N, full, frac, sums.data());
    return h * sums.maxCoeff();
  }
  // pass 1: windows along the fast axis for every row; pass 2: along rows.
  ArrayXd pass1(std::int64_t(N) * N);
  axis_window_sums(dens.data(), N, N, full, frac, pass1.data());
  // transpose so offsets of axis 0 become the fast axis
  ArrayXd pass1t(std::int64_t(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) pass1t[std::int64_t(j) * N + i] = pass1[std::int64_t(i) * N + j];
  ArrayXd pass2(std::int64_t(N) * N);
  axis_window_sums(pass1t.data(), N, N, full, frac, pass2.data());
  return h * h * pass2.maxCoeff();
}

}  // namespace nlslab
