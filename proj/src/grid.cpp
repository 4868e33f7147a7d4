#include "uncertlab/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "uncertlab/fft.hpp"

namespace uncertlab {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double canonical_u01(std::mt19937_64& rng) {
  // 53 random bits; avoids the implementation-defined library distributions.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

Grid1D::Grid1D(int n, double len, double origin_, double hbar_)
    : n_points(n), length(len), origin(origin_), hbar(hbar_) {
  if (!is_power_of_two(n_points) || n_points < 16)
    throw DomainError("Grid1D: n_points must be a power of two >= 16");
  if (!(length > 0.0)) throw DomainError("Grid1D: length must be positive");
  if (!(hbar > 0.0)) throw DomainError("Grid1D: hbar must be positive");
}

Grid1D Grid1D::centered(int n, double len, double hbar) {
  return Grid1D(n, len, -0.5 * len, hbar);
}

GridWaveFn::GridWaveFn(Grid1D grid, std::vector<Complex> amplitudes, Rep rep,
                       bool normalize)
    : grid_(grid), rep_(rep), amp_(std::move(amplitudes)) {
  if (static_cast<int>(amp_.size()) != grid_.n_points)
    throw DomainError("GridWaveFn: amplitude count does not match grid");
  double n2 = norm_squared();
  if (normalize) {
    if (n2 <= 0.0) throw DomainError("GridWaveFn: cannot normalize zero state");
    double scale = 1.0 / std::sqrt(n2);
    for (auto& a : amp_) a *= scale;
    normalized_ = true;
  } else {
    normalized_ = std::abs(n2 - 1.0) < 1e-10;
  }
}

double GridWaveFn::cell() const {
  return rep_ == Rep::position ? grid_.spacing() : grid_.momentum_step();
}

double GridWaveFn::coordinate(int j) const {
  return rep_ == Rep::position ? grid_.position(j) : grid_.momentum(j);
}

double GridWaveFn::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s * cell();
}

double GridWaveFn::density(int j) const { return std::norm(amp_[j]); }

GridWaveFn gaussian_packet(const Grid1D& grid, double center, double sigma,
                           double p0) {
  const double dx = grid.spacing();
  if (sigma < 4.0 * dx)
    throw ResolutionError("gaussian_packet: sigma below 4 grid spacings");
  const double lo = grid.origin, hi = grid.origin + grid.length;
  if (center - 6.0 * sigma < lo || center + 6.0 * sigma > hi)
    throw BoundaryError("gaussian_packet: support within 6 sigma of the wrap");
  std::vector<Complex> amp(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    double x = grid.position(j) - center;
    amp[j] = std::exp(Complex(-x * x / (4.0 * sigma * sigma), p0 * x / grid.hbar));
  }
  return GridWaveFn(grid, std::move(amp), Rep::position, true);
}

GridWaveFn plane_wave(const Grid1D& grid, double p) {
  const double dp = grid.momentum_step();
  double k = p / dp;
  if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, std::abs(k)))
    throw DomainError("plane_wave: momentum not on the 2*pi*hbar*k/L lattice");
  std::vector<Complex> amp(grid.n_points);
  const double a = 1.0 / std::sqrt(grid.length);
  for (int j = 0; j < grid.n_points; ++j)
    amp[j] = a * std::exp(kI * (p * grid.position(j) / grid.hbar));
  return GridWaveFn(grid, std::move(amp), Rep::position, true);
}

int packet_count(const Grid1D& grid, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("packet_count: alpha must be positive");
  return static_cast<int>(std::floor(grid.length / alpha * (1.0 + 1e-12)));
}

int bin_of(const Grid1D& grid, double alpha, double x) {
  return static_cast<int>(std::floor((x - grid.origin) / alpha));
}

std::pair<double, double> bin_interval(const Grid1D& grid, double alpha, int bin) {
  return {grid.origin + bin * alpha, grid.origin + (bin + 1) * alpha};
}

GridWaveFn packet_superposition(const Grid1D& grid, double alpha,
                                const std::vector<Complex>& amplitudes) {
  const double dx = grid.spacing();
  if (alpha < 8.0 * dx)
    throw ResolutionError("packet_superposition: packet width below 8 grid spacings");
  const int max_bins = packet_count(grid, alpha);
  int n_packets = amplitudes.empty() ? max_bins : static_cast<int>(amplitudes.size());
  if (n_packets < 1) throw DomainError("packet_superposition: no packets fit the grid");
  if (n_packets > max_bins)
    throw DomainError("packet_superposition: packets overlap (N*alpha exceeds L)");

  const double sigma = alpha / 6.0;  // truncation at 3 sigma = bin half-width
  std::vector<Complex> amp(grid.n_points, Complex{0.0, 0.0});
  std::vector<double> bin_weight(n_packets, 0.0);
  std::vector<int> bin_index(grid.n_points, -1);
  for (int j = 0; j < grid.n_points; ++j) {
    int b = bin_of(grid, alpha, grid.position(j));
    if (b < 0 || b >= n_packets) continue;
    double u = grid.position(j) - (grid.origin + (b + 0.5) * alpha);
    double g = std::exp(-u * u / (2.0 * sigma * sigma));
    amp[j] = g;
    bin_index[j] = b;
    bin_weight[b] += g * g * dx;
  }
  for (int b = 0; b < n_packets; ++b)
    if (bin_weight[b] <= 0.0)
      throw ResolutionError("packet_superposition: empty bin at this resolution");
  double total = 0.0;
  std::vector<Complex> coeff(n_packets);
  for (int b = 0; b < n_packets; ++b) {
    coeff[b] = amplitudes.empty() ? Complex{1.0 / std::sqrt(double(n_packets)), 0.0}
                                  : amplitudes[b];
    total += std::norm(coeff[b]);
  }
  if (total <= 0.0) throw DomainError("packet_superposition: all amplitudes vanish");
  for (int j = 0; j < grid.n_points; ++j) {
    int b = bin_index[j];
    if (b >= 0) amp[j] *= coeff[b] / std::sqrt(bin_weight[b] * total);
  }
  return GridWaveFn(grid, std::move(amp), Rep::position, true);
}

GridWaveFn spectral_transform(const GridWaveFn& wf) {
  const Grid1D& g = wf.grid();
  const int n = g.n_points;
  std::vector<Complex> work(n);

  if (wf.rep() == Rep::position) {
    std::copy(wf.amplitudes().begin(), wf.amplitudes().end(), work.begin());
    detail::fft_inplace(work, false);
    // reorder to ascending momenta and attach the origin phase
    std::vector<Complex> out(n);
    const double scale = g.spacing() / std::sqrt(2.0 * kPi * g.hbar);
    for (int k = 0; k < n; ++k) {
      double p = g.momentum(k);
      Complex phase = std::exp(-kI * (p * g.origin / g.hbar));
      out[k] = scale * phase * work[(k + n / 2) % n];
    }
    return GridWaveFn(g, std::move(out), Rep::momentum, false);
  }

  // momentum -> position
  for (int k = 0; k < n; ++k) {
    double p = g.momentum(k);
    Complex phase = std::exp(kI * (p * g.origin / g.hbar));
    work[(k + n / 2) % n] = wf.amplitudes()[k] * phase;
  }
  detail::fft_inplace(work, true);
  const double scale = g.momentum_step() / std::sqrt(2.0 * kPi * g.hbar);
  for (auto& a : work) a *= scale;
  return GridWaveFn(g, std::move(work), Rep::position, false);
}

GridWaveFn free_propagate(const GridWaveFn& wf, double mass, double time) {
  if (!(mass > 0.0)) throw DomainError("free_propagate: mass must be positive");
  if (time < 0.0) throw DomainError("free_propagate: time must be non-negative");
  const Grid1D& g = wf.grid();
  bool started_in_position = (wf.rep() == Rep::position);
  GridWaveFn mom = started_in_position ? spectral_transform(wf) : wf;
  std::vector<Complex> amp = mom.amplitudes();
  for (int k = 0; k < g.n_points; ++k) {
    double p = g.momentum(k);
    amp[k] *= std::exp(-kI * (p * p * time / (2.0 * mass * g.hbar)));
  }
  GridWaveFn evolved(g, std::move(amp), Rep::momentum, false);
  return started_in_position ? spectral_transform(evolved) : evolved;
}

Stats coordinate_stats(const GridWaveFn& wf) {
  double w = 0.0, m1 = 0.0;
  for (int j = 0; j < wf.size(); ++j) {
    double w_j = wf.density(j);
    w += w_j;
    m1 += w_j * wf.coordinate(j);
  }
  if (w <= 0.0) throw DomainError("coordinate_stats: zero-norm state");
  double mean = m1 / w;
  double m2 = 0.0;
  for (int j = 0; j < wf.size(); ++j) {
    double d = wf.coordinate(j) - mean;
    m2 += wf.density(j) * d * d;
  }
  return Stats{mean, std::sqrt(m2 / w)};
}

Stats position_stats(const GridWaveFn& wf) {
  return wf.rep() == Rep::position ? coordinate_stats(wf)
                                   : coordinate_stats(spectral_transform(wf));
}

Stats momentum_stats(const GridWaveFn& wf) {
  return wf.rep() == Rep::momentum ? coordinate_stats(wf)
                                   : coordinate_stats(spectral_transform(wf));
}

double boundary_support(const GridWaveFn& wf) {
  return (wf.density(0) + wf.density(wf.size() - 1)) * wf.cell();
}

double sector_probability(const GridWaveFn& wf, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("sector_probability: empty interval");
  const double dom_lo = wf.coordinate(0);
  const double dom_hi = wf.coordinate(wf.size() - 1) + wf.cell();
  const double slack = 1e-9 * wf.cell();
  if (lo < dom_lo - slack || hi > dom_hi + slack)
    throw DomainError("sector_probability: interval outside the grid domain");
  double s = 0.0;
  for (int j = 0; j < wf.size(); ++j) {
    double x = wf.coordinate(j);
    if (x >= lo && x < hi) s += wf.density(j);
  }
  return std::min(1.0, s * wf.cell() / wf.norm_squared());
}

Reduction reduce(const GridWaveFn& wf, double lo, double hi,
                 double probability_floor) {
  double p = sector_probability(wf, lo, hi);
  if (p < probability_floor)
    throw EmptySectorError("reduce: sector probability below floor");
  std::vector<Complex> amp(wf.size());
  for (int j = 0; j < wf.size(); ++j) {
    double x = wf.coordinate(j);
    amp[j] = (x >= lo && x < hi) ? wf.amplitudes()[j] : Complex{0.0, 0.0};
  }
  return Reduction{GridWaveFn(wf.grid(), std::move(amp), wf.rep(), true), p};
}

std::vector<double> born_samples(const GridWaveFn& wf, std::uint64_t seed, int count) {
  if (count < 0) throw DomainError("born_samples: negative count");
  std::vector<double> cdf(wf.size());
  double acc = 0.0;
  for (int j = 0; j < wf.size(); ++j) {
    acc += wf.density(j);
    cdf[j] = acc;
  }
  if (acc <= 0.0) throw DomainError("born_samples: zero-norm state");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double u = canonical_u01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    int j = static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), wf.size() - 1));
    out.push_back(wf.coordinate(j));
  }
  return out;
}

void write_density_csv(const GridWaveFn& wf, std::ostream& out) {
  std::string text = wf.rep() == Rep::position ? "position,density\n"
                                               : "momentum,density\n";
  for (int j = 0; j < wf.size(); ++j) {
    append_double(text, wf.coordinate(j));
    text.push_back(',');
    append_double(text, wf.density(j));
    text.push_back('\n');
  }
  out << text;
}

}  // namespace uncertlab
