#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "uncertlab/common.hpp"

namespace uncertlab {

// Periodic one-dimensional lattice. Positions are x_j = origin + j*dx,
// conjugate momenta the discrete lattice p_k = 2*pi*hbar*k/L with k in the
// symmetric range [-n/2, n/2).
struct Grid1D {
  int n_points = 0;
  double length = 0.0;
  double origin = 0.0;
  double hbar = 1.0;

  Grid1D() = default;
  Grid1D(int n, double len, double origin_, double hbar_ = 1.0);
  static Grid1D centered(int n, double len, double hbar = 1.0);

  double spacing() const { return length / n_points; }
  double momentum_step() const { return 2.0 * kPi * hbar / length; }
  double position(int j) const { return origin + j * spacing(); }
  // k-th momentum in ascending lattice order, k = 0..n-1.
  double momentum(int k) const { return momentum_step() * (k - n_points / 2); }
  double max_momentum() const { return kPi * hbar / spacing(); }

  bool operator==(const Grid1D&) const = default;
};

enum class Rep { position, momentum };

// Complex amplitudes sampled on a Grid1D, in position or momentum
// representation. Momentum-representation samples are stored in ascending
// lattice order. Immutable after construction.
class GridWaveFn {
 public:
  GridWaveFn(Grid1D grid, std::vector<Complex> amplitudes, Rep rep = Rep::position,
             bool normalize = true);

  const Grid1D& grid() const { return grid_; }
  Rep rep() const { return rep_; }
  bool normalized() const { return normalized_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  int size() const { return static_cast<int>(amp_.size()); }

  // Integration measure per sample: dx or dp depending on representation.
  double cell() const;
  // Coordinate value of sample j (a position or a momentum).
  double coordinate(int j) const;

  double norm_squared() const;       // sum |amp|^2 * cell
  double density(int j) const;       // |amp_j|^2, per unit coordinate

 private:
  Grid1D grid_;
  Rep rep_;
  std::vector<Complex> amp_;
  bool normalized_;
};

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

// --- state constructors ---------------------------------------------------

// Normalized Gaussian, exp(-(x-center)^2/(4 sigma^2) + i p0 (x-center)/hbar).
// Requires sigma >= 4*spacing and center within 6*sigma of neither wrap.
GridWaveFn gaussian_packet(const Grid1D& grid, double center, double sigma, double p0);

// Momentum eigenstate (1/sqrt(L)) exp(i p x / hbar); p must sit on the
// momentum lattice.
GridWaveFn plane_wave(const Grid1D& grid, double p);

// Superposition of non-overlapping packets of width alpha tiling the grid
// from its origin; packet n is a Gaussian truncated at 3 sigma inside its
// width-alpha bin (sigma = alpha/6) and carries amplitude a_n. Empty
// `amplitudes` means uniform weights over all floor(L/alpha) bins.
GridWaveFn packet_superposition(const Grid1D& grid, double alpha,
                                const std::vector<Complex>& amplitudes = {});

// Number of width-alpha bins that tile the grid, and the bin holding x.
int packet_count(const Grid1D& grid, double alpha);
int bin_of(const Grid1D& grid, double alpha, double x);
std::pair<double, double> bin_interval(const Grid1D& grid, double alpha, int bin);

// --- transforms -----------------------------------------------------------

// Unitary position <-> momentum transform (Parseval-exact up to roundoff).
GridWaveFn spectral_transform(const GridWaveFn& wf);

// Free evolution for time t >= 0 with mass m; diagonal in momentum space.
GridWaveFn free_propagate(const GridWaveFn& wf, double mass, double time);

// --- statistics and reduction ----------------------------------------------

// Moments of the stored representation's coordinate.
Stats coordinate_stats(const GridWaveFn& wf);
Stats position_stats(const GridWaveFn& wf);
Stats momentum_stats(const GridWaveFn& wf);

// Probability mass of the two outermost cells; used to reject states whose
// support touches the periodic wrap.
double boundary_support(const GridWaveFn& wf);

// Integral of |psi|^2 over [lo, hi); sample j belongs to the interval iff
// lo <= coordinate(j) < hi. The interval must lie inside the domain.
double sector_probability(const GridWaveFn& wf, double lo, double hi);

struct Reduction {
  GridWaveFn state;
  double probability;  // pre-reduction weight of the sector
};

// Projective reduction onto [lo, hi): zero outside, renormalize.
Reduction reduce(const GridWaveFn& wf, double lo, double hi,
                 double probability_floor = 1e-12);

// --- sampling and export -----------------------------------------------------

// Born-rule samples of the coordinate, drawn by inverse-CDF with a
// deterministic 64-bit generator; reproducible across runs for fixed seed.
std::vector<double> born_samples(const GridWaveFn& wf, std::uint64_t seed, int count);

// Two-column CSV (coordinate, probability density).
void write_density_csv(const GridWaveFn& wf, std::ostream& out);

}  // namespace uncertlab
