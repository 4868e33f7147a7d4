#pragma once

#include <memory>
#include <vector>

#include "uncertlab/grid.hpp"

namespace uncertlab {

// Which physical coordinates the two grid axes carry. For x2_q the first
// axis is x2 and the second the relative coordinate q = x1 - x2; the
// conjugate momenta of the axes are then (P, p1). y2_qy is the transverse
// analog and resolves identically.
enum class CoordPair { x1_x2, x2_q, y2_qy };

// a*x1 + b*x2 + c in physical particle coordinates.
struct LinearPosition {
  double x1 = 0.0;
  double x2 = 0.0;
  double c0 = 0.0;
};

// a*p1 + b*p2 in physical particle momenta.
struct LinearMomentum {
  double p1 = 0.0;
  double p2 = 0.0;
};

inline constexpr LinearPosition kX1{1.0, 0.0, 0.0};
inline constexpr LinearPosition kX2{0.0, 1.0, 0.0};
inline constexpr LinearPosition kQ{1.0, -1.0, 0.0};
inline constexpr LinearMomentum kP1{1.0, 0.0};
inline constexpr LinearMomentum kP2{0.0, 1.0};
inline constexpr LinearMomentum kPTotal{1.0, 1.0};

// Complex amplitudes on a two-axis periodic grid. Product states keep their
// factors (moments then reduce to one-dimensional statistics); generic
// states store the dense amplitude matrix, row index = first axis.
class TwoBodyWaveFn {
 public:
  static TwoBodyWaveFn product(CoordPair coords, GridWaveFn factor_a,
                               GridWaveFn factor_b);
  static TwoBodyWaveFn dense(CoordPair coords, Grid1D grid_a, Grid1D grid_b,
                             std::vector<Complex> amplitudes);

  CoordPair coords() const { return coords_; }
  const Grid1D& grid_a() const { return grid_a_; }
  const Grid1D& grid_b() const { return grid_b_; }
  bool is_product() const { return product_.has_value(); }
  const GridWaveFn& factor_a() const;
  const GridWaveFn& factor_b() const;
  Complex amplitude(int i, int j) const;

  double hbar() const { return grid_a_.hbar; }
  double norm_squared() const;

  // <obs> and <obs^2> of a linear observable, resolved onto the grid axes
  // according to the coordinate labels.
  double mean(const LinearPosition& obs) const;
  double second_moment(const LinearPosition& obs) const;
  double variance(const LinearPosition& obs) const;
  double mean(const LinearMomentum& obs) const;
  double second_moment(const LinearMomentum& obs) const;
  double variance(const LinearMomentum& obs) const;

  // Relabel between (x1,x2) and (x2,q) coordinates; q is wrapped onto the
  // periodic box. Exact sample permutation, norm preserving. Dense only;
  // requires both axes to share one grid.
  TwoBodyWaveFn relabel_to_x2q() const;
  TwoBodyWaveFn relabel_to_x1x2() const;

 private:
  TwoBodyWaveFn(CoordPair coords, Grid1D a, Grid1D b);

  struct AxisCombo {
    double ca, cb, c0;
  };
  AxisCombo resolve(const LinearPosition& obs) const;
  AxisCombo resolve(const LinearMomentum& obs) const;
  double moment_of_axis_combo(const AxisCombo& combo, bool momentum_space,
                              int power) const;

  CoordPair coords_;
  Grid1D grid_a_, grid_b_;
  std::optional<std::pair<GridWaveFn, GridWaveFn>> product_;
  std::vector<Complex> dense_;  // row-major, row = axis a
};

}  // namespace uncertlab
