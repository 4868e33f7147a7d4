#include "uncertlab/twobody.hpp"

#include <cmath>

namespace uncertlab {

namespace {

void require_centered(const Grid1D& g, const char* what) {
  if (std::abs(g.origin + 0.5 * g.length) > 1e-12 * g.length)
    throw DomainError(std::string(what) + ": requires grids centered at zero");
}

}  // namespace

TwoBodyWaveFn::TwoBodyWaveFn(CoordPair coords, Grid1D a, Grid1D b)
    : coords_(coords), grid_a_(a), grid_b_(b) {
  if (grid_a_.hbar != grid_b_.hbar)
    throw DomainError("TwoBodyWaveFn: axes disagree on hbar");
}

TwoBodyWaveFn TwoBodyWaveFn::product(CoordPair coords, GridWaveFn factor_a,
                                     GridWaveFn factor_b) {
  if (factor_a.rep() != Rep::position || factor_b.rep() != Rep::position)
    throw DomainError("TwoBodyWaveFn: factors must be in position representation");
  TwoBodyWaveFn wf(coords, factor_a.grid(), factor_b.grid());
  wf.product_.emplace(std::move(factor_a), std::move(factor_b));
  return wf;
}

TwoBodyWaveFn TwoBodyWaveFn::dense(CoordPair coords, Grid1D grid_a, Grid1D grid_b,
                                   std::vector<Complex> amplitudes) {
  TwoBodyWaveFn wf(coords, grid_a, grid_b);
  if (static_cast<int>(amplitudes.size()) != grid_a.n_points * grid_b.n_points)
    throw DomainError("TwoBodyWaveFn: amplitude count does not match grids");
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  n2 *= grid_a.spacing() * grid_b.spacing();
  if (n2 <= 0.0) throw DomainError("TwoBodyWaveFn: cannot normalize zero state");
  double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes) a *= scale;
  wf.dense_ = std::move(amplitudes);
  return wf;
}

const GridWaveFn& TwoBodyWaveFn::factor_a() const {
  if (!product_) throw DomainError("TwoBodyWaveFn: not a product state");
  return product_->first;
}

const GridWaveFn& TwoBodyWaveFn::factor_b() const {
  if (!product_) throw DomainError("TwoBodyWaveFn: not a product state");
  return product_->second;
}

Complex TwoBodyWaveFn::amplitude(int i, int j) const {
  if (product_) return product_->first.amplitudes()[i] * product_->second.amplitudes()[j];
  return dense_[static_cast<std::size_t>(i) * grid_b_.n_points + j];
}

double TwoBodyWaveFn::norm_squared() const {
  if (product_) return product_->first.norm_squared() * product_->second.norm_squared();
  double s = 0.0;
  for (const auto& a : dense_) s += std::norm(a);
  return s * grid_a_.spacing() * grid_b_.spacing();
}

TwoBodyWaveFn::AxisCombo TwoBodyWaveFn::resolve(const LinearPosition& obs) const {
  switch (coords_) {
    case CoordPair::x1_x2:
      return {obs.x1, obs.x2, obs.c0};
    case CoordPair::x2_q:
    case CoordPair::y2_qy:
      // axis a carries x2, axis b carries q; x1 = x2 + q
      return {obs.x1 + obs.x2, obs.x1, obs.c0};
  }
  throw DomainError("TwoBodyWaveFn: unknown coordinate labels");
}

TwoBodyWaveFn::AxisCombo TwoBodyWaveFn::resolve(const LinearMomentum& obs) const {
  switch (coords_) {
    case CoordPair::x1_x2:
      return {obs.p1, obs.p2, 0.0};
    case CoordPair::x2_q:
    case CoordPair::y2_qy:
      // conjugate momenta of the (x2, q) axes are (p1 + p2, p1)
      return {obs.p2, obs.p1 - obs.p2, 0.0};
  }
  throw DomainError("TwoBodyWaveFn: unknown coordinate labels");
}

double TwoBodyWaveFn::moment_of_axis_combo(const AxisCombo& combo,
                                           bool momentum_space, int power) const {
  if (power != 1 && power != 2)
    throw DomainError("TwoBodyWaveFn: only first and second moments supported");

  if (product_) {
    auto stats_of = [&](const GridWaveFn& f) {
      return momentum_space ? momentum_stats(f) : position_stats(f);
    };
    Stats sa = stats_of(product_->first);
    Stats sb = stats_of(product_->second);
    double ma = sa.mean, mb = sb.mean;
    if (power == 1) return combo.ca * ma + combo.cb * mb + combo.c0;
    double s2a = sa.stddev * sa.stddev + ma * ma;
    double s2b = sb.stddev * sb.stddev + mb * mb;
    return combo.ca * combo.ca * s2a + combo.cb * combo.cb * s2b +
           combo.c0 * combo.c0 + 2.0 * combo.ca * combo.cb * ma * mb +
           2.0 * combo.c0 * (combo.ca * ma + combo.cb * mb);
  }

  const int na = grid_a_.n_points, nb = grid_b_.n_points;
  std::vector<Complex> data = dense_;
  if (momentum_space) {
    // axis b (contiguous rows), then axis a
    for (int i = 0; i < na; ++i) {
      std::vector<Complex> row(data.begin() + static_cast<std::size_t>(i) * nb,
                               data.begin() + static_cast<std::size_t>(i + 1) * nb);
      GridWaveFn t = spectral_transform(GridWaveFn(grid_b_, std::move(row), Rep::position, false));
      std::copy(t.amplitudes().begin(), t.amplitudes().end(),
                data.begin() + static_cast<std::size_t>(i) * nb);
    }
    std::vector<Complex> col(na);
    for (int j = 0; j < nb; ++j) {
      for (int i = 0; i < na; ++i) col[i] = data[static_cast<std::size_t>(i) * nb + j];
      GridWaveFn t = spectral_transform(GridWaveFn(grid_a_, col, Rep::position, false));
      for (int i = 0; i < na; ++i) data[static_cast<std::size_t>(i) * nb + j] = t.amplitudes()[i];
    }
  }
  auto coord_a = [&](int i) { return momentum_space ? grid_a_.momentum(i) : grid_a_.position(i); };
  auto coord_b = [&](int j) { return momentum_space ? grid_b_.momentum(j) : grid_b_.position(j); };
  double w_total = 0.0, acc = 0.0;
  for (int i = 0; i < na; ++i) {
    double va = combo.ca * coord_a(i) + combo.c0;
    for (int j = 0; j < nb; ++j) {
      double w = std::norm(data[static_cast<std::size_t>(i) * nb + j]);
      double v = va + combo.cb * coord_b(j);
      w_total += w;
      acc += w * (power == 1 ? v : v * v);
    }
  }
  return acc / w_total;
}

double TwoBodyWaveFn::mean(const LinearPosition& obs) const {
  return moment_of_axis_combo(resolve(obs), false, 1);
}
double TwoBodyWaveFn::second_moment(const LinearPosition& obs) const {
  return moment_of_axis_combo(resolve(obs), false, 2);
}
double TwoBodyWaveFn::variance(const LinearPosition& obs) const {
  double m = mean(obs);
  return std::max(0.0, second_moment(obs) - m * m);
}
double TwoBodyWaveFn::mean(const LinearMomentum& obs) const {
  return moment_of_axis_combo(resolve(obs), true, 1);
}
double TwoBodyWaveFn::second_moment(const LinearMomentum& obs) const {
  return moment_of_axis_combo(resolve(obs), true, 2);
}
double TwoBodyWaveFn::variance(const LinearMomentum& obs) const {
  double m = mean(obs);
  return std::max(0.0, second_moment(obs) - m * m);
}

TwoBodyWaveFn TwoBodyWaveFn::relabel_to_x2q() const {
  if (coords_ != CoordPair::x1_x2)
    throw DomainError("relabel_to_x2q: state is not in (x1,x2) coordinates");
  if (!(grid_a_ == grid_b_))
    throw DomainError("relabel_to_x2q: axes must share one grid");
  require_centered(grid_a_, "relabel_to_x2q");
  const int n = grid_a_.n_points;
  std::vector<Complex> out(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)       // x2 index
    for (int k = 0; k < n; ++k) {   // q index
      int i = ((j + k - n / 2) % n + n) % n;  // x1 = x2 + q on the torus
      out[static_cast<std::size_t>(j) * n + k] = amplitude(i, j);
    }
  return dense(CoordPair::x2_q, grid_a_, grid_b_, std::move(out));
}

TwoBodyWaveFn TwoBodyWaveFn::relabel_to_x1x2() const {
  if (coords_ != CoordPair::x2_q)
    throw DomainError("relabel_to_x1x2: state is not in (x2,q) coordinates");
  if (!(grid_a_ == grid_b_))
    throw DomainError("relabel_to_x1x2: axes must share one grid");
  require_centered(grid_a_, "relabel_to_x1x2");
  const int n = grid_a_.n_points;
  std::vector<Complex> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)       // x1 index
    for (int j = 0; j < n; ++j) {   // x2 index
      int k = ((i - j + n / 2) % n + n) % n;  // q = x1 - x2 on the torus
      out[static_cast<std::size_t>(i) * n + j] = amplitude(j, k);
    }
  return dense(CoordPair::x1_x2, grid_a_, grid_b_, std::move(out));
}

}  // namespace uncertlab
