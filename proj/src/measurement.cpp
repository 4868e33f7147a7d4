#include "uncertlab/measurement.hpp"

#include <cmath>

namespace uncertlab {

namespace {

LinearPosition pointer_observable(const PointerX& pointer, const LinearPosition& target) {
  switch (pointer.kind) {
    case PointerX::Kind::identity: {
      LinearPosition p = target;
      p.c0 += pointer.offset;
      return p;
    }
    case PointerX::Kind::x2:
      return LinearPosition{0.0, 1.0, pointer.offset};
    case PointerX::Kind::q:
      return LinearPosition{1.0, -1.0, pointer.offset};
  }
  throw DomainError("pointer_observable: undefined pointer designation");
}

LinearMomentum pointer_observable(const PointerP& pointer) {
  switch (pointer.kind) {
    case PointerP::Kind::identity: return kP1;
    case PointerP::Kind::total: return kPTotal;
    case PointerP::Kind::absent: break;
  }
  throw DomainError("pointer_observable: momentum pointer is absent");
}

// Momentum spread of the width-w Gaussian the preparation leaves behind,
// computed on an actual grid rather than from the closed form.
double prepared_momentum_spread(double width, double hbar) {
  if (!(width > 0.0)) throw DomainError("rms_disturbance: preparation width must be positive");
  Grid1D g = Grid1D::centered(4096, 64.0 * width, hbar);
  GridWaveFn packet = gaussian_packet(g, 0.0, width, 0.0);
  return momentum_stats(packet).stddev;
}

// Sensitivity of a momentum observable to the momentum conjugate to the
// prepared coordinate: q pairs with p = (p1 - p2)/2, x2 with p2.
double conjugate_coefficient(Coupling::Prepared prepared, const LinearMomentum& target) {
  switch (prepared) {
    case Coupling::Prepared::q: return target.p1 - target.p2;
    case Coupling::Prepared::x2: return target.p2;
  }
  throw DomainError("rms_disturbance: unknown prepared coordinate");
}

}  // namespace

double rms_noise(const MeasurementModel& model, const TwoBodyWaveFn& state,
                 const LinearPosition& target) {
  if (model.pointer_x.kind == PointerX::Kind::identity && model.pointer_x.offset == 0.0)
    return 0.0;
  LinearPosition mu = pointer_observable(model.pointer_x, target);
  LinearPosition diff{mu.x1 - target.x1, mu.x2 - target.x2, mu.c0 - target.c0};
  return std::sqrt(std::max(0.0, state.second_moment(diff)));
}

double rms_disturbance(const MeasurementModel& model, const TwoBodyWaveFn& state,
                       const Observable& target) {
  if (model.coupling.kind == Coupling::Kind::none) return 0.0;
  if (std::holds_alternative<LinearPosition>(target)) return 0.0;
  const auto& mom = std::get<LinearMomentum>(target);
  double coeff = conjugate_coefficient(model.coupling.coordinate, mom);
  if (coeff == 0.0) return 0.0;
  return std::abs(coeff) * prepared_momentum_spread(model.coupling.width, state.hbar());
}

UnbiasedResult unbiased_check(const MeasurementModel& model,
                              std::span<const TwoBodyWaveFn> states) {
  if (states.empty()) throw DomainError("unbiased_check: needs at least one state");
  double max_bias = 0.0;
  for (const auto& state : states) {
    LinearPosition mu = pointer_observable(model.pointer_x, kX1);
    LinearPosition diff{mu.x1 - 1.0, mu.x2, mu.c0};
    max_bias = std::max(max_bias, std::abs(state.mean(diff)));
    if (model.pointer_p.kind != PointerP::Kind::absent) {
      LinearMomentum mup = pointer_observable(model.pointer_p);
      LinearMomentum diffp{mup.p1 - 1.0, mup.p2};
      max_bias = std::max(max_bias, std::abs(state.mean(diffp)));
    }
  }
  return UnbiasedResult{max_bias <= 1e-8, max_bias};
}

KennardResult kennard_check(const GridWaveFn& wf) {
  if (!wf.normalized())
    throw DomainError("kennard_check: state must be normalized");
  if (boundary_support(wf) >= 1e-12)
    throw BoundaryError("kennard_check: support reaches the periodic wrap");
  KennardResult r;
  r.delta_x = position_stats(wf).stddev;
  r.delta_p = momentum_stats(wf).stddev;
  r.product = r.delta_x * r.delta_p;
  r.pass = r.product >= 0.5 * wf.grid().hbar * (1.0 - 1e-3);
  return r;
}

EntanglementResult entanglement_criterion(const TwoBodyWaveFn& state) {
  EntanglementResult r;
  r.var_q = state.variance(kQ);
  r.var_p_total = state.variance(kPTotal);
  r.sum = r.var_q + r.var_p_total;
  r.entangled = r.sum < 2.0 * state.hbar();
  return r;
}

double indirect_error_via_q(const TwoBodyWaveFn& state, double c) {
  return std::sqrt(std::max(0.0, state.second_moment(LinearPosition{0.0, 1.0, -c})));
}

bool counts_as_evasion(double product, double hbar) {
  return product < 0.5 * hbar * (1.0 - 1e-6);
}

void NoiseReport::finalize() {
  auto prod = [&](const std::optional<double>& a, const std::optional<double>& b)
      -> std::optional<double> {
    if (a && b) return *a * *b;
    return std::nullopt;
  };
  product_ex_ep = prod(epsilon_x, epsilon_p);
  product_ex_etap = prod(epsilon_x, eta_p);
  product_ep_etax = prod(epsilon_p, eta_x);
  product_dx_dp = prod(delta_x, delta_p);
  auto flag = [&](const std::optional<double>& p) -> std::optional<bool> {
    if (p) return counts_as_evasion(*p, hbar);
    return std::nullopt;
  };
  evasion_ex_ep = flag(product_ex_ep);
  evasion_ex_etap = flag(product_ex_etap);
  evasion_ep_etax = flag(product_ep_etax);
}

}  // namespace uncertlab
