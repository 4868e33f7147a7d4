#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uncertlab/twobody.hpp"

namespace uncertlab {

// Which observable plays the coordinate pointer. `identity` means the
// pointer coincides with whatever target it is compared against (an exact
// measurement of the target itself); x2 / q read that observable, shifted
// by `offset`, as the estimate.
struct PointerX {
  enum class Kind { identity, x2, q } kind = Kind::identity;
  double offset = 0.0;
};

// Momentum pointer. No scenario drives one, but the unbiasedness check
// accepts a present designation; `total` reads P = p1 + p2 as a p1-meter.
struct PointerP {
  enum class Kind { absent, identity, total } kind = Kind::absent;
};

// State preparation modeled as part of the measurement: the named
// coordinate is localized into a Gaussian of the given width before the
// pointers are read, disturbing the conjugate momentum.
struct Coupling {
  enum class Kind { none, prepare_then_measure } kind = Kind::none;
  enum class Prepared { q, x2 } coordinate = Prepared::q;
  double width = 0.0;
};

struct MeasurementModel {
  PointerX pointer_x;
  PointerP pointer_p;
  Coupling coupling;
};

using Observable = std::variant<LinearPosition, LinearMomentum>;

// Root-mean-square pointer error <(mu - target)^2>^(1/2) on the initial
// state (Heisenberg picture, nothing evolves).
double rms_noise(const MeasurementModel& model, const TwoBodyWaveFn& state,
                 const LinearPosition& target);

// Root-mean-square change of the target between initial and final
// operators. Without coupling this is exactly zero; a preparation of width
// w disturbs momenta conjugate to the prepared coordinate by the momentum
// spread of the prepared Gaussian.
double rms_disturbance(const MeasurementModel& model, const TwoBodyWaveFn& state,
                       const Observable& target);

struct UnbiasedResult {
  bool unbiased = false;
  double max_bias = 0.0;
};

// <mu_x - x1> (and <mu_p - p1> when a momentum pointer is present) must
// vanish on every supplied state, within 1e-8.
UnbiasedResult unbiased_check(const MeasurementModel& model,
                              std::span<const TwoBodyWaveFn> states);

struct KennardResult {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double product = 0.0;
  bool pass = false;
};

// Standard deviations and their product; pass iff
// product >= (hbar/2)(1 - 1e-3). Rejects states whose support reaches the
// periodic wrap instead of silently wrapping the statistics.
KennardResult kennard_check(const GridWaveFn& wf);

struct EntanglementResult {
  double sum = 0.0;        // Var(x1 - x2) + Var(p1 + p2)
  double var_q = 0.0;
  double var_p_total = 0.0;
  bool entangled = false;  // sum < 2 hbar (sufficient criterion)
};

EntanglementResult entanglement_criterion(const TwoBodyWaveFn& state);

// <(x2 - c)^2>^(1/2): the x1 estimate error when q is read precisely and
// q + c is used as the estimate.
double indirect_error_via_q(const TwoBodyWaveFn& state, double c);

// Threshold below which an uncertainty product counts as an evasion;
// keeps exact saturation from being flagged.
bool counts_as_evasion(double product, double hbar);

// Flat serializable summary of one measurement configuration.
struct NoiseReport {
  std::string label;
  std::optional<double> epsilon_x, epsilon_p, eta_x, eta_p;
  std::optional<double> delta_x, delta_p;
  std::optional<double> product_ex_ep, product_ex_etap, product_ep_etax,
      product_dx_dp;
  std::optional<bool> evasion_ex_ep, evasion_ex_etap, evasion_ep_etax;
  std::optional<double> sector_probability;
  double hbar = 1.0;

  // Derive the products and evasion flags from whichever of the
  // epsilon/eta/delta entries are set.
  void finalize();
};

}  // namespace uncertlab
