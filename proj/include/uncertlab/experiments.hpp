#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uncertlab/measurement.hpp"

namespace uncertlab {

struct DiffractionConfig {
  double momentum = 200.0;         // incident momentum p along x
  double slit_width = 0.1;         // opening size
  double screen_distance = 100.0;  // L
  double detector_size = 0.05;     // interval / ring width on the screen
  double detector_position = 1.0;  // y (or ring radius rho)
  double mass = 1.0;
  double hbar = 1.0;
  enum class Aperture { uniform, gaussian } aperture = Aperture::uniform;
  enum class AngularProfile { isotropic, gaussian } angular_profile =
      AngularProfile::isotropic;
  double angular_width = 0.0;  // radians; 0 derives the width from the aperture
  int grid_points = 0;         // 0 = choose automatically (capped)

  double lambda_bar() const { return hbar / momentum; }
  void validate() const;
};

struct FitResult {
  std::string field;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct EvasionSummary {
  bool clear_evasion = false;
  std::optional<double> sector_probability;
  std::string condition;
};

// Structured result of one scenario run: inputs echo, named scalar results,
// free-text notes, embedded noise reports and the evasion summary.
struct ExperimentReport {
  std::string scenario;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<NoiseReport> noise;
  EvasionSummary evasion;
  std::vector<FitResult> fits;  // filled by sweep aggregation

  void add_input(std::string key, double v) { inputs.emplace_back(std::move(key), v); }
  void add(std::string key, double v) { values.emplace_back(std::move(key), v); }
  void note(std::string key, std::string text) { notes.emplace_back(std::move(key), std::move(text)); }
  bool has(const std::string& key) const;
  double value(const std::string& key) const;  // throws DomainError if missing
  void check_probability_fields() const;       // every *probability* field in [0,1]
};

// hbar * (L / lambda_bar) * (delta_y / L)^2: the uncertainty product after
// rescaling all lengths by the screen distance.
double rescaled_product(const DiffractionConfig& cfg);

ExperimentReport run_diffraction(const DiffractionConfig& cfg);

struct OzawaPositionConfig {
  double box_length = 10.0;   // L; the relative coordinate spans (-L, L)
  double packet_width = 0.1;  // alpha; 2L/alpha must be an integer >= 2
  bool condition_on_favorable = true;
  std::uint64_t seed = 0;
  int mc_samples = 100000;
  double hbar = 1.0;
  int grid_points = 0;
};

ExperimentReport run_ozawa_position(const OzawaPositionConfig& cfg);

struct OzawaCommutingConfig {
  double box_length = 10.0;
  double packet_width = 0.1;   // L/alpha must be an integer >= 2
  double pointer_offset = 0.0; // c, must lie inside the box
  double hbar = 1.0;
  int grid_points = 0;
};

ExperimentReport run_ozawa_commuting(const OzawaCommutingConfig& cfg);

struct BoxModelConfig {
  double box_length = 10.0;
  double packet_width = 0.1;
  double pointer_offset = 0.0;
  double hbar = 1.0;
  int grid_points = 0;
};

ExperimentReport run_box_model(const BoxModelConfig& cfg);

struct SlitTwoBodyConfig {
  DiffractionConfig diffraction;   // aperture defaults to gaussian here
  double mass_ratio = 1.0e4;       // m2/m1, must be >= 1e3
  double pointer_offset = 0.0;     // c in the transverse estimate
  double packet_width = 0.05;      // alpha of the conditioning sector

  SlitTwoBodyConfig() { diffraction.aperture = DiffractionConfig::Aperture::gaussian; }
};

ExperimentReport run_slit_two_body(const SlitTwoBodyConfig& cfg);

struct PreparationConfig {
  double packet_width = 0.1;       // alpha, width of the prepared relative packet
  double position_accuracy = 0.1;  // delta x2 of the prepared x2 packet
  double hbar = 1.0;
  int grid_points = 0;
};

ExperimentReport run_preparation(const PreparationConfig& cfg);

ExperimentReport run_spin_epr(double hbar = 1.0);

}  // namespace uncertlab
