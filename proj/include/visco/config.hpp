#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "visco/stepper.hpp"

namespace visco {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario description as read from an INI-style file with the sections
/// [mesh] [material] [obstacles] [initial] [forcing] [time] [solver] [output].
/// Every key has a default; unknown sections or keys are errors.
struct ScenarioConfig {
  // [mesh]
  /// ';'-separated shapes: "disc r rings cx cy", "rectangle w h nx ny ox oy",
  /// "annulus r_in r_out theta0 theta1 n_radial n_angular cx cy" (angles in degrees).
  std::string shapes = "disc 1 10 0 0";
  std::string file;        // mesh file; overrides `shapes`
  std::string pin = "none";  // none | xmin | xmax | ymin | ymax | xmid | ymid

  // [material]
  double mu = 1.0, c1 = 0.1, a = 16.0, c2 = 1e-3, p = 4.0, rho = 1.0, viscosity = 1.0;

  // [obstacles]
  std::string obstacles;  // ';'-separated obstacle specs, e.g. "halfplane 0 0 1 0"

  // [initial]
  std::string offset = "0 0";    // eta0 = identity + offset
  std::string eta0_file;         // vertex positions, overrides `offset`
  std::string velocity = "0 0";  // one "vx vy" for all vertices, or one per mesh component
  std::string velocity_file;

  // [forcing]
  std::string body_force = "0 0";  // per unit reference area
  std::string gravity = "0 0";

  // [time]
  double T = 1.0;
  int L = 16, M = 8;

  // [solver]
  double tol_kkt = 1e-8, tol_comp = 1e-8, tol_descent = 1e-10;
  double mu0 = 1e-2, mu_factor = 0.2, tol_stage = 1e-6, mu_min = 1e-10;
  int max_newton = 40;
  double kappa = 0.9, eps_act = 0.0;
  int hops = 2;
  double atom_drop = 0.0;
  double tau_max = 0.0, cfl = 0.5;
  int max_halvings = 6;

  // [output]
  std::string name = "scenario";
  std::string directory = "out";
  int frame_stride = 1;
  bool svg = false;
  int cn_resolution = 512;
  double theta_tol = 5.0;  // degrees
  double delta_opp = 0.1;
  bool expect_rebound = false;

  bool operator==(const ScenarioConfig&) const = default;

  /// Sets "section.key" from its text form. Throws ConfigError.
  void set(const std::string& dotted_key, const std::string& value);
  std::string get(const std::string& dotted_key) const;
  /// All "section.key" names in file order.
  static std::vector<std::string> keys();

  /// Full canonical text (every key, 17 significant digits).
  void write(std::ostream& os) const;
  std::string to_string() const;

  /// Builds the scenario. Relative file paths are resolved against `base_dir`.
  Scenario build(const std::string& base_dir = ".") const;
};

/// Parses a config. Throws ConfigError naming the offending line or key.
ScenarioConfig parse_config(std::istream& is);
ScenarioConfig parse_config_string(const std::string& text);
ScenarioConfig load_config(const std::string& path);

/// Parses "x y" into a vector. Throws ConfigError.
Vec2 parse_vec2(const std::string& text);

}  // namespace visco
