#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latteds/lattice.hpp"

namespace latteds {

/** Per-site energy e, dissipation d (both width 1, nonnegative) and flux
 * vector f (width N) of a state, tied together by the local balance
 * de/dt = -d + div f. */
struct EnergyTriple {
  Field e;
  Field d;
  Field f;
};

/** Model state: configuration u, plus velocity v for damped second-order
 * dynamics (v absent for first-order / gradient models). */
struct State {
  Field u;
  std::optional<Field> v;
};

/** A lattice dynamical system with an energy/dissipation/flux structure.
 *
 * Implementations must keep e, d >= 0 everywhere (A1), rhs == 0 wherever
 * d == 0 on candidate equilibria (A3), satisfy the local energy balance
 * de/dt = -d + div f (A4), and f^2 <= b(||e||_inf) d with the non-decreasing
 * modulus returned by dissipation_modulus (A5). */
class EdsModel {
public:
  virtual ~EdsModel() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual int state_width() const = 0;
  virtual bool damped() const = 0;

  // Time derivative of the state. du matches u's shape; dv is required (and
  // filled) exactly when the model is damped.
  virtual void rhs(const Field& u, const Field* v, Field& du, Field* dv) const = 0;

  virtual EnergyTriple triple(const Field& u, const Field* v) const = 0;

  // The modulus b of (A5), evaluated at an energy level y = ||e||_inf.
  virtual double dissipation_modulus(double y) const = 0;

  // Linear stiffness scale; explicit schemes want dt <= 2 / stiffness().
  virtual double stiffness() const = 0;

  virtual std::vector<State> known_equilibria(const Window& w) const { return {}; }

  State make_state(Field u) const;
  void validate_state(const State& s) const;
};

EnergyTriple evaluate_triple(const EdsModel& model, const State& s);

// E(R) = sum over C*(R) of e. Throws std::domain_error when R exceeds the
// window's diagnostic range W - buffer.
double windowed_energy(const EnergyTriple& t, int R);

// Largest per-site excess of f^2 over beta d; <= 0 when (A5) holds with beta.
double check_a5(const EnergyTriple& t, double beta);

/** Per-orbit constants of a bounded lattice system: beta = sup b(||e||_inf)
 * along the orbit and e0 = ||e(0)||_inf. */
struct BoundedEdsInfo {
  double beta = 0.0;
  double e0 = 0.0;
};

/** Two-point interaction potential L on R^m x R^m with explicit partials.
 * d1/d2 write the gradient in the first/second argument into `out`.
 * (L1): L(x + k, y + k) = L(x, y) for integer vectors k with step `period`. */
struct Interaction {
  int m = 1;
  std::function<double(std::span<const double>, std::span<const double>)> value;
  std::function<void(std::span<const double>, std::span<const double>, std::span<double>)> d1;
  std::function<void(std::span<const double>, std::span<const double>, std::span<double>)> d2;
  double period = 1.0;

  static Interaction scalar(std::function<double(double, double)> value,
                            std::function<double(double, double)> d1,
                            std::function<double(double, double)> d2, double period = 1.0);

  double value1(double x, double y) const;
  double d1_scalar(double x, double y) const;
  double d2_scalar(double x, double y) const;
};

// Elastic spring (x - y)^2 * k/2; the generic test interaction.
Interaction spring_interaction(double k = 1.0);

/** Grid estimate of the (A5) modulus b = b1 o b2 built in the proof of the
 * interaction-modulus lemma: b2(y) bounds the displacement |y - x| on the
 * sublevel set L <= y (periodicity restricts the base point to one cell),
 * b1(x) bounds L_1^2 over displacements up to x. */
struct BEstimate {
  double value = 0.0;              // upper estimate of b(y)
  double displacement_bound = 0.0; // the intermediate b2(y)
  double grid_step = 0.0;
};

BEstimate estimate_b(const Interaction& L, double y, double grid_step = 1e-3);

}  // namespace latteds
