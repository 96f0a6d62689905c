#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "latteds/eds.hpp"

namespace latteds {

/** Smooth periodic site potential V(x) = K (1 - cos 2 pi x), V >= 0,
 * minima on the integers. */
struct CosinePotential {
  double K = 1.0 / (4.0 * 3.14159265358979323846 * 3.14159265358979323846);
  double value(double x) const;
  double deriv(double x) const;
  double second_deriv_sup() const;  // sup |V''| = 4 pi^2 K
};

/** Standard Frenkel-Kontorova lattice in dimension N: per-site states in R^N,
 * elastic nearest-neighbour coupling, separable periodic potential
 * V(x) = sum_j Vc(x_j).
 *
 * Gradient (lambda = 0):  du_j/dt = lap u_j - V'(u_j)
 * Damped  (lambda > 0):   lambda u_j'' + u_j' = lap u_j - V'(u_j)
 *
 * e = lambda/2 |u_t|^2 + 1/2 |grad u|^2 + V(u),  d = |u_t|^2,
 * f_i = sum_j u_t_j * grad*_i u_j,  with f^2 <= 2N ||e||_inf d. */
class FkModel : public EdsModel {
public:
  FkModel(int dim, double lambda = 0.0, CosinePotential potential = {});

  std::string name() const override { return "fk"; }
  int dim() const override { return dim_; }
  int state_width() const override { return dim_; }
  bool damped() const override { return lambda_ > 0.0; }
  void rhs(const Field& u, const Field* v, Field& du, Field* dv) const override;
  EnergyTriple triple(const Field& u, const Field* v) const override;
  double dissipation_modulus(double y) const override { return 2.0 * dim_ * y; }
  double stiffness() const override;
  std::vector<State> known_equilibria(const Window& w) const override;

  double lambda() const { return lambda_; }
  const CosinePotential& potential() const { return potential_; }

private:
  void force(const Field& u, Field& out) const;  // lap u - grad V(u)

  int dim_;
  double lambda_;
  CosinePotential potential_;
};

/** Generalized Frenkel-Kontorova chain (dimension 1, M degrees of freedom per
 * site) with nearest-neighbour interaction L; gradient dynamics
 *   du(a)/dt = -L_2(u(a-1), u(a)) - L_1(u(a), u(a+1)).
 * e(a) = L(u(a-1), u(a)), d = |du|^2, f(a) = -L_1(u(a), u(a+1)) . du(a). */
class GeneralizedFkModel : public EdsModel {
public:
  GeneralizedFkModel(Interaction interaction, double b_grid_step = 1e-3);

  std::string name() const override { return "genfk"; }
  int dim() const override { return 1; }
  int state_width() const override { return interaction_.m; }
  bool damped() const override { return false; }
  void rhs(const Field& u, const Field* v, Field& du, Field* dv) const override;
  EnergyTriple triple(const Field& u, const Field* v) const override;
  double dissipation_modulus(double y) const override;
  double stiffness() const override { return 16.0; }

  const Interaction& interaction() const { return interaction_; }

private:
  Interaction interaction_;
  double b_grid_step_;
};

/** Which flux a multi-range model reports. The verbatim per-site flux
 * -sum_g L^g_1(u(a), u(a+g)) u_t(a) vanishes with d(a) but only telescopes in
 * the balance law for |g| = 1; the crossing-bond flux sums the power of every
 * interaction bond crossing the cut right of a and satisfies the balance law
 * exactly for any distance set (the two coincide when C = {1}). */
enum class MultiRangeFlux { crossing_bonds, per_site };

/** One-dimensional scalar chain with interactions over a finite set of
 * nonzero lattice distances; gradient dynamics
 *   du(a)/dt = -sum_g [ L^g_2(u(a-g), u(a)) + L^g_1(u(a), u(a+g)) ]. */
class MultiRangeModel : public EdsModel {
public:
  MultiRangeModel(std::vector<int> distances, std::vector<Interaction> interactions,
                  MultiRangeFlux flux = MultiRangeFlux::crossing_bonds,
                  double b_grid_step = 1e-3);

  std::string name() const override { return "multirange"; }
  int dim() const override { return 1; }
  int state_width() const override { return 1; }
  bool damped() const override { return false; }
  void rhs(const Field& u, const Field* v, Field& du, Field* dv) const override;
  EnergyTriple triple(const Field& u, const Field* v) const override;
  double dissipation_modulus(double y) const override;
  double stiffness() const override;

  MultiRangeFlux flux_convention() const { return flux_; }
  const std::vector<int>& distances() const { return distances_; }

private:
  std::vector<int> distances_;
  std::vector<Interaction> interactions_;
  MultiRangeFlux flux_;
  double b_grid_step_;
};

enum class BondAssignment {
  uniform_plus,  // S == + everywhere (the bistable coarsening lattice)
  seeded_random  // independent fair labels per bond, mirrored for symmetry
};

/** Bistable lattice with random +/- bond interactions (the deterministic
 * spin-glass quench) in dimension 1 or 2. Site potential
 * V(x) = x^4/4 - x^2/2 + 1/4 with minima at +-1; bond interactions
 *   L+(x,y) = mu/2 (x - y)^2   (favours equal minima),
 *   L-(x,y) = mu/2 (x + y)^2   (favours opposite minima).
 * Dynamics: lambda u'' + u' = -sum_bonds L^S_1(u(a), u(nbr)) + u - u^3.
 * Bond labels are drawn from `seed` in lexicographic (site, +axis) order and
 * read mirrored, so S(a, -e_j) = S(a - e_j, e_j) by construction. */
class SpinGlassModel : public EdsModel {
public:
  SpinGlassModel(const Window& window, double lambda, double mu,
                 BondAssignment assignment = BondAssignment::seeded_random,
                 std::uint64_t seed = 1);

  std::string name() const override { return "spinglass"; }
  int dim() const override { return dim_; }
  int state_width() const override { return 1; }
  bool damped() const override { return lambda_ > 0.0; }
  void rhs(const Field& u, const Field* v, Field& du, Field* dv) const override;
  EnergyTriple triple(const Field& u, const Field* v) const override;
  double dissipation_modulus(double y) const override { return 2.0 * dim_ * mu_ * y; }
  double stiffness() const override { return 4.0 * dim_ * mu_ + 2.0; }
  std::vector<State> known_equilibria(const Window& w) const override;

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  bool all_plus() const;
  // Label of the bond (site, site + e_axis); true = +.
  bool bond_plus(std::int64_t site, int axis) const;

  static double site_potential(double x) { return 0.25 * (x * x - 1.0) * (x * x - 1.0); }
  static double site_potential_deriv(double x) { return x * x * x - x; }

  // Curvature bound entering the overdamped condition 4 lambda B <= 1:
  // max over the invariant box of L_22 + L_11 + V'' = 2 mu + 2.
  double curvature_bound() const { return 2.0 * mu_ + 2.0; }

private:
  double bond_d1(bool plus, double x, double y) const;
  double bond_value(bool plus, double x, double y) const;

  Window window_;
  int dim_;
  double lambda_;
  double mu_;
  BondAssignment assignment_;
  std::vector<std::uint8_t> bonds_;  // site-major, axis-minor; 1 = +
};

enum class DcglFrame {
  rotating,  // v_t = (1 + i lambda)(lap v + v - |v|^2 v); the EDS frame
  lab        // u_t = (1 + i lambda) lap u + u - (1 + i lambda)|u|^2 u
};

/** Discrete complex Ginzburg-Landau equation, complex states stored as
 * width-2 real fields (re, im). Energy structure lives in the rotating frame:
 * e = 1/2 |grad v|^2 + 1/4 (1 - |v|^2)^2, d = |v_t|^2 / (1 + lambda^2),
 * f_j = Re(v_t conj(grad*_j v)). */
class DcglModel : public EdsModel {
public:
  DcglModel(int dim, double lambda, DcglFrame frame = DcglFrame::rotating);

  std::string name() const override { return "dcgl"; }
  int dim() const override { return dim_; }
  int state_width() const override { return 2; }
  bool damped() const override { return false; }
  void rhs(const Field& u, const Field* v, Field& du, Field* dv) const override;
  EnergyTriple triple(const Field& u, const Field* v) const override;
  double dissipation_modulus(double y) const override {
    return 2.0 * dim_ * (1.0 + lambda_ * lambda_) * y;
  }
  double stiffness() const override;
  std::vector<State> known_equilibria(const Window& w) const override;

  double lambda() const { return lambda_; }
  DcglFrame frame() const { return frame_; }

private:
  int dim_;
  double lambda_;
  DcglFrame frame_;
};

}  // namespace latteds
