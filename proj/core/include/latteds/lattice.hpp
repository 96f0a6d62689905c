#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latteds {

// Lattice dimension is a runtime parameter; 4 covers every model and sweep here.
inline constexpr int kMaxDim = 4;

// Integer lattice coordinates. Entries at axes >= dim are kept at zero.
using Site = std::array<int, kMaxDim>;

enum class Boundary { periodic, frozen };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/** Finite computational window of Z^N: all sites with -W <= coord <= W per axis.
 *
 * Sites are enumerated in lexicographic order (axis 0 most significant) and
 * addressed by a flat index. Out-of-window reads resolve through the boundary
 * policy: periodic wraps with period 2W+1, frozen clamps to the window edge
 * (under frozen dynamics the edge shell is held at its initial value, so a
 * clamped read returns the initial condition at the clamped site). */
class Window {
public:
  Window(int dim, int radius, Boundary boundary = Boundary::periodic, int buffer = 0);

  int dim() const { return dim_; }
  int radius() const { return radius_; }
  Boundary boundary() const { return boundary_; }
  int buffer() const { return buffer_; }
  int extent() const { return 2 * radius_ + 1; }
  std::int64_t site_count() const { return count_; }

  // Largest cube radius for which diagnostics are valid on this window.
  int max_diag_radius() const { return radius_ - buffer_; }

  bool contains(const Site& s) const;
  std::int64_t index_of(const Site& s) const;
  Site site_at(std::int64_t index) const;

  // Flat index of a possibly out-of-window site, resolved by boundary policy.
  std::int64_t resolve(Site s) const;

  // Flat index of the site one step along `axis` (direction +1/-1), resolved
  // by boundary policy. `axis` is 0-based.
  std::int64_t neighbor(std::int64_t index, int axis, int dir) const;

  // True if the site lies on the outermost shell (some |coord| == W). Under
  // the frozen policy these sites do not evolve.
  bool on_edge(std::int64_t index) const;

  bool operator==(const Window& o) const {
    return dim_ == o.dim_ && radius_ == o.radius_ && boundary_ == o.boundary_ &&
           buffer_ == o.buffer_;
  }

private:
  int dim_;
  int radius_;
  Boundary boundary_;
  int buffer_;
  std::int64_t count_;
  std::array<std::int64_t, kMaxDim> stride_{};
};

/** Map from window sites to real M-vectors, stored site-major. */
class Field {
public:
  Field() : width_(0) {}
  Field(const Window& window, int width, double fill = 0.0);

  const Window& window() const { return window_; }
  int width() const { return width_; }
  std::int64_t site_count() const { return window_.site_count(); }

  double& at(std::int64_t site, int comp = 0) { return values_[site * width_ + comp]; }
  double at(std::int64_t site, int comp = 0) const { return values_[site * width_ + comp]; }

  std::span<double> site_values(std::int64_t site) {
    return {values_.data() + site * width_, static_cast<std::size_t>(width_)};
  }
  std::span<const double> site_values(std::int64_t site) const {
    return {values_.data() + site * width_, static_cast<std::size_t>(width_)};
  }

  std::vector<double>& data() { return values_; }
  const std::vector<double>& data() const { return values_; }

  bool all_finite() const;
  double max_abs() const;

private:
  Window window_{1, 1};
  int width_;
  std::vector<double> values_;
};

enum class DiffVariant {
  backward,  // d_j u(a) = u(a) - u(a - e_j)
  forward    // d_j* u(a) = u(a + e_j) - u(a)
};

// Translation T_j^{dir}: result(a) = u(a + dir*e_j). axis is 0-based, dir = +-1.
Field shift(const Field& u, int axis, int dir);

// Componentwise difference along `axis`.
Field diff(const Field& u, int axis, DiffVariant variant);

// Gradient of a scalar field: width-N field of per-axis differences.
Field grad(const Field& u, DiffVariant variant);

// Divergence of a width-N field: sum over axes of per-axis differences.
Field divergence(const Field& v, DiffVariant variant);

// Componentwise Laplacian: sum_j [u(a+e_j) + u(a-e_j) - 2 u(a)].
Field laplacian(const Field& u);

enum class CubeVariant {
  C,     // C(r)  = { -r   <= a_j <= r-1 }
  Cstar  // C*(r) = { -r+1 <= a_j <= r   }
};

struct CubeSpec {
  int radius = 1;
  CubeVariant variant = CubeVariant::Cstar;
};

// Flat indices of the cube's sites, in lexicographic order. |C| = (2r)^N.
std::vector<std::int64_t> cube_sites(const Window& w, const CubeSpec& spec);

/** Outward normal at a boundary-shell site, per the case table:
 * for C*: +e_j summed over every axis with a_j = r when no coordinate sits at
 * -r; -e_k when exactly one coordinate sits at -r and the rest lie in
 * [-r+1, r]; zero otherwise. The C variant mirrors the roles of +r and -r.
 * Returned unnormalized (a sum of signed basis vectors). */
Site normal(const Site& s, int r, CubeVariant variant);

// All sites of the shell { |a_j| <= r for all j, |a_k| = r for some k }.
std::vector<Site> boundary_shell(int dim, int r);

/** The 2N signed faces of the cube, concatenated (axis-major, + face before
 * - face). Corner sites appear once per incident face, so the list length is
 * exactly N 2^N r^(N-1) and matches the boundary cardinality the flux
 * estimates count with. */
std::vector<std::int64_t> boundary_sites(const Window& w, int r, CubeVariant variant);

// Sum over C*(r) of div v and the matching boundary sum of v . n* (variant
// Cstar), or sum over C(r) of div* v against v . n (variant C). The two
// components are equal by the discrete Stokes identity.
std::pair<double, double> stokes_sum(const Field& v, int r, CubeVariant variant);

}  // namespace latteds
