#include "latteds/eds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latteds {

State EdsModel::make_state(Field u) const {
  State s{std::move(u), std::nullopt};
  if (damped()) s.v = Field(s.u.window(), s.u.width());
  validate_state(s);
  return s;
}

void EdsModel::validate_state(const State& s) const {
  if (s.u.window().dim() != dim())
    throw std::invalid_argument(name() + ": state window dim " +
                                std::to_string(s.u.window().dim()) + " != model dim " +
                                std::to_string(dim()));
  if (s.u.width() != state_width())
    throw std::invalid_argument(name() + ": state width " + std::to_string(s.u.width()) +
                                " != model width " + std::to_string(state_width()));
  if (damped() != s.v.has_value())
    throw std::invalid_argument(name() + (damped() ? ": missing velocity field"
                                                   : ": unexpected velocity field"));
  if (s.v && s.v->width() != s.u.width())
    throw std::invalid_argument(name() + ": velocity width mismatch");
}

EnergyTriple evaluate_triple(const EdsModel& model, const State& s) {
  model.validate_state(s);
  return model.triple(s.u, s.v ? &*s.v : nullptr);
}

double windowed_energy(const EnergyTriple& t, int R) {
  const Window& w = t.e.window();
  if (R > w.max_diag_radius())
    throw std::domain_error("cube radius " + std::to_string(R) +
                            " exceeds diagnostic range W - buffer = " +
                            std::to_string(w.max_diag_radius()));
  double sum = 0.0;
  for (std::int64_t i : cube_sites(w, {R, CubeVariant::Cstar})) sum += t.e.at(i, 0);
  return sum;
}

double check_a5(const EnergyTriple& t, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("check_a5: beta must be positive");
  const Window& w = t.f.window();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    double f2 = 0.0;
    for (int j = 0; j < t.f.width(); ++j) f2 += t.f.at(i, j) * t.f.at(i, j);
    worst = std::max(worst, f2 - beta * t.d.at(i, 0));
  }
  return worst;
}

Interaction Interaction::scalar(std::function<double(double, double)> value,
                                std::function<double(double, double)> d1,
                                std::function<double(double, double)> d2, double period) {
  Interaction L;
  L.m = 1;
  L.period = period;
  L.value = [value = std::move(value)](std::span<const double> x, std::span<const double> y) {
    return value(x[0], y[0]);
  };
  L.d1 = [d1 = std::move(d1)](std::span<const double> x, std::span<const double> y,
                              std::span<double> out) { out[0] = d1(x[0], y[0]); };
  L.d2 = [d2 = std::move(d2)](std::span<const double> x, std::span<const double> y,
                              std::span<double> out) { out[0] = d2(x[0], y[0]); };
  return L;
}

double Interaction::value1(double x, double y) const {
  return value(std::span<const double>(&x, 1), std::span<const double>(&y, 1));
}
double Interaction::d1_scalar(double x, double y) const {
  double out;
  d1(std::span<const double>(&x, 1), std::span<const double>(&y, 1), std::span<double>(&out, 1));
  return out;
}
double Interaction::d2_scalar(double x, double y) const {
  double out;
  d2(std::span<const double>(&x, 1), std::span<const double>(&y, 1), std::span<double>(&out, 1));
  return out;
}

Interaction spring_interaction(double k) {
  return Interaction::scalar([k](double x, double y) { return 0.5 * k * (x - y) * (x - y); },
                             [k](double x, double y) { return k * (x - y); },
                             [k](double x, double y) { return k * (y - x); });
}

namespace {

// Iterates the base point over one periodicity cell [0, period)^m.
template <typename Fn>
void for_cell(int m, double period, double h, Fn&& fn) {
  const int steps = std::max(1, static_cast<int>(std::floor(period / h)));
  std::array<int, 4> idx{};
  std::array<double, 4> a{};
  while (true) {
    for (int j = 0; j < m; ++j) a[j] = idx[j] * period / steps;
    fn(std::span<const double>(a.data(), m));
    int j = m - 1;
    while (j >= 0 && idx[j] == steps - 1) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
  }
}

// Iterates displacements s with |s|_inf <= radius on an h-grid.
template <typename Fn>
void for_displacements(int m, double radius, double h, Fn&& fn) {
  const int steps = std::max(1, static_cast<int>(std::ceil(radius / h)));
  std::array<int, 4> idx{};
  std::array<double, 4> s{};
  for (int j = 0; j < m; ++j) idx[j] = -steps;
  while (true) {
    for (int j = 0; j < m; ++j) s[j] = idx[j] * radius / steps;
    fn(std::span<const double>(s.data(), m));
    int j = m - 1;
    while (j >= 0 && idx[j] == steps) idx[j--] = -steps;
    if (j < 0) break;
    ++idx[j];
  }
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

BEstimate estimate_b(const Interaction& L, double y, double grid_step) {
  if (y < 0.0) throw std::invalid_argument("estimate_b: energy level must be >= 0");
  if (L.m > 2) throw std::invalid_argument("estimate_b: grid search supports m <= 2");
  const int m = L.m;
  const double h = grid_step * L.period;

  // b2(y): largest displacement with L(a, a + s) <= y somewhere in the cell.
  // Expand the search radius until a full extra period stays above level y.
  double b2 = 0.0;
  double radius = L.period;
  const double radius_cap = 1e6 * L.period;
  while (true) {
    bool found_beyond = false;
    std::array<double, 4> bbuf{};
    for_cell(m, L.period, h, [&](std::span<const double> a) {
      for_displacements(m, radius, h, [&](std::span<const double> s) {
        const double len = norm2(s);
        if (len <= b2) return;
        for (int j = 0; j < m; ++j) bbuf[j] = a[j] + s[j];
        if (std::abs(L.value(a, std::span<const double>(bbuf.data(), m))) <= y) {
          b2 = len;
          if (len > radius - L.period) found_beyond = true;
        }
      });
    });
    if (!found_beyond) break;
    radius += L.period;
    if (radius > radius_cap)
      throw std::runtime_error(
          "estimate_b: sublevel set not bounded within search cap ((L2) violated numerically)");
  }

  // b1(x): sup of L_1^2 over displacements up to x = b2(y).
  double b1 = 0.0;
  std::array<double, 4> bbuf{}, gbuf{};
  const double reach = std::max(b2, h);
  for_cell(m, L.period, h, [&](std::span<const double> a) {
    for_displacements(m, reach, h, [&](std::span<const double> s) {
      if (norm2(s) > b2 + 1e-12) return;
      for (int j = 0; j < m; ++j) bbuf[j] = a[j] + s[j];
      L.d1(a, std::span<const double>(bbuf.data(), m), std::span<double>(gbuf.data(), m));
      double g2 = 0.0;
      for (int j = 0; j < m; ++j) g2 += gbuf[j] * gbuf[j];
      b1 = std::max(b1, g2);
    });
  });

  return {b1, b2, h};
}

}  // namespace latteds
