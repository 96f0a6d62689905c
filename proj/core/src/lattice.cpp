#include "latteds/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latteds {

std::string to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "frozen";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "frozen") return Boundary::frozen;
  throw std::invalid_argument("unknown boundary policy '" + s + "' (expected periodic|frozen)");
}

Window::Window(int dim, int radius, Boundary boundary, int buffer)
    : dim_(dim), radius_(radius), boundary_(boundary), buffer_(buffer) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("window dim must be in [1, " + std::to_string(kMaxDim) + "]");
  if (radius < 1) throw std::invalid_argument("window radius must be >= 1");
  if (buffer < 0 || buffer >= radius)
    throw std::invalid_argument("window buffer must be in [0, radius)");
  const std::int64_t ext = extent();
  count_ = 1;
  for (int j = dim_ - 1; j >= 0; --j) {
    stride_[j] = count_;
    count_ *= ext;
  }
}

bool Window::contains(const Site& s) const {
  for (int j = 0; j < dim_; ++j)
    if (s[j] < -radius_ || s[j] > radius_) return false;
  return true;
}

std::int64_t Window::index_of(const Site& s) const {
  std::int64_t idx = 0;
  for (int j = 0; j < dim_; ++j) idx += static_cast<std::int64_t>(s[j] + radius_) * stride_[j];
  return idx;
}

Site Window::site_at(std::int64_t index) const {
  Site s{};
  for (int j = 0; j < dim_; ++j) {
    s[j] = static_cast<int>(index / stride_[j]) - radius_;
    index %= stride_[j];
  }
  return s;
}

std::int64_t Window::resolve(Site s) const {
  const int ext = extent();
  for (int j = 0; j < dim_; ++j) {
    if (s[j] < -radius_ || s[j] > radius_) {
      if (boundary_ == Boundary::periodic) {
        int c = (s[j] + radius_) % ext;
        if (c < 0) c += ext;
        s[j] = c - radius_;
      } else {
        s[j] = std::clamp(s[j], -radius_, radius_);
      }
    }
  }
  return index_of(s);
}

std::int64_t Window::neighbor(std::int64_t index, int axis, int dir) const {
  const int c = static_cast<int>(index / stride_[axis] % extent()) - radius_;
  const int moved = c + dir;
  if (moved >= -radius_ && moved <= radius_) return index + dir * stride_[axis];
  if (boundary_ == Boundary::periodic)
    return index - static_cast<std::int64_t>(moved - dir + radius_) * stride_[axis] +
           static_cast<std::int64_t>((moved + radius_ + extent()) % extent()) * stride_[axis];
  return index;  // frozen: clamp to the edge site itself
}

bool Window::on_edge(std::int64_t index) const {
  const Site s = site_at(index);
  for (int j = 0; j < dim_; ++j)
    if (s[j] == -radius_ || s[j] == radius_) return true;
  return false;
}

Field::Field(const Window& window, int width, double fill)
    : window_(window), width_(width),
      values_(static_cast<std::size_t>(window.site_count()) * width, fill) {
  if (width < 1) throw std::invalid_argument("field width must be >= 1");
}

bool Field::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

static void check_axis(const Field& u, int axis) {
  if (axis < 0 || axis >= u.window().dim())
    throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for dim " +
                                std::to_string(u.window().dim()));
}

Field shift(const Field& u, int axis, int dir) {
  check_axis(u, axis);
  if (dir != 1 && dir != -1) throw std::invalid_argument("shift direction must be +1 or -1");
  const Window& w = u.window();
  Field out(w, u.width());
  const int M = u.width();
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    const std::int64_t src = w.neighbor(i, axis, dir);
    for (int c = 0; c < M; ++c) out.at(i, c) = u.at(src, c);
  }
  return out;
}

Field diff(const Field& u, int axis, DiffVariant variant) {
  check_axis(u, axis);
  const Window& w = u.window();
  Field out(w, u.width());
  const int M = u.width();
  const int dir = variant == DiffVariant::backward ? -1 : +1;
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    const std::int64_t other = w.neighbor(i, axis, dir);
    for (int c = 0; c < M; ++c) {
      const double here = u.at(i, c);
      const double there = u.at(other, c);
      out.at(i, c) = variant == DiffVariant::backward ? here - there : there - here;
    }
  }
  return out;
}

Field grad(const Field& u, DiffVariant variant) {
  if (u.width() != 1) throw std::invalid_argument("grad expects a scalar field");
  const Window& w = u.window();
  Field out(w, w.dim());
  for (int j = 0; j < w.dim(); ++j) {
    const Field dj = diff(u, j, variant);
    for (std::int64_t i = 0; i < w.site_count(); ++i) out.at(i, j) = dj.at(i, 0);
  }
  return out;
}

Field divergence(const Field& v, DiffVariant variant) {
  const Window& w = v.window();
  if (v.width() != w.dim())
    throw std::invalid_argument("divergence expects a width-N field on an N-dim window");
  Field out(w, 1);
  const int dir = variant == DiffVariant::backward ? -1 : +1;
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < w.dim(); ++j) {
      const std::int64_t other = w.neighbor(i, j, dir);
      const double here = v.at(i, j);
      const double there = v.at(other, j);
      sum += variant == DiffVariant::backward ? here - there : there - here;
    }
    out.at(i, 0) = sum;
  }
  return out;
}

Field laplacian(const Field& u) {
  const Window& w = u.window();
  Field out(w, u.width());
  const int M = u.width();
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    for (int c = 0; c < M; ++c) {
      double sum = 0.0;
      for (int j = 0; j < w.dim(); ++j) {
        sum += u.at(w.neighbor(i, j, +1), c) + u.at(w.neighbor(i, j, -1), c) - 2.0 * u.at(i, c);
      }
      out.at(i, c) = sum;
    }
  }
  return out;
}

static void check_cube_fits(const Window& w, int r) {
  if (r < 1) throw std::domain_error("cube radius must be >= 1");
  if (r > w.radius())
    throw std::domain_error("cube radius " + std::to_string(r) + " exceeds window radius " +
                            std::to_string(w.radius()));
}

std::vector<std::int64_t> cube_sites(const Window& w, const CubeSpec& spec) {
  check_cube_fits(w, spec.radius);
  const int r = spec.radius;
  const int lo = spec.variant == CubeVariant::C ? -r : -r + 1;
  const int hi = spec.variant == CubeVariant::C ? r - 1 : r;
  const int N = w.dim();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(std::pow(2.0 * r, N)));
  Site s{};
  for (int j = 0; j < N; ++j) s[j] = lo;
  while (true) {
    out.push_back(w.index_of(s));
    int j = N - 1;
    while (j >= 0 && s[j] == hi) s[j--] = lo;
    if (j < 0) break;
    ++s[j];
  }
  return out;
}

Site normal(const Site& s, int r, CubeVariant variant) {
  Site n{};
  // Roles of the +r and -r faces swap between the two cube variants.
  const int plus = variant == CubeVariant::Cstar ? r : -r;
  const int minus = -plus;
  const int sign = variant == CubeVariant::Cstar ? +1 : -1;
  int minus_count = 0, minus_axis = -1;
  for (int j = 0; j < kMaxDim; ++j) {
    if (s[j] == minus) {
      ++minus_count;
      minus_axis = j;
    }
  }
  if (minus_count == 1) {
    n[minus_axis] = -sign;
    return n;
  }
  if (minus_count == 0) {
    for (int j = 0; j < kMaxDim; ++j)
      if (s[j] == plus) n[j] = sign;
  }
  return n;  // zero at multi-corners of the minus face and in the interior
}

std::vector<Site> boundary_shell(int dim, int r) {
  std::vector<Site> out;
  Site s{};
  for (int j = 0; j < dim; ++j) s[j] = -r;
  while (true) {
    int m = 0;
    for (int j = 0; j < dim; ++j) m = std::max(m, std::abs(s[j]));
    if (m == r) out.push_back(s);
    int j = dim - 1;
    while (j >= 0 && s[j] == r) s[j--] = -r;
    if (j < 0) break;
    ++s[j];
  }
  return out;
}

std::vector<std::int64_t> boundary_sites(const Window& w, int r, CubeVariant variant) {
  check_cube_fits(w, r);
  const int N = w.dim();
  const int lo = variant == CubeVariant::C ? -r : -r + 1;
  const int hi = variant == CubeVariant::C ? r - 1 : r;
  std::vector<std::int64_t> out;
  for (int axis = 0; axis < N; ++axis) {
    for (int face : {+r, -r}) {
      Site s{};
      for (int j = 0; j < N; ++j) s[j] = j == axis ? face : lo;
      while (true) {
        out.push_back(w.index_of(s));
        int j = N - 1;
        while (j >= 0 && (j == axis || s[j] == hi)) {
          if (j != axis) s[j] = lo;
          --j;
        }
        if (j < 0) break;
        ++s[j];
      }
    }
  }
  return out;
}

std::pair<double, double> stokes_sum(const Field& v, int r, CubeVariant variant) {
  const Window& w = v.window();
  check_cube_fits(w, r);
  if (v.width() != w.dim())
    throw std::invalid_argument("stokes_sum expects a width-N field on an N-dim window");

  const DiffVariant dvar =
      variant == CubeVariant::Cstar ? DiffVariant::backward : DiffVariant::forward;
  double interior = 0.0;
  const Field dv = divergence(v, dvar);
  for (std::int64_t i : cube_sites(w, {r, variant})) interior += dv.at(i, 0);

  double boundary = 0.0;
  for (const Site& s : boundary_shell(w.dim(), r)) {
    const Site n = normal(s, r, variant);
    const std::int64_t i = w.index_of(s);
    for (int j = 0; j < w.dim(); ++j)
      if (n[j] != 0) boundary += n[j] * v.at(i, j);
  }
  return {interior, boundary};
}

}  // namespace latteds
