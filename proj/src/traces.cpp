#include "hochkit/traces.hpp"

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

void check_shape(const SparseMatrix& mu, const TensorShape& s) {
  if (mu.rows() != s.g_dim * s.e_dim || mu.cols() != s.f_dim * s.e_dim) {
    throw Error(ErrorCode::ShapeMismatch, "map is " + std::to_string(mu.rows()) + "x" + std::to_string(mu.cols()) +
                                              ", expected " + std::to_string(s.g_dim * s.e_dim) + "x" +
                                              std::to_string(s.f_dim * s.e_dim));
  }
}

// x (x) e (x) e* at (x * n + e) * n + e*
SparseMatrix coevaluation(std::size_t f, std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t i = 0; i < n; ++i) t.emplace_back((x * n + i) * n + i, x, CycScalar(1));
  return SparseMatrix::from_triplets(f * n * n, f, std::move(t));
}

SparseMatrix swap_last_two(std::size_t g, std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t y = 0; y < g; ++y)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.emplace_back((y * n + j) * n + i, (y * n + i) * n + j, CycScalar(1));
  return SparseMatrix::from_triplets(g * n * n, g * n * n, std::move(t));
}

// y (x) e* (x) e -> <e*, e> y
SparseMatrix evaluation(std::size_t g, std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t y = 0; y < g; ++y)
    for (std::size_t i = 0; i < n; ++i) t.emplace_back(y, (y * n + i) * n + i, CycScalar(1));
  return SparseMatrix::from_triplets(g, g * n * n, std::move(t));
}

// Restriction of a map X (x) F -> Y (x) F to the block (rows in [r0, r0+rn), cols in [c0, c0+cn)) of F.
SparseMatrix block(const SparseMatrix& m, std::size_t x, std::size_t y, std::size_t fd, std::size_t r0,
                   std::size_t rn, std::size_t c0, std::size_t cn) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t yi = r / fd;
    const std::size_t fr = r % fd;
    if (fr < r0 || fr >= r0 + rn) continue;
    for (const auto& [c, v] : m.row(r)) {
      const std::size_t fc = c % fd;
      if (fc < c0 || fc >= c0 + cn) continue;
      t.emplace_back(yi * rn + (fr - r0), (c / fd) * cn + (fc - c0), v);
    }
  }
  return SparseMatrix::from_triplets(y * rn, x * cn, std::move(t));
}

}  // namespace

CycScalar serre_trace(const ModuleRep& m, const SparseMatrix& f) {
  if (f.rows() != m.dim() || f.cols() != m.dim()) throw Error(ErrorCode::ShapeMismatch, "serre_trace");
  if (!is_intertwiner(m, m, f)) throw Error(ErrorCode::NotIntertwiner, "serre_trace on " + m.label());
  return f.trace();
}

SparseMatrix generalized_trace(const SparseMatrix& mu, const TensorShape& s) {
  check_shape(mu, s);
  const SparseMatrix mu_e = kron(mu, SparseMatrix::identity(s.e_dim));
  return evaluation(s.g_dim, s.e_dim) * swap_last_two(s.g_dim, s.e_dim) * mu_e * coevaluation(s.f_dim, s.e_dim);
}

SparseMatrix partial_trace_direct(const SparseMatrix& mu, const TensorShape& s) {
  check_shape(mu, s);
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t r = 0; r < mu.rows(); ++r)
    for (const auto& [c, v] : mu.row(r)) {
      if (r % s.e_dim == c % s.e_dim) t.emplace_back(r / s.e_dim, c / s.e_dim, v);
    }
  return SparseMatrix::from_triplets(s.g_dim, s.f_dim, std::move(t));
}

TriangleReport trace_triangle_check(const TriangleInput& in) {
  const std::size_t fd = in.e_dim + in.g_dim;
  const TensorShape se{in.x_dim, in.y_dim, in.e_dim};
  const TensorShape sf{in.x_dim, in.y_dim, fd};
  const TensorShape sg{in.x_dim, in.y_dim, in.g_dim};
  TriangleReport r;
  r.defect = generalized_trace(in.e, se) - generalized_trace(in.f, sf) + generalized_trace(in.g, sg);
  // f(E) lands in E with restriction e, the G-to-E block is unconstrained,
  // the E-to-G block vanishes and the G-to-G block is g.
  r.squares_commute = block(in.f, in.x_dim, in.y_dim, fd, 0, in.e_dim, 0, in.e_dim) == in.e &&
                      block(in.f, in.x_dim, in.y_dim, fd, in.e_dim, in.g_dim, 0, in.e_dim).is_zero() &&
                      block(in.f, in.x_dim, in.y_dim, fd, in.e_dim, in.g_dim, in.e_dim, in.g_dim) == in.g;
  return r;
}

}  // namespace hochkit
