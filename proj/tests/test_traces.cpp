#include <doctest.h>

#include <random>

#include "hochkit/error.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/traces.hpp"

using namespace hochkit;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, CycScalar(d(rng)));
  return m;
}

// Entry (y, x) of the partial trace is sum over e of mu[(y, e), (x, e)].
SparseMatrix entrywise_partial_trace(const SparseMatrix& mu, std::size_t f, std::size_t g, std::size_t e) {
  SparseMatrix out(g, f);
  for (std::size_t y = 0; y < g; ++y)
    for (std::size_t x = 0; x < f; ++x) {
      CycScalar s;
      for (std::size_t k = 0; k < e; ++k) s += mu.get(y * e + k, x * e + k);
      out.set(y, x, s);
    }
  return out;
}

// f on X (x) (E + G) from its three blocks; the E-to-G block is zero.
SparseMatrix assemble_split(const TriangleInput& in, const SparseMatrix& corner) {
  const std::size_t fd = in.e_dim + in.g_dim;
  SparseMatrix f(in.y_dim * fd, in.x_dim * fd);
  for (std::size_t y = 0; y < in.y_dim; ++y)
    for (std::size_t x = 0; x < in.x_dim; ++x) {
      for (std::size_t a = 0; a < in.e_dim; ++a) {
        for (std::size_t b = 0; b < in.e_dim; ++b) f.set(y * fd + a, x * fd + b, in.e.get(y * in.e_dim + a, x * in.e_dim + b));
        for (std::size_t b = 0; b < in.g_dim; ++b)
          f.set(y * fd + a, x * fd + in.e_dim + b, corner.get(y * in.e_dim + a, x * in.g_dim + b));
      }
      for (std::size_t a = 0; a < in.g_dim; ++a)
        for (std::size_t b = 0; b < in.g_dim; ++b)
          f.set(y * fd + in.e_dim + a, x * fd + in.e_dim + b, in.g.get(y * in.g_dim + a, x * in.g_dim + b));
    }
  return f;
}

TriangleInput random_triangle(std::mt19937& rng, bool block_diagonal) {
  TriangleInput in;
  in.x_dim = 2;
  in.y_dim = 1 + rng() % 3;
  in.e_dim = 1 + rng() % 3;
  in.g_dim = 1 + rng() % 2;
  in.e = random_matrix(rng, in.y_dim * in.e_dim, in.x_dim * in.e_dim);
  in.g = random_matrix(rng, in.y_dim * in.g_dim, in.x_dim * in.g_dim);
  const SparseMatrix corner = block_diagonal ? SparseMatrix(in.y_dim * in.e_dim, in.x_dim * in.g_dim)
                                             : random_matrix(rng, in.y_dim * in.e_dim, in.x_dim * in.g_dim);
  in.f = assemble_split(in, corner);
  return in;
}

}  // namespace

TEST_CASE("serre trace is the ordinary trace") {
  const Fixture s3 = load_fixture("s3");
  for (const auto& v : s3.simples) CHECK(serre_trace(v, SparseMatrix::identity(v.dim())) == CycScalar(static_cast<long>(v.dim())));
  // a central element acts on a simple by a scalar
  for (const auto& z : center_basis(*s3.algebra))
    for (const auto& v : s3.simples) {
      const SparseMatrix act = v.act(z);
      const CycScalar omega = act.get(0, 0);
      CHECK(serre_trace(v, act) == omega * CycScalar(static_cast<long>(v.dim())));
    }
}

TEST_CASE("serre trace rejects non-intertwiners") {
  const Fixture s3 = load_fixture("s3");
  SparseMatrix p(2, 2);
  p.set(0, 0, 1);
  try {
    (void)serre_trace(s3.simples[2], p);
    FAIL("expected NotIntertwiner");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntertwiner);
  }
  try {
    (void)serre_trace(s3.simples[2], SparseMatrix::identity(3));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("serre trace is symmetric under composition") {
  std::mt19937 rng(2);
  const Fixture s3 = load_fixture("s3");
  const ModuleRep m = direct_sum(s3.simples[2], direct_sum(s3.simples[0], s3.simples[2]));
  const ModuleRep n = direct_sum(s3.simples[2], s3.simples[0]);
  const HomBasis mn = hom_space(m, n);
  const HomBasis nm = hom_space(n, m);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix f(n.dim(), m.dim());
    SparseMatrix g(m.dim(), n.dim());
    for (const auto& b : mn.basis) f = f + b.scaled(CycScalar(d(rng)));
    for (const auto& b : nm.basis) g = g + b.scaled(CycScalar(d(rng)));
    CHECK(serre_trace(m, g * f) == serre_trace(n, f * g));
  }
}

TEST_CASE("generalized trace agrees with the entrywise formula") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const TensorShape s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    const SparseMatrix mu = random_matrix(rng, s.g_dim * s.e_dim, s.f_dim * s.e_dim);
    const SparseMatrix expected = entrywise_partial_trace(mu, s.f_dim, s.g_dim, s.e_dim);
    CHECK(generalized_trace(mu, s) == expected);
    CHECK(partial_trace_direct(mu, s) == expected);
  }
}

TEST_CASE("generalized trace special cases") {
  std::mt19937 rng(6);
  // E = field
  const SparseMatrix phi = random_matrix(rng, 2, 3);
  CHECK(generalized_trace(phi, {3, 2, 1}) == phi);
  // F = G = field gives the ordinary trace
  const SparseMatrix sq = random_matrix(rng, 4, 4);
  CHECK(generalized_trace(sq, {1, 1, 4}).get(0, 0) == sq.trace());
  // decomposable phi (x) psi
  const SparseMatrix psi = random_matrix(rng, 3, 3);
  CHECK(generalized_trace(kron(phi, psi), {3, 2, 3}) == phi.scaled(psi.trace()));
  try {
    (void)generalized_trace(phi, {2, 2, 2});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("generalized trace is natural in the outer factor") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t f = 1 + rng() % 3, g = 1 + rng() % 3, h = 1 + rng() % 3, e = 1 + rng() % 3;
    const SparseMatrix mu = random_matrix(rng, g * e, f * e);
    const SparseMatrix nu = random_matrix(rng, h, g);
    const SparseMatrix lhs = generalized_trace(kron(nu, SparseMatrix::identity(e)) * mu, {f, h, e});
    CHECK(lhs == nu * generalized_trace(mu, {f, g, e}));
  }
}

TEST_CASE("trace is additive on split triangles") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const TriangleReport diag = trace_triangle_check(random_triangle(rng, true));
    CHECK(diag.ok());
    const TriangleReport full = trace_triangle_check(random_triangle(rng, false));
    CHECK(full.ok());
  }
}

TEST_CASE("inconsistent triangle data is reported") {
  std::mt19937 rng(12);
  TriangleInput in = random_triangle(rng, false);
  SparseMatrix shift(in.g.rows(), in.g.cols());
  shift.set(0, 0, 1);
  in.g = in.g + shift;
  const TriangleReport r = trace_triangle_check(in);
  CHECK(!r.squares_commute);
  CHECK(!r.defect.is_zero());
  CHECK(!r.ok());
}
