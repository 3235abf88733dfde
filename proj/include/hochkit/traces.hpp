#pragma once

#include <cstddef>

#include "hochkit/linalg.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

/// Ordinary trace of an A-linear endomorphism of m. Throws NotIntertwiner.
CycScalar serre_trace(const ModuleRep& m, const SparseMatrix& f);

/// Dimensions of a map F (x) E -> G (x) E. Coordinates of x (x) e sit at
/// x * e_dim + e.
struct TensorShape {
  std::size_t f_dim = 0;
  std::size_t g_dim = 0;
  std::size_t e_dim = 0;
};

/// Partial trace over E, evaluated as the composite
/// (id_G (x) ev)(id_G (x) swap)(mu (x) id_E*)(id_F (x) coev).
SparseMatrix generalized_trace(const SparseMatrix& mu, const TensorShape& shape);
/// sum_e <e| mu |e>, entrywise.
SparseMatrix partial_trace_direct(const SparseMatrix& mu, const TensorShape& shape);

/// Endomorphisms e, f, g of X (x) E -> Y (x) E, X (x) F -> Y (x) F,
/// X (x) G -> Y (x) G for the split sequence E -> F = E + G -> G.
struct TriangleInput {
  std::size_t x_dim = 0;
  std::size_t y_dim = 0;
  std::size_t e_dim = 0;
  std::size_t g_dim = 0;
  SparseMatrix e;
  SparseMatrix f;
  SparseMatrix g;
};

struct TriangleReport {
  /// Tr_E(e) - Tr_F(f) + Tr_G(g), a map X -> Y.
  SparseMatrix defect;
  /// f restricts to e on E and induces g on G.
  bool squares_commute = false;

  bool ok() const { return squares_commute && defect.is_zero(); }
};

TriangleReport trace_triangle_check(const TriangleInput& in);

}  // namespace hochkit
