#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

/// Left module over an algebra: one dim x dim matrix per basis element.
/// A module over opposite(A) doubles as a right A-module with the same
/// matrices, i.e. R_{ab} = R_b R_a.
class ModuleRep {
 public:
  ModuleRep() = default;
  /// Validates the action (unit acts as identity, multiplicativity).
  static ModuleRep create(AlgebraPtr algebra, std::vector<SparseMatrix> action, std::string label = {});
  static ModuleRep create_trusted(AlgebraPtr algebra, std::vector<SparseMatrix> action, std::string label = {});
  /// Zero-dimensional module.
  static ModuleRep zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const SparseMatrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<SparseMatrix>& actions() const noexcept { return action_; }
  SparseMatrix act(const Vector& a) const;
  SparseMatrix act(const SparseVector& a) const;
  /// Action of each algebra generator, in generator order.
  std::vector<SparseMatrix> generator_actions() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> action_;
  std::string label_;
};

void validate(const ModuleRep& m);

ModuleRep regular_module(const AlgebraPtr& a);
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
/// Linear dual with transposed matrices; a module over opposite(A).
ModuleRep dual_module(const ModuleRep& m);
/// Same matrices reinterpreted over `algebra`, which must have the same
/// structure constants as m's algebra.
ModuleRep rebase(const ModuleRep& m, AlgebraPtr algebra);

/// True when b's structure constants are a's transposed.
bool is_opposite(const Algebra& a, const Algebra& b);

/// A-linear maps M -> N. Matrices are target_dim x source_dim, flattened
/// row-major into the coordinates of `space`.
struct HomBasis {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Subspace space;
  std::vector<SparseMatrix> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  /// Coordinates of an intertwiner in `basis`, nullopt if t is not one.
  std::optional<Vector> coordinates(const SparseMatrix& t) const;
};

HomBasis hom_space(const ModuleRep& m, const ModuleRep& n);
bool is_intertwiner(const ModuleRep& m, const ModuleRep& n, const SparseMatrix& t);

SparseVector flatten(const SparseMatrix& t);
SparseMatrix unflatten(const SparseVector& v, std::size_t rows, std::size_t cols);

/// dim Hom(S, M) for each S.
std::vector<std::size_t> multiplicities(const ModuleRep& m, std::span<const ModuleRep> simples);

/// X (x) Y divided by the relations x.g (x) y - x (x) g.y over the middle
/// algebra's generators.
struct TensorProduct {
  std::size_t dim = 0;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  SparseMatrix projection;
  SparseMatrix lift;

  /// Induced operator on the quotient from op acting on X (x) Y. Throws
  /// NotWellDefined when op does not preserve the relations.
  SparseMatrix descend(const SparseMatrix& op) const;
};

/// m is a right A-module (a module over opposite(A)), n a left A-module.
TensorProduct tensor_over(const ModuleRep& m, const ModuleRep& n);

/// Kernel from A to B: a (B, A)-bimodule, acting as M |-> K (x)_A M.
/// Left matrices are indexed by the basis of B, right matrices by the basis
/// of A with R_{aa'} = R_{a'} R_a.
class Bimodule {
 public:
  Bimodule() = default;
  static Bimodule create(AlgebraPtr source, AlgebraPtr target, std::vector<SparseMatrix> left,
                         std::vector<SparseMatrix> right, std::string label = {});
  static Bimodule create_trusted(AlgebraPtr source, AlgebraPtr target, std::vector<SparseMatrix> left,
                                 std::vector<SparseMatrix> right, std::string label = {});

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<SparseMatrix>& left() const noexcept { return left_; }
  const std::vector<SparseMatrix>& right() const noexcept { return right_; }

  /// The target-side action as a left module.
  ModuleRep left_module() const;
  /// The source-side action as a module over opposite(source).
  ModuleRep right_module() const;
  /// Single module over tensor(target, opposite(source)).
  ModuleRep as_module() const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_;
  std::vector<SparseMatrix> right_;
  std::string label_;
};

void validate(const Bimodule& k);

/// The diagonal kernel A as an (A, A)-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a);
/// W (x) V with v a module over opposite(A) and w a module over B; a kernel
/// from A to B.
Bimodule outer(const ModuleRep& v, const ModuleRep& w);
/// Kernel from A1 (x) A2 to B1 (x) B2.
Bimodule kernel_tensor(const Bimodule& k1, const Bimodule& k2);
Bimodule kernel_sum(const Bimodule& k1, const Bimodule& k2);
/// Linear dual with the two actions exchanged: a kernel from B to A.
Bimodule dual_kernel(const Bimodule& k);
/// k1: A -> B, k2: B -> C; returns k2 (x)_B k1 : A -> C.
Bimodule convolve(const Bimodule& k1, const Bimodule& k2);
/// K (x)_A M over the target algebra.
ModuleRep apply_kernel(const Bimodule& k, const ModuleRep& m);

/// K (x)_A M together with its quotient data.
struct KernelApplication {
  ModuleRep module;
  TensorProduct tensor;

  /// id_K (x) mu on K (x)_A M for an A-linear endomorphism mu of M.
  SparseMatrix induced(const SparseMatrix& mu) const;
};
KernelApplication apply_kernel_full(const Bimodule& k, const ModuleRep& m);

/// Module over the field with the given dimension.
ModuleRep vector_space(std::size_t dim);

}  // namespace hochkit
