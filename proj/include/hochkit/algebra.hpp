#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochkit/groups.hpp"
#include "hochkit/linalg.hpp"

namespace hochkit {

/// Symmetric Frobenius data. Only the trivial Nakayama twist is modeled, so
/// the trace functional alone determines the Serre structure.
struct SerreData {
  Vector trace;
};

/// Finite-dimensional unital associative algebra over Q(zeta_n), given by
/// structure constants e_i * e_j = sum_k c_ij^k e_k.
class Algebra {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    /// products[i * dim + j] = coordinates of e_i * e_j
    std::vector<SparseVector> products;
    Vector unit;
    std::optional<SerreData> serre;
    unsigned field_order = 1;
    /// Elements generating the algebra as a unital algebra. Empty means
    /// every basis element.
    std::vector<SparseVector> generators;
    /// Known semisimplicity; computed from the trace form when unset.
    std::optional<bool> semisimple;
  };

  /// Validates associativity, the unit law and the Frobenius form.
  static std::shared_ptr<const Algebra> create(Data data);
  /// Skips the associativity sweep. For constructions that are associative
  /// by design (tensor products, opposites of validated algebras).
  static std::shared_ptr<const Algebra> create_trusted(Data data);

  const std::string& name() const noexcept { return d_.name; }
  std::size_t dim() const noexcept { return d_.unit.size(); }
  const std::vector<std::string>& labels() const noexcept { return d_.labels; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return d_.products[i * dim() + j]; }
  const Vector& unit() const noexcept { return d_.unit; }
  const std::optional<SerreData>& serre() const noexcept { return d_.serre; }
  unsigned field_order() const noexcept { return d_.field_order; }
  const std::vector<SparseVector>& generators() const noexcept { return generators_; }
  bool is_semisimple() const noexcept { return semisimple_; }
  /// Basis index j with unit_j != 0 used to split off the unit.
  std::size_t unit_index() const noexcept { return unit_index_; }
  const Data& data() const noexcept { return d_; }
  /// tr(L_{e_k}) for every k.
  const Vector& trace_coefficients() const noexcept { return trace_coeffs_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  /// Matrix of x |-> e_i x (column j holds e_i e_j).
  SparseMatrix left_mult(std::size_t i) const;
  /// Matrix of x |-> x e_i.
  SparseMatrix right_mult(std::size_t i) const;
  SparseMatrix left_mult(const Vector& a) const;
  SparseMatrix right_mult(const Vector& a) const;
  Vector basis_vector(std::size_t i) const;

 private:
  explicit Algebra(Data data);
  Data d_;
  std::vector<SparseVector> generators_;
  std::size_t unit_index_ = 0;
  bool semisimple_ = false;
  Vector trace_coeffs_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Same structure constants and unit (pointer equality short-circuits).
bool same_algebra(const Algebra& a, const Algebra& b);

/// Re-runs every check of Algebra::create; throws on the first defect.
void validate(const Algebra& a);

AlgebraPtr field_algebra();
AlgebraPtr group_algebra(const Group& g, std::string name = {});
AlgebraPtr matrix_algebra(std::size_t n);
AlgebraPtr truncated_poly(std::size_t k);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr enveloping(const AlgebraPtr& a);

std::vector<Vector> center_basis(const Algebra& a);
Subspace commutator_subspace(const Algebra& a);
/// Trace of left multiplication by x.
CycScalar regular_trace(const Algebra& a, const Vector& x);
bool is_central(const Algebra& a, const Vector& z);

}  // namespace hochkit
