#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

struct ComplexLimits {
  std::size_t max_degree = 64;
  /// Largest chain space (in coordinates) the engine will assemble.
  std::size_t size_guard = 200000;
};

/// Graded spaces 0..top with differentials. For chain complexes
/// `differentials[k]` maps degree k+1 to degree k; for cochain complexes it
/// maps degree k to degree k+1.
struct ChainComplex {
  bool cohomological = false;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> differentials;

  /// Throws InvariantViolation at the first composable pair with d.d != 0.
  void check_square_zero() const;
  /// Homology dimensions in every degree whose incoming and outgoing maps
  /// are both present.
  std::vector<std::size_t> homology_dims(const LinalgOptions& options = {}) const;
};

/// Hochschild chain complex C_n = A (x) Abar^{(x)n} (normalized) or
/// A^{(x)(n+1)} (unnormalized), degrees 0..top.
ChainComplex bar_chain_complex(const Algebra& a, std::size_t top, bool normalized = true,
                               const ComplexLimits& limits = {});
/// Hochschild cochains Hom(Abar^{(x)n}, A), degrees 0..top.
ChainComplex bar_cochain_complex(const Algebra& a, std::size_t top, bool normalized = true,
                                 const ComplexLimits& limits = {});

struct HHResult {
  enum class Kind { Homology, Cohomology } kind = Kind::Homology;
  std::vector<std::size_t> dims;
  std::size_t max_degree = 0;
  bool normalized = true;
  /// Degree-0 representatives: a complement of [A,A] for homology, a basis
  /// of Z(A) for cohomology.
  std::vector<Vector> degree0;
};

HHResult hh_homology_dims(const Algebra& a, std::size_t max_degree, bool normalized = true,
                          const ComplexLimits& limits = {});
HHResult hh_cohomology_dims(const Algebra& a, std::size_t max_degree, bool normalized = true,
                            const ComplexLimits& limits = {});

/// Ext^0..Ext^max_degree over A via cochains Hom(Abar^{(x)n} (x) M, N) of the
/// normalized bar resolution of M.
std::vector<std::size_t> ext_dims(const ModuleRep& m, const ModuleRep& n, std::size_t max_degree,
                                  const ComplexLimits& limits = {});

/// A normalized Hochschild cochain of degree p: f(ebar_I) = sum_t F[I][t] e_t
/// with I in mixed radix over the reduced basis, flattened as I * dim + t.
struct Cochain {
  std::size_t degree = 0;
  Vector values;
};

/// A normalized Hochschild chain of degree n, coordinates indexed
/// a0 * (dim - 1)^n + I.
struct Chain {
  std::size_t degree = 0;
  Vector values;
};

/// Coboundary and boundary on single elements of the normalized complexes.
Cochain coboundary(const Algebra& a, const Cochain& f);
Chain boundary(const Algebra& a, const Chain& z);

/// (f u g)(a_1..a_{p+q}) = f(a_1..a_p) g(a_{p+1}..a_{p+q}). Throws NotACocycle
/// unless both inputs are cocycles.
Cochain cup_product(const Algebra& a, const Cochain& f, const Cochain& g);
/// f n (a_0 (x) ... (x) a_n) = a_0 f(a_1..a_p) (x) a_{p+1} (x) ... (x) a_n.
/// Throws DegreeUnderflow when p > n; with check_cycles, NotACocycle or
/// NotACycle for non-closed inputs.
Chain cap_product(const Algebra& a, const Cochain& f, const Chain& z, bool check_cycles = true);
/// Same formula without closedness checks, for chain-level identities.
Cochain cup_product_raw(const Algebra& a, const Cochain& f, const Cochain& g);

/// The cochain constant at the unit in degree 0.
Cochain unit_cochain(const Algebra& a);
bool is_coboundary(const Algebra& a, const Cochain& f, const ComplexLimits& limits = {});
bool is_boundary(const Algebra& a, const Chain& z, const ComplexLimits& limits = {});

}  // namespace hochkit
