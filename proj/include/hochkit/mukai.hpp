#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

/// An element of HH_0 represented by a central element of A.
struct MukaiClass {
  AlgebraPtr algebra;
  Vector coords;
};

/// Throws InvariantViolation unless z is central.
MukaiClass make_class(const AlgebraPtr& a, Vector z);
MukaiClass zero_class(const AlgebraPtr& a);

/// Center basis with the Gram matrix of the regular trace, cached per algebra.
struct CenterData {
  std::vector<Vector> basis;
  /// gram[a][b] = chi_reg(z_a z_b)
  SparseMatrix gram;
  std::size_t gram_rank = 0;
};
const CenterData& center_data(const AlgebraPtr& a);

/// The regular trace of z. Throws MissingSerreData when A has no Frobenius
/// data.
CycScalar hochschild_trace(const Algebra& a, const Vector& z);

/// Serre twist on HH_0; the identity for symmetric Frobenius algebras.
MukaiClass tau(const MukaiClass& v);

CycScalar mukai_pairing(const MukaiClass& v, const MukaiClass& w);

struct PairingReport {
  MukaiClass left;
  MukaiClass right;
  CycScalar value;
  std::string method;
};
PairingReport pairing_report(const MukaiClass& v, const MukaiClass& w);

/// The central z with hochschild_trace(z f) = trace(rho_M(f)) for every
/// central f. Throws MissingSerreData or SingularGram.
MukaiClass chern(const ModuleRep& m);
/// The central z with hochschild_trace(z f) = trace(rho_M(f) e). Throws
/// NotIntertwiner for non-equivariant e.
MukaiClass iota_solve(const ModuleRep& m, const SparseMatrix& e);

/// Both sides of a scalar identity.
struct ScalarCheck {
  CycScalar lhs;
  CycScalar rhs;
  bool pass() const { return lhs == rhs; }
};

/// hochschild_trace(ch(M) f) against trace(rho_M(f)).
ScalarCheck chern_property_check(const ModuleRep& m, const Vector& f);
/// ch(M + N) - ch(M) - ch(N).
Vector chern_additivity_defect(const ModuleRep& m, const ModuleRep& n);
/// <ch M, ch N> against dim Hom(M, N).
ScalarCheck hrr_check(const ModuleRep& m, const ModuleRep& n);

/// ch of a one-dimensional structure module. Throws AugmentationNot1Dim.
MukaiClass todd(const ModuleRep& augmentation);
/// hochschild_trace(Td ch(M)) against dim Hom(augmentation, M).
ScalarCheck todd_hrr_check(const ModuleRep& augmentation, const ModuleRep& m);

/// <iota(e), iota(f)> against the trace of T |-> f T e on Hom(E, F).
ScalarCheck cardy_check(const ModuleRep& e_mod, const ModuleRep& f_mod, const SparseMatrix& e,
                        const SparseMatrix& f);

/// Phi^dagger(nu): the central z of the source with
/// trace(rho_S(z) mu) = trace(rho_{K S}(nu) (K (x) mu)) for every simple S and
/// every mu in End(S). Throws SingularGram when the simples do not separate
/// the center.
MukaiClass adjoint_transfer(const Bimodule& k, const MukaiClass& nu, std::span<const ModuleRep> source_simples);

struct PushforwardResult {
  MukaiClass value;
  /// Expansion in ch of the simples, mapped to ch of their images.
  Vector route_a;
  /// Adjointness solve against adjoint_transfer.
  Vector route_b;
};

/// Pushforward on HH_0 along k. Throws RoutesDisagree when the two routes
/// differ and MissingSimples when ch of the simples does not span Z(A).
PushforwardResult pushforward_detail(const Bimodule& k, const MukaiClass& v, std::span<const ModuleRep> source_simples);
MukaiClass pushforward(const Bimodule& k, const MukaiClass& v, std::span<const ModuleRep> source_simples);

struct PairCheck {
  std::size_t left = 0;
  std::size_t right = 0;
  CycScalar lhs;
  CycScalar rhs;
};

struct VectorCheck {
  std::size_t index = 0;
  Vector lhs;
  Vector rhs;
  bool pass() const { return lhs == rhs; }
};

/// <v, Phi_* w>_B against <Psi_* v, w>_A over center basis pairs (v over B,
/// w over A), with Psi the pushforward along dual_kernel(k).
std::vector<PairCheck> adjointness_check(const Bimodule& k, std::span<const ModuleRep> source_simples,
                                         std::span<const ModuleRep> target_simples);
/// (k2 k1)_* v against k2_* k1_* v over the center basis of A.
std::vector<VectorCheck> functoriality_check(const Bimodule& k1, const Bimodule& k2,
                                             std::span<const ModuleRep> a_simples,
                                             std::span<const ModuleRep> b_simples);
/// k_* ch(M) against ch(K (x) M).
VectorCheck commutation_check(const Bimodule& k, const ModuleRep& m, std::span<const ModuleRep> source_simples);

struct MoritaReport {
  std::string amplified;
  /// Matrix of the pushforward in center-basis coordinates (columns are
  /// images of the source basis).
  SparseMatrix pushforward_matrix;
  bool bijective = false;
  SparseMatrix gram_source;
  /// P^T gram_target P
  SparseMatrix gram_pulled_back;
  bool isometry = false;
  bool central_action_intertwined = false;
  /// ch of each simple mapped to ch of its image.
  bool chern_commutes = false;

  bool ok() const { return bijective && isometry && central_action_intertwined && chern_commutes; }
};

/// The row-space kernel C^n (x) A from A to M_n(A).
Bimodule morita_kernel(const AlgebraPtr& a, std::size_t n, const AlgebraPtr& amplified);
MoritaReport morita_isometry_check(const Fixture& a, std::size_t n);

}  // namespace hochkit
