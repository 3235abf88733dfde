#include "hochkit/mukai.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hochkit/error.hpp"
#include "hochkit/traces.hpp"

namespace hochkit {

namespace {

void require_serre(const Algebra& a) {
  if (!a.serre()) throw Error(ErrorCode::MissingSerreData, a.name() + " carries no Frobenius trace");
}

SparseMatrix columns_matrix(const std::vector<Vector>& cols, std::size_t rows) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      if (!cols[j][i].is_zero()) t.emplace_back(i, j, cols[j][i]);
    }
  return SparseMatrix::from_triplets(rows, cols.size(), std::move(t));
}

Vector combine(const std::vector<Vector>& basis, const Vector& c, std::size_t dim) {
  Vector z(dim);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (c[a].is_zero()) continue;
    for (std::size_t i = 0; i < dim; ++i) z[i] += c[a] * basis[a][i];
  }
  return z;
}

// The central element whose trace pairing against each center basis vector
// is rhs[b].
Vector solve_center(const AlgebraPtr& a, const Vector& rhs) {
  const CenterData& cd = center_data(a);
  if (cd.gram_rank < cd.basis.size()) {
    throw Error(ErrorCode::SingularGram, "trace pairing on Z(" + a->name() + ") has rank " +
                                             std::to_string(cd.gram_rank) + " < " + std::to_string(cd.basis.size()));
  }
  const auto c = solve(cd.gram, rhs);
  if (!c) throw Error(ErrorCode::SingularGram, "center system inconsistent over " + a->name());
  return combine(cd.basis, *c, a->dim());
}

Vector center_coordinates(const AlgebraPtr& a, const Vector& z) {
  const CenterData& cd = center_data(a);
  const auto c = solve(columns_matrix(cd.basis, a->dim()), z);
  if (!c) throw Error(ErrorCode::InvariantViolation, "element is not central in " + a->name());
  return *c;
}

// Everything needed to push classes along one kernel, computed once.
class PushforwardEngine {
 public:
  PushforwardEngine(const Bimodule& k, std::span<const ModuleRep> simples) : k_(k) {
    const AlgebraPtr& a = k.source();
    const AlgebraPtr& b = k.target();
    require_serre(*a);
    require_serre(*b);
    if (simples.empty()) throw Error(ErrorCode::MissingSimples, "no simple modules over " + a->name());
    std::vector<Vector> ch_simples;
    for (const auto& s : simples) {
      if (!same_algebra(*s.algebra(), *a)) throw Error(ErrorCode::AlgebraMismatch, "simple over " + s.algebra()->name());
      simples_.push_back(s);
      ch_simples.push_back(chern(s).coords);
      apps_.push_back(apply_kernel_full(k, s));
      ch_images_.push_back(chern(apps_.back().module).coords);
      endos_.push_back(hom_space(s, s).basis);
    }
    ch_matrix_ = columns_matrix(ch_simples, a->dim());
    if (rank(ch_matrix_) < center_data(a).basis.size()) {
      throw Error(ErrorCode::MissingSimples, "ch of the given simples does not span Z(" + a->name() + ")");
    }
    // Phi^dagger on each center basis vector of B.
    for (const auto& nu : center_data(b).basis) transfer_.push_back(transfer(nu));
  }

  Vector transfer(const Vector& nu) const {
    const AlgebraPtr& a = k_.source();
    const CenterData& ca = center_data(a);
    std::vector<SparseVector> rows;
    Vector rhs;
    for (std::size_t s = 0; s < simples_.size(); ++s) {
      const SparseMatrix nu_act = apps_[s].module.act(nu);
      std::vector<SparseMatrix> z_act;
      for (const auto& z : ca.basis) z_act.push_back(simples_[s].act(z));
      for (const auto& mu : endos_[s]) {
        Vector row(ca.basis.size());
        for (std::size_t c = 0; c < ca.basis.size(); ++c) row[c] = (z_act[c] * mu).trace();
        rows.push_back(to_sparse(row));
        rhs.push_back((nu_act * apps_[s].induced(mu)).trace());
      }
    }
    const SparseMatrix sys = SparseMatrix::from_rows(ca.basis.size(), std::move(rows));
    if (rank(sys) < ca.basis.size()) {
      throw Error(ErrorCode::SingularGram, "simples do not separate Z(" + a->name() + ")");
    }
    const auto c = solve(sys, rhs);
    if (!c) throw Error(ErrorCode::InvariantViolation, "adjoint transfer system inconsistent");
    return combine(ca.basis, *c, a->dim());
  }

  PushforwardResult push(const MukaiClass& v) const {
    const AlgebraPtr& a = k_.source();
    const AlgebraPtr& b = k_.target();
    if (!same_algebra(*v.algebra, *a)) throw Error(ErrorCode::AlgebraMismatch, "class over " + v.algebra->name());
    PushforwardResult r;
    const auto c = solve(ch_matrix_, v.coords);
    if (!c) throw Error(ErrorCode::MissingSimples, "class outside the span of ch of the simples");
    r.route_a = combine(ch_images_, *c, b->dim());
    Vector rhs;
    for (const auto& t : transfer_) rhs.push_back(hochschild_trace(*a, a->multiply(t, v.coords)));
    r.route_b = solve_center(b, rhs);
    if (r.route_a != r.route_b) {
      throw Error(ErrorCode::RoutesDisagree, "pushforward along " + k_.label() + ": route A and route B differ");
    }
    r.value = {b, r.route_a};
    return r;
  }

 private:
  Bimodule k_;
  std::vector<ModuleRep> simples_;
  std::vector<KernelApplication> apps_;
  std::vector<Vector> ch_images_;
  std::vector<std::vector<SparseMatrix>> endos_;
  SparseMatrix ch_matrix_;
  std::vector<Vector> transfer_;
};

}  // namespace

const CenterData& center_data(const AlgebraPtr& a) {
  struct Entry {
    std::weak_ptr<const Algebra> owner;
    std::unique_ptr<CenterData> data;
  };
  static std::mutex mutex;
  static std::map<const Algebra*, Entry> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(a.get());
  if (it != cache.end() && !it->second.owner.expired()) return *it->second.data;
  auto cd = std::make_unique<CenterData>();
  cd->basis = center_basis(*a);
  const std::size_t n = cd->basis.size();
  std::vector<Vector> gram(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram[i][j] = regular_trace(*a, a->multiply(cd->basis[i], cd->basis[j]));
      gram[j][i] = gram[i][j];
    }
  cd->gram = n == 0 ? SparseMatrix(0, 0) : SparseMatrix::from_dense(gram);
  cd->gram_rank = rank(cd->gram);
  Entry& e = cache[a.get()];
  e.owner = a;
  e.data = std::move(cd);
  return *e.data;
}

MukaiClass make_class(const AlgebraPtr& a, Vector z) {
  if (z.size() != a->dim()) throw Error(ErrorCode::ShapeMismatch, "class has the wrong length");
  if (!is_central(*a, z)) throw Error(ErrorCode::InvariantViolation, "element is not central in " + a->name());
  return {a, std::move(z)};
}

MukaiClass zero_class(const AlgebraPtr& a) { return {a, Vector(a->dim())}; }

CycScalar hochschild_trace(const Algebra& a, const Vector& z) {
  require_serre(a);
  return regular_trace(a, z);
}

MukaiClass tau(const MukaiClass& v) { return v; }

CycScalar mukai_pairing(const MukaiClass& v, const MukaiClass& w) {
  if (!same_algebra(*v.algebra, *w.algebra)) {
    throw Error(ErrorCode::AlgebraMismatch, v.algebra->name() + " vs " + w.algebra->name());
  }
  const MukaiClass tv = tau(v);
  return hochschild_trace(*v.algebra, v.algebra->multiply(tv.coords, w.coords));
}

PairingReport pairing_report(const MukaiClass& v, const MukaiClass& w) {
  return {v, w, mukai_pairing(v, w), "regular trace of tau(v) w, tau = id"};
}

MukaiClass chern(const ModuleRep& m) {
  const AlgebraPtr& a = m.algebra();
  require_serre(*a);
  Vector rhs;
  for (const auto& z : center_data(a).basis) rhs.push_back(m.act(z).trace());
  return {a, solve_center(a, rhs)};
}

MukaiClass iota_solve(const ModuleRep& m, const SparseMatrix& e) {
  const AlgebraPtr& a = m.algebra();
  require_serre(*a);
  if (e.rows() != m.dim() || e.cols() != m.dim()) throw Error(ErrorCode::ShapeMismatch, "iota_solve");
  if (!is_intertwiner(m, m, e)) throw Error(ErrorCode::NotIntertwiner, "iota_solve on " + m.label());
  Vector rhs;
  for (const auto& z : center_data(a).basis) rhs.push_back((m.act(z) * e).trace());
  return {a, solve_center(a, rhs)};
}

ScalarCheck chern_property_check(const ModuleRep& m, const Vector& f) {
  const MukaiClass ch = chern(m);
  return {hochschild_trace(*m.algebra(), m.algebra()->multiply(ch.coords, f)), m.act(f).trace()};
}

Vector chern_additivity_defect(const ModuleRep& m, const ModuleRep& n) {
  Vector d = chern(direct_sum(m, n)).coords;
  const Vector cm = chern(m).coords;
  const Vector cn = chern(n).coords;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= cm[i] + cn[i];
  return d;
}

ScalarCheck hrr_check(const ModuleRep& m, const ModuleRep& n) {
  return {mukai_pairing(chern(m), chern(n)), CycScalar(static_cast<long>(hom_space(m, n).dim()))};
}

MukaiClass todd(const ModuleRep& augmentation) {
  if (augmentation.dim() != 1) {
    throw Error(ErrorCode::AugmentationNot1Dim, "structure module has dimension " + std::to_string(augmentation.dim()));
  }
  return tau(chern(augmentation));
}

ScalarCheck todd_hrr_check(const ModuleRep& augmentation, const ModuleRep& m) {
  const MukaiClass td = todd(augmentation);
  const MukaiClass ch = chern(m);
  return {hochschild_trace(*m.algebra(), m.algebra()->multiply(td.coords, ch.coords)),
          CycScalar(static_cast<long>(hom_space(augmentation, m).dim()))};
}

ScalarCheck cardy_check(const ModuleRep& e_mod, const ModuleRep& f_mod, const SparseMatrix& e, const SparseMatrix& f) {
  const CycScalar lhs = mukai_pairing(iota_solve(e_mod, e), iota_solve(f_mod, f));
  const HomBasis h = hom_space(e_mod, f_mod);
  CycScalar tr;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const auto c = h.coordinates(f * h.basis[k] * e);
    if (!c) throw Error(ErrorCode::InvariantViolation, "f T e left the Hom space");
    tr += (*c)[k];
  }
  return {lhs, tr};
}

MukaiClass adjoint_transfer(const Bimodule& k, const MukaiClass& nu, std::span<const ModuleRep> source_simples) {
  if (!same_algebra(*nu.algebra, *k.target())) throw Error(ErrorCode::AlgebraMismatch, "adjoint_transfer");
  const PushforwardEngine engine(k, source_simples);
  return {k.source(), engine.transfer(nu.coords)};
}

PushforwardResult pushforward_detail(const Bimodule& k, const MukaiClass& v, std::span<const ModuleRep> source_simples) {
  return PushforwardEngine(k, source_simples).push(v);
}

MukaiClass pushforward(const Bimodule& k, const MukaiClass& v, std::span<const ModuleRep> source_simples) {
  return pushforward_detail(k, v, source_simples).value;
}

std::vector<PairCheck> adjointness_check(const Bimodule& k, std::span<const ModuleRep> source_simples,
                                         std::span<const ModuleRep> target_simples) {
  const AlgebraPtr& a = k.source();
  const AlgebraPtr& b = k.target();
  const PushforwardEngine phi(k, source_simples);
  const PushforwardEngine psi(dual_kernel(k), target_simples);
  const auto& za = center_data(a).basis;
  const auto& zb = center_data(b).basis;
  std::vector<MukaiClass> phi_w;
  for (const auto& w : za) phi_w.push_back(phi.push({a, w}).value);
  std::vector<PairCheck> out;
  for (std::size_t i = 0; i < zb.size(); ++i) {
    const MukaiClass v{b, zb[i]};
    const MukaiClass psi_v = psi.push(v).value;
    for (std::size_t j = 0; j < za.size(); ++j) {
      out.push_back({i, j, mukai_pairing(v, phi_w[j]), mukai_pairing(psi_v, MukaiClass{a, za[j]})});
    }
  }
  return out;
}

std::vector<VectorCheck> functoriality_check(const Bimodule& k1, const Bimodule& k2,
                                             std::span<const ModuleRep> a_simples,
                                             std::span<const ModuleRep> b_simples) {
  const AlgebraPtr& a = k1.source();
  const PushforwardEngine composite(convolve(k1, k2), a_simples);
  const PushforwardEngine first(k1, a_simples);
  const PushforwardEngine second(k2, b_simples);
  std::vector<VectorCheck> out;
  const auto& za = center_data(a).basis;
  for (std::size_t i = 0; i < za.size(); ++i) {
    const MukaiClass v{a, za[i]};
    out.push_back({i, composite.push(v).value.coords, second.push(first.push(v).value).value.coords});
  }
  return out;
}

VectorCheck commutation_check(const Bimodule& k, const ModuleRep& m, std::span<const ModuleRep> source_simples) {
  return {0, pushforward(k, chern(m), source_simples).coords, chern(apply_kernel(k, m)).coords};
}

Bimodule morita_kernel(const AlgebraPtr& a, std::size_t n, const AlgebraPtr& amplified) {
  const std::size_t da = a->dim();
  std::vector<SparseMatrix> left;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseMatrix e(n, n);
      e.set(i, j, CycScalar(1));
      for (std::size_t x = 0; x < da; ++x) left.push_back(kron(e, a->left_mult(x)));
    }
  std::vector<SparseMatrix> right;
  for (std::size_t x = 0; x < da; ++x) right.push_back(kron(SparseMatrix::identity(n), a->right_mult(x)));
  return Bimodule::create(a, amplified, std::move(left), std::move(right),
                          "C^" + std::to_string(n) + "⊗" + a->name());
}

MoritaReport morita_isometry_check(const Fixture& fa, std::size_t n) {
  const AlgebraPtr& a = fa.algebra;
  const AlgebraPtr b = tensor(matrix_algebra(n), a);
  const Bimodule k = morita_kernel(a, n, b);
  const PushforwardEngine engine(k, fa.simples);
  const CenterData& ca = center_data(a);
  const CenterData& cb = center_data(b);
  MoritaReport r;
  r.amplified = b->name();

  std::vector<Vector> images;
  std::vector<Vector> image_coords;
  for (const auto& z : ca.basis) {
    images.push_back(engine.push({a, z}).value.coords);
    image_coords.push_back(center_coordinates(b, images.back()));
  }
  r.pushforward_matrix = columns_matrix(image_coords, cb.basis.size());
  r.bijective = ca.basis.size() == cb.basis.size() && rank(r.pushforward_matrix) == ca.basis.size();
  r.gram_source = ca.gram;
  r.gram_pulled_back = r.pushforward_matrix.transpose() * cb.gram * r.pushforward_matrix;
  r.isometry = r.gram_source == r.gram_pulled_back;

  // For each central z of A find z' in Z(B) acting on the kernel as z does
  // from the right, then compare Phi_*(z v) with z' Phi_*(v).
  r.central_action_intertwined = true;
  const ModuleRep kl = k.left_module();
  const ModuleRep kr = k.right_module();
  std::vector<SparseVector> cols;
  for (const auto& zb : cb.basis) cols.push_back(flatten(kl.act(zb)));
  const SparseMatrix sys = SparseMatrix::from_rows(k.dim() * k.dim(), std::move(cols)).transpose();
  for (const auto& z : ca.basis) {
    const auto c = solve(sys, to_dense(flatten(kr.act(z)), k.dim() * k.dim()));
    if (!c) {
      r.central_action_intertwined = false;
      break;
    }
    const Vector zp = combine(cb.basis, *c, b->dim());
    for (std::size_t i = 0; i < ca.basis.size(); ++i) {
      const Vector lhs = engine.push({a, a->multiply(z, ca.basis[i])}).value.coords;
      if (lhs != b->multiply(zp, images[i])) r.central_action_intertwined = false;
    }
  }

  r.chern_commutes = true;
  for (const auto& s : fa.simples) {
    if (engine.push(chern(s)).value.coords != chern(apply_kernel(k, s)).coords) r.chern_commutes = false;
  }
  return r;
}

}  // namespace hochkit
