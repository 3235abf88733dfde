#include "hochkit/modules.hpp"

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

SparseMatrix combine(const std::vector<SparseMatrix>& mats, const SparseVector& coeffs, std::size_t n) {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (const auto& [i, c] : coeffs) {
    const SparseMatrix& m = mats[i];
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [col, v] : m.row(r)) t.emplace_back(r, col, c * v);
  }
  return SparseMatrix::from_triplets(n, n, std::move(t));
}

std::string ids(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void require_semisimple(const Algebra& a) {
  if (!a.is_semisimple()) {
    throw Error(ErrorCode::MiddleNotSemisimple,
                a.name() + " is not semisimple; the underived tensor product is not exact over it");
  }
}

}  // namespace

ModuleRep ModuleRep::create(AlgebraPtr algebra, std::vector<SparseMatrix> action, std::string label) {
  ModuleRep m = create_trusted(std::move(algebra), std::move(action), std::move(label));
  validate(m);
  return m;
}

ModuleRep ModuleRep::create_trusted(AlgebraPtr algebra, std::vector<SparseMatrix> action, std::string label) {
  if (action.size() != algebra->dim()) {
    throw Error(ErrorCode::NotAModule, "expected " + std::to_string(algebra->dim()) + " action matrices, got " +
                                           std::to_string(action.size()));
  }
  ModuleRep m;
  m.dim_ = action.empty() ? 0 : action.front().rows();
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].rows() != m.dim_ || action[i].cols() != m.dim_) {
      throw Error(ErrorCode::NotAModule, "action " + std::to_string(i) + " is not " + std::to_string(m.dim_) +
                                             "x" + std::to_string(m.dim_));
    }
  }
  m.algebra_ = std::move(algebra);
  m.action_ = std::move(action);
  m.label_ = std::move(label);
  return m;
}

ModuleRep ModuleRep::zero(AlgebraPtr algebra) {
  std::vector<SparseMatrix> action(algebra->dim(), SparseMatrix(0, 0));
  return create_trusted(std::move(algebra), std::move(action), "0");
}

SparseMatrix ModuleRep::act(const Vector& a) const { return act(to_sparse(a)); }

SparseMatrix ModuleRep::act(const SparseVector& a) const { return combine(action_, a, dim_); }

std::vector<SparseMatrix> ModuleRep::generator_actions() const {
  std::vector<SparseMatrix> out;
  out.reserve(algebra_->generators().size());
  for (const auto& g : algebra_->generators()) out.push_back(act(g));
  return out;
}

void validate(const ModuleRep& m) {
  const Algebra& a = *m.algebra();
  if (m.act(a.unit()) != SparseMatrix::identity(m.dim())) {
    throw Error(ErrorCode::NotAModule, "unit does not act as the identity");
  }
  // Multiplicativity against generators on the left suffices: words in the
  // generators span A.
  const auto gens = m.generator_actions();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVector gj = a.multiply(a.generators()[g], SparseVector{{j, CycScalar(1)}});
      if (gens[g] * m.action(j) != m.act(gj)) {
        throw Error(ErrorCode::NotAModule, "action not multiplicative at generator " + std::to_string(g) +
                                               ", basis element " + std::to_string(j));
      }
    }
  }
}

ModuleRep regular_module(const AlgebraPtr& a) {
  std::vector<SparseMatrix> action;
  action.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->left_mult(i));
  return ModuleRep::create_trusted(a, std::move(action), "regular");
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  if (!same_algebra(*m.algebra(), *n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "direct sum");
  std::vector<SparseMatrix> action;
  for (std::size_t i = 0; i < m.actions().size(); ++i) action.push_back(block_diagonal(m.action(i), n.action(i)));
  return ModuleRep::create_trusted(m.algebra(), std::move(action), "sum(" + m.label() + "," + n.label() + ")");
}

ModuleRep dual_module(const ModuleRep& m) {
  std::vector<SparseMatrix> action;
  for (const auto& a : m.actions()) action.push_back(a.transpose());
  return ModuleRep::create_trusted(opposite(m.algebra()), std::move(action), "dual(" + m.label() + ")");
}

ModuleRep rebase(const ModuleRep& m, AlgebraPtr algebra) {
  if (!same_algebra(*m.algebra(), *algebra)) throw Error(ErrorCode::AlgebraMismatch, "rebase");
  return ModuleRep::create_trusted(std::move(algebra), m.actions(), m.label());
}

bool is_opposite(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.product(i, j) != b.product(j, i)) return false;
    }
  return true;
}

SparseVector flatten(const SparseMatrix& t) {
  SparseVector v;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (const auto& [j, x] : t.row(i)) v.emplace_back(i * t.cols() + j, x);
  return v;
}

SparseMatrix unflatten(const SparseVector& v, std::size_t rows, std::size_t cols) {
  std::vector<SparseVector> data(rows);
  for (const auto& [k, x] : v) data[k / cols].emplace_back(k % cols, x);
  return SparseMatrix::from_rows(cols, std::move(data));
}

std::optional<Vector> HomBasis::coordinates(const SparseMatrix& t) const {
  if (t.rows() != target_dim || t.cols() != source_dim) throw Error(ErrorCode::ShapeMismatch, "hom coordinates");
  return space.coordinates(flatten(t));
}

HomBasis hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (!same_algebra(*m.algebra(), *n.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, m.algebra()->name() + " vs " + n.algebra()->name());
  }
  const std::size_t sm = m.dim();
  const std::size_t sn = n.dim();
  HomBasis h;
  h.source_dim = sm;
  h.target_dim = sn;
  h.space = Subspace(sm * sn);
  if (sm == 0 || sn == 0) return h;
  // Unknown T[i][k] sits at i * sm + k. Row (g, i, j): (T M_g - N_g T)[i][j].
  const auto mg = m.generator_actions();
  const auto ng = n.generator_actions();
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  std::size_t row = 0;
  for (std::size_t g = 0; g < mg.size(); ++g) {
    const SparseMatrix mt = mg[g].transpose();
    for (std::size_t i = 0; i < sn; ++i)
      for (std::size_t j = 0; j < sm; ++j, ++row) {
        for (const auto& [k, v] : mt.row(j)) t.emplace_back(row, i * sm + k, v);
        for (const auto& [k, v] : ng[g].row(i)) t.emplace_back(row, k * sm + j, -v);
      }
  }
  const SparseMatrix system = SparseMatrix::from_triplets(row, sm * sn, std::move(t));
  h.space = nullspace(system);
  for (const auto& v : h.space.basis()) h.basis.push_back(unflatten(v, sn, sm));
  return h;
}

bool is_intertwiner(const ModuleRep& m, const ModuleRep& n, const SparseMatrix& t) {
  if (t.rows() != n.dim() || t.cols() != m.dim()) return false;
  const auto mg = m.generator_actions();
  const auto ng = n.generator_actions();
  for (std::size_t g = 0; g < mg.size(); ++g) {
    if (t * mg[g] != ng[g] * t) return false;
  }
  return true;
}

std::vector<std::size_t> multiplicities(const ModuleRep& m, std::span<const ModuleRep> simples) {
  std::vector<std::size_t> out;
  for (const auto& s : simples) out.push_back(hom_space(s, m).dim());
  return out;
}

SparseMatrix TensorProduct::descend(const SparseMatrix& op) const {
  const SparseMatrix p_op = projection * op;
  const SparseMatrix q = p_op * lift;
  if (q * projection != p_op) throw Error(ErrorCode::NotWellDefined, "operator does not preserve the relations");
  return q;
}

namespace {

TensorProduct tensor_over_actions(const std::vector<SparseMatrix>& right_gens, std::size_t dx,
                                  const std::vector<SparseMatrix>& left_gens, std::size_t dy) {
  // Column (g, i, j) of the relation matrix is x_i.g (x) y_j - x_i (x) g.y_j.
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  std::size_t col = 0;
  for (std::size_t g = 0; g < right_gens.size(); ++g) {
    const SparseMatrix rt = right_gens[g].transpose();
    const SparseMatrix lt = left_gens[g].transpose();
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dy; ++j, ++col) {
        for (const auto& [k, v] : rt.row(i)) t.emplace_back(k * dy + j, col, v);
        for (const auto& [k, v] : lt.row(j)) t.emplace_back(i * dy + k, col, -v);
      }
  }
  const SparseMatrix rel = SparseMatrix::from_triplets(dx * dy, col, std::move(t));
  Cokernel ck = cokernel_projector(rel);
  TensorProduct out;
  out.dim = ck.complement.dim();
  out.left_dim = dx;
  out.right_dim = dy;
  out.projection = std::move(ck.projection);
  out.lift = std::move(ck.lift);
  return out;
}

// Descends every matrix; only generator images are checked for
// well-definedness, which covers the rest by multiplicativity.
std::vector<SparseMatrix> descend_all(const TensorProduct& tp, const Algebra& alg,
                                      const std::vector<SparseMatrix>& ops, bool on_left) {
  const SparseMatrix id_l = SparseMatrix::identity(tp.left_dim);
  const SparseMatrix id_r = SparseMatrix::identity(tp.right_dim);
  auto lift_op = [&](const SparseMatrix& m) { return on_left ? kron(m, id_r) : kron(id_l, m); };
  for (const auto& g : alg.generators()) tp.descend(lift_op(combine(ops, g, ops.empty() ? 0 : ops[0].rows())));
  std::vector<SparseMatrix> out;
  out.reserve(ops.size());
  for (const auto& m : ops) out.push_back(tp.projection * lift_op(m) * tp.lift);
  return out;
}

}  // namespace

TensorProduct tensor_over(const ModuleRep& m, const ModuleRep& n) {
  if (!is_opposite(*n.algebra(), *m.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, "tensor_over needs a right " + n.algebra()->name() + "-module");
  }
  return tensor_over_actions(m.generator_actions(), m.dim(), n.generator_actions(), n.dim());
}

Bimodule Bimodule::create(AlgebraPtr source, AlgebraPtr target, std::vector<SparseMatrix> left,
                          std::vector<SparseMatrix> right, std::string label) {
  Bimodule k = create_trusted(std::move(source), std::move(target), std::move(left), std::move(right),
                              std::move(label));
  validate(k);
  return k;
}

Bimodule Bimodule::create_trusted(AlgebraPtr source, AlgebraPtr target, std::vector<SparseMatrix> left,
                                  std::vector<SparseMatrix> right, std::string label) {
  if (left.size() != target->dim() || right.size() != source->dim()) {
    throw Error(ErrorCode::NotAModule, "bimodule action counts do not match the algebras");
  }
  Bimodule k;
  k.dim_ = !left.empty() ? left.front().rows() : 0;
  for (const auto* list : {&left, &right})
    for (const auto& m : *list) {
      if (m.rows() != k.dim_ || m.cols() != k.dim_) throw Error(ErrorCode::NotAModule, "bimodule matrix shape");
    }
  k.source_ = std::move(source);
  k.target_ = std::move(target);
  k.left_ = std::move(left);
  k.right_ = std::move(right);
  k.label_ = std::move(label);
  return k;
}

ModuleRep Bimodule::left_module() const { return ModuleRep::create_trusted(target_, left_, label_); }

ModuleRep Bimodule::right_module() const { return ModuleRep::create_trusted(opposite(source_), right_, label_); }

ModuleRep Bimodule::as_module() const {
  AlgebraPtr env = tensor(target_, opposite(source_));
  std::vector<SparseMatrix> action;
  action.reserve(env->dim());
  for (const auto& l : left_)
    for (const auto& r : right_) action.push_back(l * r);
  return ModuleRep::create_trusted(env, std::move(action), label_);
}

void validate(const Bimodule& k) {
  const ModuleRep l = k.left_module();
  const ModuleRep r = k.right_module();
  validate(l);
  validate(r);
  const auto lg = l.generator_actions();
  const auto rg = r.generator_actions();
  for (std::size_t i = 0; i < lg.size(); ++i)
    for (std::size_t j = 0; j < rg.size(); ++j) {
      if (lg[i] * rg[j] != rg[j] * lg[i]) {
        throw Error(ErrorCode::NotAModule, "left and right actions do not commute at generators " + ids(i, j));
      }
    }
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(a->left_mult(i));
    right.push_back(a->right_mult(i));
  }
  return Bimodule::create_trusted(a, a, std::move(left), std::move(right), "regular(" + a->name() + ")");
}

Bimodule outer(const ModuleRep& v, const ModuleRep& w) {
  // v lives over opposite(A); recover A with the same basis.
  AlgebraPtr source = opposite(v.algebra());
  const SparseMatrix iv = SparseMatrix::identity(v.dim());
  const SparseMatrix iw = SparseMatrix::identity(w.dim());
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  for (const auto& m : w.actions()) left.push_back(kron(m, iv));
  for (const auto& m : v.actions()) right.push_back(kron(iw, m));
  return Bimodule::create_trusted(std::move(source), w.algebra(), std::move(left), std::move(right),
                                  "outer(" + v.label() + "," + w.label() + ")");
}

Bimodule kernel_tensor(const Bimodule& k1, const Bimodule& k2) {
  AlgebraPtr source = tensor(k1.source(), k2.source());
  AlgebraPtr target = tensor(k1.target(), k2.target());
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  left.reserve(target->dim());
  right.reserve(source->dim());
  for (const auto& a : k1.left())
    for (const auto& b : k2.left()) left.push_back(kron(a, b));
  for (const auto& a : k1.right())
    for (const auto& b : k2.right()) right.push_back(kron(a, b));
  return Bimodule::create_trusted(std::move(source), std::move(target), std::move(left), std::move(right),
                                  k1.label() + "⊠" + k2.label());
}

Bimodule kernel_sum(const Bimodule& k1, const Bimodule& k2) {
  if (!same_algebra(*k1.source(), *k2.source()) || !same_algebra(*k1.target(), *k2.target())) {
    throw Error(ErrorCode::AlgebraMismatch, "kernel sum");
  }
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  for (std::size_t i = 0; i < k1.left().size(); ++i) left.push_back(block_diagonal(k1.left()[i], k2.left()[i]));
  for (std::size_t i = 0; i < k1.right().size(); ++i) right.push_back(block_diagonal(k1.right()[i], k2.right()[i]));
  return Bimodule::create_trusted(k1.source(), k1.target(), std::move(left), std::move(right),
                                  k1.label() + "⊕" + k2.label());
}

Bimodule dual_kernel(const Bimodule& k) {
  for (const auto* a : {&k.source(), &k.target()}) {
    if (!(*a)->serre()) throw Error(ErrorCode::MissingSerreData, (*a)->name() + " has no Frobenius trace");
  }
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;
  for (const auto& m : k.right()) left.push_back(m.transpose());
  for (const auto& m : k.left()) right.push_back(m.transpose());
  return Bimodule::create_trusted(k.target(), k.source(), std::move(left), std::move(right),
                                  "dual(" + k.label() + ")");
}

Bimodule convolve(const Bimodule& k1, const Bimodule& k2) {
  if (!same_algebra(*k1.target(), *k2.source())) {
    throw Error(ErrorCode::AlgebraMismatch, k1.target()->name() + " vs " + k2.source()->name());
  }
  require_semisimple(*k1.target());
  const Algebra& mid = *k1.target();
  std::vector<SparseMatrix> rg;
  std::vector<SparseMatrix> lg;
  for (const auto& g : mid.generators()) {
    rg.push_back(combine(k2.right(), g, k2.dim()));
    lg.push_back(combine(k1.left(), g, k1.dim()));
  }
  const TensorProduct tp = tensor_over_actions(rg, k2.dim(), lg, k1.dim());
  auto left = descend_all(tp, *k2.target(), k2.left(), true);
  auto right = descend_all(tp, *k1.source(), k1.right(), false);
  return Bimodule::create_trusted(k1.source(), k2.target(), std::move(left), std::move(right),
                                  "(" + k2.label() + "∘" + k1.label() + ")");
}

KernelApplication apply_kernel_full(const Bimodule& k, const ModuleRep& m) {
  if (!same_algebra(*k.source(), *m.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, k.source()->name() + " vs " + m.algebra()->name());
  }
  require_semisimple(*k.source());
  std::vector<SparseMatrix> rg;
  for (const auto& g : k.source()->generators()) rg.push_back(combine(k.right(), g, k.dim()));
  TensorProduct tp = tensor_over_actions(rg, k.dim(), m.generator_actions(), m.dim());
  auto action = descend_all(tp, *k.target(), k.left(), true);
  return {ModuleRep::create_trusted(k.target(), std::move(action), k.label() + "(" + m.label() + ")"), std::move(tp)};
}

ModuleRep apply_kernel(const Bimodule& k, const ModuleRep& m) { return apply_kernel_full(k, m).module; }

SparseMatrix KernelApplication::induced(const SparseMatrix& mu) const {
  return tensor.descend(kron(SparseMatrix::identity(tensor.left_dim), mu));
}

ModuleRep vector_space(std::size_t dim) {
  return ModuleRep::create_trusted(field_algebra(), {SparseMatrix::identity(dim)}, "C^" + std::to_string(dim));
}

}  // namespace hochkit
