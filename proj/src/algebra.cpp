#include "hochkit/algebra.hpp"

#include <numeric>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

SparseVector kron(const SparseVector& a, const SparseVector& b, std::size_t dim_b) {
  SparseVector out;
  out.reserve(a.size() * b.size());
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace_back(i * dim_b + j, x * y);
  return out;
}

SparseVector unit_vector(std::size_t i) { return SparseVector{{i, CycScalar(1)}}; }

unsigned entry_order(const Algebra::Data& d) {
  unsigned order = d.field_order;
  for (const auto& p : d.products)
    for (const auto& e : p) order = std::lcm(order, e.second.order());
  for (const auto& u : d.unit) order = std::lcm(order, u.order());
  return order;
}

// sum_l c_l * (e_l * e_k)
SparseVector times_right(const Algebra& a, const SparseVector& x, std::size_t k) {
  SparseVector out;
  for (const auto& [l, c] : x) axpy(out, c, a.product(l, k));
  return out;
}

SparseVector times_left(const Algebra& a, std::size_t i, const SparseVector& x) {
  SparseVector out;
  for (const auto& [l, c] : x) axpy(out, c, a.product(i, l));
  return out;
}

void check_shape(const Algebra::Data& d) {
  const std::size_t n = d.unit.size();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "algebra of dimension 0");
  if (d.products.size() != n * n) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n * n) + " products");
  }
  for (const auto& p : d.products) {
    if (!p.empty() && p.back().first >= n) throw Error(ErrorCode::ShapeMismatch, "product coordinate out of range");
  }
  if (d.serre && d.serre->trace.size() != n) throw Error(ErrorCode::ShapeMismatch, "frobenius length");
  if (!d.labels.empty() && d.labels.size() != n) throw Error(ErrorCode::ShapeMismatch, "label count");
}

void check_unit(const Algebra& a) {
  const SparseVector u = to_sparse(a.unit());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const SparseVector e = unit_vector(i);
    if (times_right(a, u, i) != e || times_left(a, i, u) != e) {
      throw Error(ErrorCode::UnitLawFails, "unit law fails at basis element " + std::to_string(i));
    }
  }
}

void check_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (times_right(a, a.product(i, j), k) != times_left(a, i, a.product(j, k))) {
          throw Error(ErrorCode::NotAssociative, "(e" + std::to_string(i) + " e" + std::to_string(j) +
                                                     ") e" + std::to_string(k) + " differs at (" +
                                                     std::to_string(i) + "," + std::to_string(j) +
                                                     "," + std::to_string(k) + ")");
        }
      }
}

void check_frobenius(const Algebra& a) {
  if (!a.serre()) return;
  const Vector& lambda = a.serre()->trace;
  const std::size_t n = a.dim();
  SparseMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CycScalar v = dot(a.product(i, j), lambda);
      if (v != dot(a.product(j, i), lambda)) {
        throw Error(ErrorCode::DegenerateFrobeniusForm,
                    "trace form not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      gram.set(i, j, v);
    }
  const std::size_t r = rank(gram);
  if (r != n) {
    throw Error(ErrorCode::DegenerateFrobeniusForm,
                "trace form has rank " + std::to_string(r) + " < " + std::to_string(n));
  }
}

}  // namespace

Algebra::Algebra(Data data) : d_(std::move(data)) {
  check_shape(d_);
  d_.field_order = entry_order(d_);
  if (d_.labels.empty()) {
    for (std::size_t i = 0; i < dim(); ++i) d_.labels.push_back("e" + std::to_string(i));
  }
  generators_ = d_.generators;
  if (generators_.empty()) {
    for (std::size_t i = 0; i < dim(); ++i) generators_.push_back(unit_vector(i));
  }
  while (unit_index_ < dim() && d_.unit[unit_index_].is_zero()) ++unit_index_;
  if (unit_index_ == dim()) throw Error(ErrorCode::UnitLawFails, "unit is zero");

  trace_coeffs_.resize(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    CycScalar t;
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& [l, c] : product(k, j)) {
        if (l == j) t += c;
      }
    }
    trace_coeffs_[k] = std::move(t);
  }

  if (d_.semisimple) {
    semisimple_ = *d_.semisimple;
  } else {
    // Characteristic zero: semisimple iff the regular trace form is nondegenerate.
    SparseMatrix gram(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) gram.set(i, j, dot(product(i, j), trace_coeffs_));
    semisimple_ = rank(gram) == dim();
  }
}

std::shared_ptr<const Algebra> Algebra::create(Data data) {
  std::shared_ptr<const Algebra> a(new Algebra(std::move(data)));
  check_unit(*a);
  check_associative(*a);
  check_frobenius(*a);
  return a;
}

std::shared_ptr<const Algebra> Algebra::create_trusted(Data data) {
  return std::shared_ptr<const Algebra>(new Algebra(std::move(data)));
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  return to_dense(multiply(to_sparse(a), to_sparse(b)), dim());
}

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const CycScalar xy = x * y;
      for (const auto& [k, c] : product(i, j)) t.emplace_back(0, k, xy * c);
    }
  return SparseMatrix::from_triplets(1, dim(), std::move(t)).row(0);
}

SparseMatrix Algebra::left_mult(std::size_t i) const {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : product(i, j)) t.emplace_back(k, j, c);
  return SparseMatrix::from_triplets(dim(), dim(), std::move(t));
}

SparseMatrix Algebra::right_mult(std::size_t i) const {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : product(j, i)) t.emplace_back(k, j, c);
  return SparseMatrix::from_triplets(dim(), dim(), std::move(t));
}

SparseMatrix Algebra::left_mult(const Vector& a) const {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(i, j)) t.emplace_back(k, j, a[i] * c);
  }
  return SparseMatrix::from_triplets(dim(), dim(), std::move(t));
}

SparseMatrix Algebra::right_mult(const Vector& a) const {
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(j, i)) t.emplace_back(k, j, a[i] * c);
  }
  return SparseMatrix::from_triplets(dim(), dim(), std::move(t));
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = CycScalar(1);
  return v;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  return a.dim() == b.dim() && a.unit() == b.unit() && a.data().products == b.data().products;
}

void validate(const Algebra& a) {
  check_shape(a.data());
  check_unit(a);
  check_associative(a);
  check_frobenius(a);
}

AlgebraPtr field_algebra() {
  static const AlgebraPtr k = [] {
    Algebra::Data d;
    d.name = "field";
    d.labels = {"1"};
    d.products = {unit_vector(0)};
    d.unit = {CycScalar(1)};
    d.serre = SerreData{{CycScalar(1)}};
    d.semisimple = true;
    return Algebra::create(std::move(d));
  }();
  return k;
}

AlgebraPtr group_algebra(const Group& g, std::string name) {
  const std::size_t n = g.order();
  Algebra::Data d;
  d.name = name.empty() ? "C[G]" : std::move(name);
  d.labels = g.labels;
  d.products.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.products.push_back(unit_vector(g.mul(a, b)));
  d.unit.assign(n, CycScalar());
  d.unit[0] = CycScalar(1);
  d.serre = SerreData{d.unit};
  d.field_order = static_cast<unsigned>(g.exponent());
  for (std::size_t s : g.generators) d.generators.push_back(unit_vector(s));
  d.semisimple = true;
  // The table is a validated group, so associativity and the unit law hold.
  return Algebra::create_trusted(std::move(d));
}

AlgebraPtr matrix_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "matrix algebra of size 0");
  Algebra::Data d;
  d.name = "mat:" + std::to_string(n);
  const std::size_t dim = n * n;
  d.products.resize(dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) d.products[(i * n + j) * dim + (j * n + l)] = unit_vector(i * n + l);
    }
  d.unit.assign(dim, CycScalar());
  for (std::size_t i = 0; i < n; ++i) d.unit[i * n + i] = CycScalar(1);
  d.serre = SerreData{d.unit};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d.generators.push_back(unit_vector(i * n + i + 1));
    d.generators.push_back(unit_vector((i + 1) * n + i));
  }
  if (n == 1) d.generators.push_back(unit_vector(0));
  d.semisimple = true;
  return Algebra::create_trusted(std::move(d));
}

AlgebraPtr truncated_poly(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::ShapeMismatch, "truncated polynomial algebra needs k >= 2");
  Algebra::Data d;
  d.name = k == 2 ? "dual" : "trunc:" + std::to_string(k);
  d.products.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    d.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < k; ++j) d.products[i * k + j] = unit_vector(i + j);
  }
  d.unit.assign(k, CycScalar());
  d.unit[0] = CycScalar(1);
  d.generators.push_back(unit_vector(1));
  d.semisimple = false;
  return Algebra::create_trusted(std::move(d));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  Algebra::Data d = a->data();
  const std::string& n0 = a->name();
  d.name = n0.starts_with("op(") && n0.ends_with(")") ? n0.substr(3, n0.size() - 4) : "op(" + n0 + ")";
  const std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.products[i * n + j] = a->product(j, i);
  d.generators = a->generators();
  d.semisimple = a->is_semisimple();
  return Algebra::create_trusted(std::move(d));
}

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t na = a->dim();
  const std::size_t nb = b->dim();
  Algebra::Data d;
  d.name = "tensor(" + a->name() + "," + b->name() + ")";
  for (const auto& la : a->labels())
    for (const auto& lb : b->labels()) d.labels.push_back(la + "⊗" + lb);
  d.products.resize(na * nb * na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          d.products[(i * nb + j) * (na * nb) + (k * nb + l)] = kron(a->product(i, k), b->product(j, l), nb);
        }
  d.unit = to_dense(kron(to_sparse(a->unit()), to_sparse(b->unit()), nb), na * nb);
  if (a->serre() && b->serre()) {
    d.serre = SerreData{to_dense(kron(to_sparse(a->serre()->trace), to_sparse(b->serre()->trace), nb), na * nb)};
  }
  d.field_order = std::lcm(a->field_order(), b->field_order());
  const SparseVector ua = to_sparse(a->unit());
  const SparseVector ub = to_sparse(b->unit());
  for (const auto& g : a->generators()) d.generators.push_back(kron(g, ub, nb));
  for (const auto& h : b->generators()) d.generators.push_back(kron(ua, h, nb));
  d.semisimple = a->is_semisimple() && b->is_semisimple();
  return Algebra::create_trusted(std::move(d));
}

AlgebraPtr enveloping(const AlgebraPtr& a) {
  AlgebraPtr e = tensor(a, opposite(a));
  Algebra::Data d = e->data();
  d.name = "env(" + a->name() + ")";
  return Algebra::create_trusted(std::move(d));
}

namespace {

// Stacked rows of x |-> g x - x g over the generators.
SparseMatrix commutator_system(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> rows;
  rows.reserve(a.generators().size() * n);
  for (const auto& g : a.generators()) {
    const Vector gv = to_dense(g, n);
    const SparseMatrix m = a.left_mult(gv) - a.right_mult(gv);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  }
  return SparseMatrix::from_rows(n, std::move(rows));
}

}  // namespace

std::vector<Vector> center_basis(const Algebra& a) {
  const Subspace z = nullspace(commutator_system(a));
  std::vector<Vector> out;
  out.reserve(z.dim());
  for (const auto& v : z.basis()) out.push_back(to_dense(v, a.dim()));
  return out;
}

Subspace commutator_subspace(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> spanning;
  for (const auto& g : a.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector e = unit_vector(j);
      SparseVector c = a.multiply(g, e);
      axpy(c, CycScalar(-1), a.multiply(e, g));
      if (!c.empty()) spanning.push_back(std::move(c));
    }
  }
  return Subspace::span(spanning, n);
}

CycScalar regular_trace(const Algebra& a, const Vector& x) {
  if (x.size() != a.dim()) throw Error(ErrorCode::ShapeMismatch, "element length");
  CycScalar t;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) t += x[k] * a.trace_coefficients()[k];
  }
  return t;
}

bool is_central(const Algebra& a, const Vector& z) {
  if (z.size() != a.dim()) return false;
  const SparseVector zs = to_sparse(z);
  for (const auto& g : a.generators()) {
    if (a.multiply(g, zs) != a.multiply(zs, g)) return false;
  }
  return true;
}

}  // namespace hochkit
