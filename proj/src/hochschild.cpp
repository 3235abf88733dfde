#include "hochkit/hochschild.hpp"

#include <string>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, CycScalar>>;

// Reduced basis for the normalized complexes: Abar = A / span(unit), with the
// basis elements e_i (i != unit_index) as lifts.
struct BarData {
  const Algebra* a = nullptr;
  std::size_t dim = 0;
  std::size_t rdim = 0;
  std::vector<std::size_t> lift;               // reduced index -> A index
  std::vector<SparseVector> proj;              // A index -> reduced coords
  std::vector<std::vector<SparseVector>> prod; // reduced x reduced -> reduced coords
  // For each reduced s: pairs (x, y, c) with prod[x][y] having c at s.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, CycScalar>>> preimage;

  BarData(const Algebra& alg, bool normalized) : a(&alg), dim(alg.dim()) {
    const std::size_t j = alg.unit_index();
    std::vector<std::size_t> to_reduced(dim, SIZE_MAX);
    for (std::size_t i = 0; i < dim; ++i) {
      if (normalized && i == j) continue;
      to_reduced[i] = lift.size();
      lift.push_back(i);
    }
    rdim = lift.size();
    proj.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (to_reduced[i] != SIZE_MAX) {
        proj[i] = {{to_reduced[i], CycScalar(1)}};
        continue;
      }
      // e_j = (1 - sum_{i != j} u_i e_i) / u_j
      const CycScalar inv = alg.unit()[j].inverse();
      for (std::size_t k = 0; k < dim; ++k) {
        if (k == j || alg.unit()[k].is_zero()) continue;
        proj[i].emplace_back(to_reduced[k], -(alg.unit()[k] * inv));
      }
    }
    prod.assign(rdim, std::vector<SparseVector>(rdim));
    preimage.resize(rdim);
    for (std::size_t x = 0; x < rdim; ++x)
      for (std::size_t y = 0; y < rdim; ++y) {
        prod[x][y] = project(alg.product(lift[x], lift[y]));
        for (const auto& [s, c] : prod[x][y]) preimage[s].emplace_back(x, y, c);
      }
  }

  SparseVector project(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [k, c] : v) axpy(out, c, proj[k]);
    return out;
  }

  std::size_t power(std::size_t n) const {
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= rdim;
    return p;
  }
};

CycScalar sign(std::size_t k) { return CycScalar(k % 2 == 0 ? 1 : -1); }

void guard_sizes(const std::vector<std::size_t>& dims, std::size_t top, const ComplexLimits& limits,
                 const char* what) {
  if (top > limits.max_degree + 1) {
    throw Error(ErrorCode::DegreeCapExceeded, std::string(what) + ": degree " + std::to_string(top - 1) +
                                                  " exceeds the cap " + std::to_string(limits.max_degree));
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] > limits.size_guard) {
      throw Error(ErrorCode::DegreeCapExceeded,
                  std::string(what) + ": degree " + std::to_string(k) + " space has " + std::to_string(dims[k]) +
                      " coordinates, above the size guard " + std::to_string(limits.size_guard));
    }
  }
}

std::vector<std::size_t> checked_dims(std::size_t base, std::size_t rdim, std::size_t top) {
  std::vector<std::size_t> dims;
  std::size_t d = base;
  for (std::size_t n = 0; n <= top; ++n) {
    dims.push_back(d);
    if (rdim != 0 && d > SIZE_MAX / rdim / 2) {
      // Saturate; the size guard rejects it.
      for (std::size_t k = n + 1; k <= top; ++k) dims.push_back(SIZE_MAX);
      break;
    }
    d *= rdim;
  }
  return dims;
}

// b: C_n -> C_{n-1}, n >= 1.
SparseMatrix chain_differential(const BarData& bd, std::size_t n) {
  const Algebra& a = *bd.a;
  const std::size_t rn = bd.power(n);
  const std::size_t rn1 = bd.power(n - 1);
  const std::size_t rest = bd.power(n - 1);  // radix of the tail after dropping the first factor
  Triplets t;
  std::vector<std::size_t> digits(n);
  for (std::size_t a0 = 0; a0 < bd.dim; ++a0) {
    for (std::size_t idx = 0; idx < rn; ++idx) {
      std::size_t rem = idx;
      for (std::size_t k = n; k-- > 0;) {
        digits[k] = rem % bd.rdim;
        rem /= bd.rdim;
      }
      const std::size_t col = a0 * rn + idx;
      // a0 a1 (x) a2 ... an
      const std::size_t tail = idx % rest;
      for (const auto& [k, c] : a.product(a0, bd.lift[digits[0]])) t.emplace_back(k * rn1 + tail, col, c);
      // interior merges
      for (std::size_t m = 0; m + 1 < n; ++m) {
        const CycScalar s = sign(m + 1);
        for (const auto& [x, c] : bd.prod[digits[m]][digits[m + 1]]) {
          std::size_t target = 0;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == m + 1) continue;
            target = target * bd.rdim + (k == m ? x : digits[k]);
          }
          t.emplace_back(a0 * rn1 + target, col, s * c);
        }
      }
      // (-1)^n an a0 (x) a1 ... a_{n-1}
      const std::size_t head = idx / bd.rdim;
      const CycScalar s = sign(n);
      for (const auto& [k, c] : a.product(bd.lift[digits[n - 1]], a0)) t.emplace_back(k * rn1 + head, col, s * c);
    }
  }
  return SparseMatrix::from_triplets(bd.dim * rn1, bd.dim * rn, std::move(t));
}

// Coboundary of cochains Hom(Abar^{(x)n} (x) M, N) with M of dim mdim and N
// of dim ndim. With left/right given by the algebra itself (M = field-like
// placeholder, N = A) this is the Hochschild coboundary.
struct CochainShape {
  std::size_t mdim = 1;
  std::size_t ndim = 0;
  // left action on values: for reduced x, matrix ndim x ndim
  std::vector<SparseMatrix> value_left;
  // right action on values (Hochschild case) or on the module argument
  std::vector<SparseMatrix> value_right;  // ndim x ndim, used when mdim == 1 and hochschild
  std::vector<SparseMatrix> arg_action;   // mdim x mdim, rho_M(e_x)
  bool hochschild = true;
};

SparseMatrix cochain_differential(const BarData& bd, const CochainShape& sh, std::size_t n) {
  const std::size_t rn = bd.power(n);
  const std::size_t block = sh.mdim * sh.ndim;
  const std::size_t src_dim = rn * block;
  const std::size_t dst_dim = rn * bd.rdim * block;
  Triplets t;
  std::vector<std::size_t> digits(n);
  for (std::size_t idx = 0; idx < rn; ++idx) {
    std::size_t rem = idx;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rem % bd.rdim;
      rem /= bd.rdim;
    }
    for (std::size_t s = 0; s < sh.mdim; ++s)
      for (std::size_t v = 0; v < sh.ndim; ++v) {
        const std::size_t col = (idx * sh.mdim + s) * sh.ndim + v;
        // a1 f(a2 ... a_{n+1})
        for (std::size_t x = 0; x < bd.rdim; ++x) {
          const std::size_t target = x * rn + idx;
          const SparseMatrix& l = sh.value_left[x];
          for (std::size_t w = 0; w < sh.ndim; ++w) {
            const CycScalar c = l.get(w, v);
            if (!c.is_zero()) t.emplace_back((target * sh.mdim + s) * sh.ndim + w, col, c);
          }
        }
        // sum_k (-1)^k f(... a_k a_{k+1} ...)
        for (std::size_t k = 0; k < n; ++k) {
          const CycScalar sg = sign(k + 1);
          for (const auto& [x, y, c] : bd.preimage[digits[k]]) {
            std::size_t target = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (i == k) {
                target = (target * bd.rdim + x) * bd.rdim + y;
              } else {
                target = target * bd.rdim + digits[i];
              }
            }
            t.emplace_back((target * sh.mdim + s) * sh.ndim + v, col, sg * c);
          }
        }
        // (-1)^{n+1} f(a1 ... an) a_{n+1}  or  (-1)^{n+1} f(a1 ... an, a_{n+1} m)
        const CycScalar sg = sign(n + 1);
        for (std::size_t x = 0; x < bd.rdim; ++x) {
          const std::size_t target = idx * bd.rdim + x;
          if (sh.hochschild) {
            const SparseMatrix& r = sh.value_right[x];
            for (std::size_t w = 0; w < sh.ndim; ++w) {
              const CycScalar c = r.get(w, v);
              if (!c.is_zero()) t.emplace_back((target * sh.mdim + s) * sh.ndim + w, col, sg * c);
            }
          } else {
            // f(..., e_x m_{s'}) picks up rho_M(e_x)[s][s'] from coordinate s.
            for (const auto& [s2, c] : sh.arg_action[x].row(s)) {
              t.emplace_back((target * sh.mdim + s2) * sh.ndim + v, col, sg * c);
            }
          }
        }
      }
  }
  return SparseMatrix::from_triplets(dst_dim, src_dim, std::move(t));
}

CochainShape hochschild_shape(const BarData& bd) {
  CochainShape sh;
  sh.ndim = bd.dim;
  for (std::size_t x = 0; x < bd.rdim; ++x) {
    sh.value_left.push_back(bd.a->left_mult(bd.lift[x]));
    sh.value_right.push_back(bd.a->right_mult(bd.lift[x]));
  }
  return sh;
}

std::size_t nonneg(long long v, std::size_t degree) {
  if (v < 0) {
    throw Error(ErrorCode::InvariantViolation,
                "negative homology dimension in degree " + std::to_string(degree));
  }
  return static_cast<std::size_t>(v);
}

std::vector<Vector> homology_degree0(const Algebra& a) {
  const Subspace c = commutator_subspace(a);
  std::vector<Vector> out;
  std::vector<bool> pivot(a.dim(), false);
  for (std::size_t p : c.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!pivot[i]) out.push_back(a.basis_vector(i));
  }
  return out;
}

}  // namespace

void ChainComplex::check_square_zero() const {
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    const SparseMatrix comp = cohomological ? differentials[k + 1] * differentials[k]
                                            : differentials[k] * differentials[k + 1];
    if (!comp.is_zero()) {
      throw Error(ErrorCode::InvariantViolation,
                  "d.d != 0 at degree " + std::to_string(cohomological ? k : k + 2));
    }
  }
}

std::vector<std::size_t> ChainComplex::homology_dims(const LinalgOptions& options) const {
  std::vector<std::size_t> ranks;
  ranks.reserve(differentials.size());
  for (const auto& d : differentials) ranks.push_back(rank(d, options));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    // chain: out of k is differentials[k-1], into k is differentials[k]
    // cochain: out of k is differentials[k], into k is differentials[k-1]
    const std::size_t into_prev = k == 0 ? 0 : ranks[k - 1];
    const std::size_t here = ranks[k];
    const long long v = static_cast<long long>(dims[k]) - static_cast<long long>(into_prev) -
                        static_cast<long long>(here);
    out.push_back(nonneg(v, k));
  }
  return out;
}

ChainComplex bar_chain_complex(const Algebra& a, std::size_t top, bool normalized, const ComplexLimits& limits) {
  const BarData bd(a, normalized);
  ChainComplex cc;
  cc.dims = checked_dims(a.dim(), bd.rdim, top);
  guard_sizes(cc.dims, top, limits, "Hochschild chains");
  for (std::size_t n = 1; n <= top; ++n) cc.differentials.push_back(chain_differential(bd, n));
  return cc;
}

ChainComplex bar_cochain_complex(const Algebra& a, std::size_t top, bool normalized, const ComplexLimits& limits) {
  const BarData bd(a, normalized);
  ChainComplex cc;
  cc.cohomological = true;
  cc.dims = checked_dims(a.dim(), bd.rdim, top);
  guard_sizes(cc.dims, top, limits, "Hochschild cochains");
  const CochainShape sh = hochschild_shape(bd);
  for (std::size_t n = 0; n < top; ++n) cc.differentials.push_back(cochain_differential(bd, sh, n));
  return cc;
}

HHResult hh_homology_dims(const Algebra& a, std::size_t max_degree, bool normalized, const ComplexLimits& limits) {
  if (max_degree > limits.max_degree) {
    throw Error(ErrorCode::DegreeCapExceeded, "max degree " + std::to_string(max_degree) + " exceeds the cap " +
                                                  std::to_string(limits.max_degree));
  }
  const ChainComplex cc = bar_chain_complex(a, max_degree + 1, normalized, limits);
  cc.check_square_zero();
  HHResult r;
  r.kind = HHResult::Kind::Homology;
  r.dims = cc.homology_dims();
  r.max_degree = max_degree;
  r.normalized = normalized;
  r.degree0 = homology_degree0(a);
  if (r.dims[0] != r.degree0.size()) {
    throw Error(ErrorCode::InvariantViolation, "HH_0 from the bar complex disagrees with A/[A,A]");
  }
  return r;
}

HHResult hh_cohomology_dims(const Algebra& a, std::size_t max_degree, bool normalized, const ComplexLimits& limits) {
  if (max_degree > limits.max_degree) {
    throw Error(ErrorCode::DegreeCapExceeded, "max degree " + std::to_string(max_degree) + " exceeds the cap " +
                                                  std::to_string(limits.max_degree));
  }
  const ChainComplex cc = bar_cochain_complex(a, max_degree + 1, normalized, limits);
  cc.check_square_zero();
  HHResult r;
  r.kind = HHResult::Kind::Cohomology;
  r.dims = cc.homology_dims();
  r.max_degree = max_degree;
  r.normalized = normalized;
  r.degree0 = center_basis(a);
  if (r.dims[0] != r.degree0.size()) {
    throw Error(ErrorCode::InvariantViolation, "HH^0 from the cochain complex disagrees with Z(A)");
  }
  return r;
}

std::vector<std::size_t> ext_dims(const ModuleRep& m, const ModuleRep& n, std::size_t max_degree,
                                  const ComplexLimits& limits) {
  if (!same_algebra(*m.algebra(), *n.algebra())) throw Error(ErrorCode::AlgebraMismatch, "ext_dims");
  if (max_degree > limits.max_degree) {
    throw Error(ErrorCode::DegreeCapExceeded, "max degree " + std::to_string(max_degree) + " exceeds the cap " +
                                                  std::to_string(limits.max_degree));
  }
  const Algebra& a = *m.algebra();
  const BarData bd(a, true);
  CochainShape sh;
  sh.hochschild = false;
  sh.mdim = m.dim();
  sh.ndim = n.dim();
  for (std::size_t x = 0; x < bd.rdim; ++x) {
    sh.value_left.push_back(n.action(bd.lift[x]));
    sh.arg_action.push_back(m.action(bd.lift[x]));
  }
  ChainComplex cc;
  cc.cohomological = true;
  cc.dims = checked_dims(m.dim() * n.dim(), bd.rdim, max_degree + 1);
  guard_sizes(cc.dims, max_degree + 1, limits, "Ext cochains");
  for (std::size_t k = 0; k <= max_degree; ++k) cc.differentials.push_back(cochain_differential(bd, sh, k));
  cc.check_square_zero();
  return cc.homology_dims();
}

Cochain coboundary(const Algebra& a, const Cochain& f) {
  const BarData bd(a, true);
  const SparseMatrix d = cochain_differential(bd, hochschild_shape(bd), f.degree);
  if (f.values.size() != d.cols()) throw Error(ErrorCode::ShapeMismatch, "cochain length");
  return {f.degree + 1, d.apply(f.values)};
}

Chain boundary(const Algebra& a, const Chain& z) {
  if (z.degree == 0) return {0, Vector()};
  const BarData bd(a, true);
  const SparseMatrix d = chain_differential(bd, z.degree);
  if (z.values.size() != d.cols()) throw Error(ErrorCode::ShapeMismatch, "chain length");
  return {z.degree - 1, d.apply(z.values)};
}

Cochain cup_product_raw(const Algebra& a, const Cochain& f, const Cochain& g) {
  const BarData bd(a, true);
  const std::size_t d = a.dim();
  const std::size_t rp = bd.power(f.degree);
  const std::size_t rq = bd.power(g.degree);
  if (f.values.size() != rp * d || g.values.size() != rq * d) {
    throw Error(ErrorCode::ShapeMismatch, "cochain length");
  }
  Vector out(rp * rq * d);
  for (std::size_t i1 = 0; i1 < rp; ++i1)
    for (std::size_t t1 = 0; t1 < d; ++t1) {
      const CycScalar& x = f.values[i1 * d + t1];
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < rq; ++i2)
        for (std::size_t t2 = 0; t2 < d; ++t2) {
          const CycScalar& y = g.values[i2 * d + t2];
          if (y.is_zero()) continue;
          const CycScalar xy = x * y;
          for (const auto& [k, c] : a.product(t1, t2)) out[(i1 * rq + i2) * d + k] += xy * c;
        }
    }
  return {f.degree + g.degree, std::move(out)};
}

Cochain cup_product(const Algebra& a, const Cochain& f, const Cochain& g) {
  for (const Cochain* c : {&f, &g}) {
    if (!is_zero(coboundary(a, *c).values)) {
      throw Error(ErrorCode::NotACocycle, "cup product input of degree " + std::to_string(c->degree));
    }
  }
  return cup_product_raw(a, f, g);
}

Chain cap_product(const Algebra& a, const Cochain& f, const Chain& z, bool check_cycles) {
  if (f.degree > z.degree) {
    throw Error(ErrorCode::DegreeUnderflow, "cochain degree " + std::to_string(f.degree) +
                                                " exceeds chain degree " + std::to_string(z.degree));
  }
  const BarData bd(a, true);
  const std::size_t d = a.dim();
  const std::size_t rp = bd.power(f.degree);
  const std::size_t rq = bd.power(z.degree - f.degree);
  if (f.values.size() != rp * d || z.values.size() != d * rp * rq) {
    throw Error(ErrorCode::ShapeMismatch, "cap product input length");
  }
  if (check_cycles) {
    if (!is_zero(coboundary(a, f).values)) throw Error(ErrorCode::NotACocycle, "cap product cochain");
    if (z.degree > 0 && !is_zero(boundary(a, z).values)) throw Error(ErrorCode::NotACycle, "cap product chain");
  }
  Vector out(d * rq);
  for (std::size_t a0 = 0; a0 < d; ++a0)
    for (std::size_t i1 = 0; i1 < rp; ++i1)
      for (std::size_t i2 = 0; i2 < rq; ++i2) {
        const CycScalar& zc = z.values[(a0 * rp + i1) * rq + i2];
        if (zc.is_zero()) continue;
        for (std::size_t t = 0; t < d; ++t) {
          const CycScalar& fc = f.values[i1 * d + t];
          if (fc.is_zero()) continue;
          const CycScalar w = zc * fc;
          for (const auto& [k, c] : a.product(a0, t)) out[k * rq + i2] += w * c;
        }
      }
  return {z.degree - f.degree, std::move(out)};
}

Cochain unit_cochain(const Algebra& a) { return {0, a.unit()}; }

bool is_coboundary(const Algebra& a, const Cochain& f, const ComplexLimits& limits) {
  if (f.degree == 0) return is_zero(f.values);
  const BarData bd(a, true);
  guard_sizes(checked_dims(a.dim(), bd.rdim, f.degree), f.degree, limits, "coboundary test");
  const SparseMatrix d = cochain_differential(bd, hochschild_shape(bd), f.degree - 1);
  return solve(d, f.values).has_value();
}

bool is_boundary(const Algebra& a, const Chain& z, const ComplexLimits& limits) {
  const BarData bd(a, true);
  guard_sizes(checked_dims(a.dim(), bd.rdim, z.degree + 1), z.degree + 1, limits, "boundary test");
  const SparseMatrix d = chain_differential(bd, z.degree + 1);
  return solve(d, z.values).has_value();
}

}  // namespace hochkit
