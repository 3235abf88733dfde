#include <doctest.h>

#include "hochkit/error.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/modules.hpp"
#include "oracles.hpp"

using namespace hochkit;

namespace {

// Ext^*(k, N) over k[x]/x^2 from the periodic resolution ... -x-> A -x-> A -> k.
// Applying Hom(-, N) gives N -x-> N -x-> N ...
std::vector<std::size_t> dual_numbers_ext_from_trivial(const ModuleRep& n, std::size_t top) {
  const SparseMatrix x = n.action(1);
  const std::size_t r = oracle::dense_rank(x);
  std::vector<std::size_t> out{n.dim() - r};
  for (std::size_t k = 1; k <= top; ++k) out.push_back(n.dim() - 2 * r);
  return out;
}

}  // namespace

TEST_CASE("hom spaces between simples are Schur") {
  const Fixture s3 = load_fixture("s3");
  for (std::size_t i = 0; i < s3.simples.size(); ++i)
    for (std::size_t j = 0; j < s3.simples.size(); ++j)
      CHECK(hom_space(s3.simples[i], s3.simples[j]).dim() == (i == j ? 1u : 0u));
  const ModuleRep reg = regular_module(load_fixture("zn:2").algebra);
  CHECK(hom_space(reg, reg).dim() == 2);
  CHECK(multiplicities(regular_module(s3.algebra), s3.simples) == std::vector<std::size_t>{1, 1, 2});
  const Fixture q8 = load_fixture("q8");
  CHECK(multiplicities(regular_module(q8.algebra), q8.simples) == std::vector<std::size_t>{1, 1, 1, 1, 2});
}

TEST_CASE("module validation") {
  const Fixture s3 = load_fixture("s3");
  std::vector<SparseMatrix> bad(6, SparseMatrix::identity(1));
  bad[1] = SparseMatrix::scalar(2);
  try {
    (void)ModuleRep::create(s3.algebra, bad, "bad");
    FAIL("expected NotAModule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAModule);
  }
  for (const auto& s : s3.simples) CHECK_NOTHROW(validate(s));
  CHECK(ModuleRep::zero(s3.algebra).dim() == 0);
}

TEST_CASE("intertwiners") {
  const Fixture z2 = load_fixture("zn:2");
  const ModuleRep reg = regular_module(z2.algebra);
  // right multiplication by g commutes with the left action
  CHECK(is_intertwiner(reg, reg, z2.algebra->right_mult(1)));
  SparseMatrix proj(2, 2);
  proj.set(0, 0, 1);
  CHECK(!is_intertwiner(reg, reg, proj));
  const HomBasis h = hom_space(reg, reg);
  CHECK(h.coordinates(z2.algebra->right_mult(1)).has_value());
  CHECK(!h.coordinates(proj).has_value());
}

TEST_CASE("duals and tensor products over the algebra") {
  const Fixture s3 = load_fixture("s3");
  const ModuleRep reg = regular_module(s3.algebra);
  const ModuleRep dreg = dual_module(reg);
  CHECK(is_opposite(*s3.algebra, *dreg.algebra()));
  CHECK_NOTHROW(validate(dreg));
  CHECK(hom_space(dreg, dreg).dim() == 6);
  // for projective S, S* (x)_A M = Hom_A(S, M)
  const ModuleRep m = direct_sum(s3.simples[2], direct_sum(s3.simples[0], s3.simples[2]));
  for (const auto& s : s3.simples) CHECK(tensor_over(dual_module(s), m).dim == hom_space(s, m).dim());
  CHECK(tensor_over(dreg, m).dim == m.dim());
}

TEST_CASE("kernels act with the expected unit laws") {
  const Fixture s3 = load_fixture("s3");
  const Bimodule id = regular_bimodule(s3.algebra);
  CHECK_NOTHROW(validate(id));
  const ModuleRep m = direct_sum(s3.simples[1], s3.simples[2]);
  const ModuleRep out = apply_kernel(id, m);
  CHECK(out.dim() == m.dim());
  CHECK(multiplicities(out, s3.simples) == multiplicities(m, s3.simples));

  const Fixture op = opposite_fixture(s3);
  const Bimodule k = outer(op.simples[2], s3.simples[1]);
  CHECK_NOTHROW(validate(k));
  CHECK(k.dim() == 2);
  // W (x) V (x)_A M has dim W * mult(dual V, M)
  CHECK(apply_kernel(k, m).dim() == 1);
  CHECK(convolve(id, k).dim() == k.dim());
  CHECK(convolve(k, id).dim() == k.dim());
  const Bimodule d = dual_kernel(k);
  CHECK(d.dim() == k.dim());
  CHECK(same_algebra(*d.source(), *k.target()));
  CHECK(kernel_sum(k, id).dim() == 8);
}

TEST_CASE("induced maps on kernel images") {
  const Fixture s3 = load_fixture("s3");
  const ModuleRep m = direct_sum(s3.simples[2], s3.simples[2]);
  const KernelApplication app = apply_kernel_full(regular_bimodule(s3.algebra), m);
  const SparseMatrix id = app.induced(SparseMatrix::identity(m.dim()));
  CHECK(id == SparseMatrix::identity(app.module.dim()));
  SparseMatrix swap(4, 4);
  swap.set(0, 2, 1);
  swap.set(1, 3, 1);
  swap.set(2, 0, 1);
  swap.set(3, 1, 1);
  const SparseMatrix induced = app.induced(swap);
  CHECK(is_intertwiner(app.module, app.module, induced));
  CHECK(induced.trace() == swap.trace());
}

TEST_CASE("ext over the dual numbers matches the periodic resolution") {
  const Fixture dual = load_fixture("dual");
  const ModuleRep k = *dual.augmentation;
  const ModuleRep reg = regular_module(dual.algebra);
  const std::size_t top = 4;
  CHECK(ext_dims(k, k, top) == dual_numbers_ext_from_trivial(k, top));
  CHECK(ext_dims(k, reg, top) == dual_numbers_ext_from_trivial(reg, top));
  CHECK(ext_dims(k, k, top) == std::vector<std::size_t>(top + 1, 1));
  // projective first argument
  const auto proj = ext_dims(reg, k, 3);
  CHECK(proj == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("ext between semisimple modules is concentrated in degree zero") {
  const Fixture s3 = load_fixture("s3");
  const ModuleRep m = direct_sum(s3.simples[0], s3.simples[2]);
  const auto e = ext_dims(m, m, 2);
  CHECK(e == std::vector<std::size_t>{hom_space(m, m).dim(), 0, 0});
}

TEST_CASE("sign tensor sign over S3 is one-dimensional") {
  const Fixture s3 = load_fixture("s3");
  CHECK(tensor_over(dual_module(s3.simples[1]), s3.simples[1]).dim == 1);
  CHECK(tensor_over(dual_module(s3.simples[1]), s3.simples[0]).dim == 0);
}

TEST_CASE("dual kernels are adjoint on hom dimensions") {
  const Fixture z2 = load_fixture("zn:2");
  const Fixture s3 = load_fixture("s3");
  const Fixture op = opposite_fixture(z2);
  const Bimodule k = kernel_sum(outer(op.simples[0], s3.simples[2]), outer(op.simples[1], s3.simples[1]));
  const Bimodule d = dual_kernel(k);
  CHECK_NOTHROW(validate(d));
  for (const auto& m : z2.simples)
    for (const auto& n : s3.simples)
      CHECK(hom_space(apply_kernel(k, m), n).dim() == hom_space(m, apply_kernel(d, n)).dim());
  const Bimodule dd = dual_kernel(d);
  for (const auto& m : z2.simples)
    CHECK(multiplicities(apply_kernel(dd, m), s3.simples) == multiplicities(apply_kernel(k, m), s3.simples));
  CHECK(dual_kernel(regular_bimodule(s3.algebra)).dim() == 6);
}

TEST_CASE("convolution matches repeated application") {
  const Fixture z2 = load_fixture("zn:2");
  const Fixture s3 = load_fixture("s3");
  const Fixture z3 = load_fixture("zn:3");
  const Bimodule k1 = outer(opposite_fixture(z2).simples[1], s3.simples[2]);
  const Bimodule k2 = kernel_sum(outer(opposite_fixture(s3).simples[2], z3.simples[1]),
                                 outer(opposite_fixture(s3).simples[2], z3.simples[2]));
  const Bimodule c = convolve(k1, k2);
  for (const auto& m : z2.simples) {
    const ModuleRep once = apply_kernel(c, m);
    const ModuleRep twice = apply_kernel(k2, apply_kernel(k1, m));
    CHECK(once.dim() == twice.dim());
    CHECK(multiplicities(once, z3.simples) == multiplicities(twice, z3.simples));
  }
}

TEST_CASE("underived convolution refuses a non-semisimple middle") {
  const Fixture dual = load_fixture("dual");
  const Bimodule k = regular_bimodule(dual.algebra);
  try {
    (void)convolve(k, k);
    FAIL("expected MiddleNotSemisimple");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MiddleNotSemisimple);
  }
}

TEST_CASE("kernels over the field tensor vector spaces") {
  const AlgebraPtr f = field_algebra();
  const Bimodule k = outer(rebase(vector_space(1), f), rebase(vector_space(3), f));
  CHECK(apply_kernel(k, rebase(vector_space(2), f)).dim() == 6);
}
