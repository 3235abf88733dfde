#include <doctest.h>

#include <random>

#include "hochkit/error.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/mukai.hpp"

using namespace hochkit;

namespace {

// Character formula (1/|G|) sum_g chi_M(g^-1) g, computed from traces of the
// action matrices only.
Vector character_class(const Fixture& f, const ModuleRep& m) {
  const Group& g = *f.group;
  const CycScalar inv_order = CycScalar(static_cast<long>(g.order())).inverse();
  Vector out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = m.action(g.inverse(x)).trace() * inv_order;
  return out;
}

Vector random_central(const AlgebraPtr& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vector z(a->dim());
  for (const auto& b : center_basis(*a)) {
    const CycScalar c(d(rng));
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += c * b[i];
  }
  return z;
}

Vector half(int a, int b) { return {CycScalar(Rational(a, 2)), CycScalar(Rational(b, 2))}; }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("chern character of Z/2") {
  const Fixture z2 = load_fixture("zn:2");
  CHECK(chern(z2.simples[0]).coords == half(1, 1));
  CHECK(chern(z2.simples[1]).coords == half(1, -1));
  CHECK(chern(regular_module(z2.algebra)).coords == Vector{CycScalar(1), CycScalar(0)});
  CHECK(is_zero(chern_additivity_defect(z2.simples[0], z2.simples[1])));
  CHECK(is_zero(chern_additivity_defect(z2.simples[0], ModuleRep::zero(z2.algebra))));
}

TEST_CASE("chern character matches the character formula on every group fixture") {
  std::mt19937 rng(1);
  for (const auto& name : group_fixture_names()) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    for (const auto& s : f.simples) {
      CHECK(chern(s).coords == character_class(f, s));
      const ScalarCheck c = chern_property_check(s, random_central(f.algebra, rng));
      CHECK(c.pass());
    }
  }
}

TEST_CASE("S3 two-dimensional irreducible") {
  const Fixture s3 = load_fixture("s3");
  const Vector ch = chern(s3.simples[2]).coords;
  // (1/6) sum chi(g^-1) g with chi = 2 at e, -1 on 3-cycles, 0 on reflections
  const Group& g = *s3.group;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t cls = x == 0 ? 0 : (g.mul(x, x) == 0 ? 1 : 2);
    const Rational expected = cls == 0 ? Rational(1, 3) : cls == 1 ? Rational(0) : Rational(-1, 6);
    CHECK(ch[x] == CycScalar(expected));
  }
}

TEST_CASE("chern over the field counts dimension") {
  const Fixture k = load_fixture("field");
  const ModuleRep c3 = direct_sum(k.simples[0], direct_sum(k.simples[0], k.simples[0]));
  CHECK(chern(c3).coords == Vector{CycScalar(3)});
}

TEST_CASE("Mukai pairing") {
  const Fixture z2 = load_fixture("zn:2");
  const MukaiClass t = chern(z2.simples[0]);
  CHECK(mukai_pairing(t, t) == CycScalar(1));
  CHECK(mukai_pairing(zero_class(z2.algebra), t).is_zero());
  std::mt19937 rng(3);
  const Fixture s3 = load_fixture("s3");
  for (int i = 0; i < 10; ++i) {
    const MukaiClass a = make_class(s3.algebra, random_central(s3.algebra, rng));
    const MukaiClass b = make_class(s3.algebra, random_central(s3.algebra, rng));
    const MukaiClass c = make_class(s3.algebra, random_central(s3.algebra, rng));
    Vector bc = b.coords;
    for (std::size_t j = 0; j < bc.size(); ++j) bc[j] += CycScalar(2) * c.coords[j];
    CHECK(mukai_pairing(a, make_class(s3.algebra, bc)) == mukai_pairing(a, b) + CycScalar(2) * mukai_pairing(a, c));
    CHECK(mukai_pairing(a, b) == mukai_pairing(b, a));
  }
  expect_error(ErrorCode::AlgebraMismatch, [&] { (void)mukai_pairing(t, chern(s3.simples[0])); });
  expect_error(ErrorCode::InvariantViolation, [&] { (void)make_class(s3.algebra, s3.algebra->basis_vector(1)); });
  CHECK(tau(t).coords == t.coords);
}

TEST_CASE("pairing Gram matrices are non-degenerate on semisimple fixtures") {
  for (const auto& name : group_fixture_names()) {
    const CenterData& cd = center_data(load_fixture(name).algebra);
    CHECK(cd.gram_rank == cd.basis.size());
  }
}

TEST_CASE("HRR") {
  for (const char* name : {"s3", "q8"}) {
    const Fixture f = load_fixture(name);
    for (std::size_t i = 0; i < f.simples.size(); ++i)
      for (std::size_t j = 0; j < f.simples.size(); ++j) {
        const ScalarCheck c = hrr_check(f.simples[i], f.simples[j]);
        CHECK(c.pass());
        CHECK(c.lhs == CycScalar(i == j ? 1 : 0));
      }
  }
  const ModuleRep reg = regular_module(load_fixture("zn:2").algebra);
  const ScalarCheck r = hrr_check(reg, reg);
  CHECK(r.lhs == CycScalar(2));
  CHECK(r.rhs == CycScalar(2));
}

TEST_CASE("Todd class") {
  const Fixture z2 = load_fixture("zn:2");
  CHECK(todd(*z2.augmentation).coords == half(1, 1));
  const ScalarCheck reg = todd_hrr_check(*z2.augmentation, regular_module(z2.algebra));
  CHECK(reg.pass());
  CHECK(reg.lhs == CycScalar(1));
  const Fixture k = load_fixture("field");
  CHECK(todd(k.simples[0]).coords == Vector{CycScalar(1)});
  CHECK(todd_hrr_check(k.simples[0], direct_sum(k.simples[0], k.simples[0])).lhs == CycScalar(2));
  const Fixture s3 = load_fixture("s3");
  const ScalarCheck v2 = todd_hrr_check(*s3.augmentation, s3.simples[2]);
  CHECK(v2.pass());
  CHECK(v2.lhs.is_zero());
  expect_error(ErrorCode::AugmentationNot1Dim, [&] { (void)todd(s3.simples[2]); });
}

TEST_CASE("iota") {
  const Fixture s3 = load_fixture("s3");
  const ModuleRep m = direct_sum(s3.simples[1], s3.simples[2]);
  CHECK(iota_solve(m, SparseMatrix::identity(3)).coords == chern(m).coords);
  CHECK(is_zero(iota_solve(m, SparseMatrix(3, 3)).coords));
  // projection of the regular module onto the 2-dimensional isotypic block
  const ModuleRep reg = regular_module(s3.algebra);
  Vector idem = character_class(s3, s3.simples[2]);
  for (auto& x : idem) x *= CycScalar(2);
  const SparseMatrix proj = s3.algebra->right_mult(idem);
  Vector block = character_class(s3, s3.simples[2]);
  for (auto& x : block) x *= CycScalar(2);
  CHECK(iota_solve(reg, proj).coords == block);
  SparseMatrix bad(3, 3);
  bad.set(1, 1, 1);
  expect_error(ErrorCode::NotIntertwiner, [&] { (void)iota_solve(m, bad); });
}

TEST_CASE("Cardy condition") {
  std::mt19937 rng(5);
  const Fixture s3 = load_fixture("s3");
  const ModuleRep e_mod = direct_sum(s3.simples[2], s3.simples[0]);
  const ModuleRep f_mod = direct_sum(s3.simples[2], s3.simples[2]);
  const ScalarCheck ids = cardy_check(e_mod, f_mod, SparseMatrix::identity(3), SparseMatrix::identity(4));
  CHECK(ids.pass());
  CHECK(ids.lhs == hrr_check(e_mod, f_mod).lhs);
  for (int i = 0; i < 10; ++i) {
    const SparseMatrix e = e_mod.act(random_central(s3.algebra, rng));
    const SparseMatrix f = f_mod.act(random_central(s3.algebra, rng));
    CHECK(cardy_check(e_mod, f_mod, e, f).pass());
  }
  const ScalarCheck empty = cardy_check(s3.simples[0], s3.simples[1], SparseMatrix::identity(1), SparseMatrix::identity(1));
  CHECK(empty.lhs.is_zero());
  CHECK(empty.rhs.is_zero());
}

TEST_CASE("pushforward along the regular kernel is the identity") {
  const Fixture s3 = load_fixture("s3");
  const Bimodule id = regular_bimodule(s3.algebra);
  for (const auto& z : center_basis(*s3.algebra)) {
    const PushforwardResult r = pushforward_detail(id, make_class(s3.algebra, z), s3.simples);
    CHECK(r.value.coords == z);
    CHECK(r.route_a == r.route_b);
    CHECK(adjoint_transfer(id, make_class(s3.algebra, z), s3.simples).coords == z);
  }
  CHECK(is_zero(adjoint_transfer(id, zero_class(s3.algebra), s3.simples).coords));
}

TEST_CASE("pushforward to the field is the dimension of the image") {
  const Fixture s3 = load_fixture("s3");
  const Fixture k = load_fixture("field");
  const Bimodule kern = resolve_kernel(s3, k, "outer(simple:2, simple:0)");
  const ModuleRep m = direct_sum(s3.simples[2], direct_sum(s3.simples[2], s3.simples[1]));
  const MukaiClass out = pushforward(kern, chern(m), s3.simples);
  CHECK(out.coords == Vector{CycScalar(static_cast<long>(apply_kernel(kern, m).dim()))});
  CHECK(out.coords == Vector{CycScalar(2)});
}

TEST_CASE("adjointness, functoriality and commutation with ch") {
  const Fixture z2 = load_fixture("zn:2");
  const Fixture z3 = load_fixture("zn:3");
  const Fixture s3 = load_fixture("s3");
  const Bimodule k = resolve_kernel(z2, z3, "sum(outer(simple:1, simple:2), outer(simple:0, simple:1))");
  const auto pairs = adjointness_check(k, z2.simples, z3.simples);
  CHECK(pairs.size() == 6);
  for (const auto& p : pairs) CHECK(p.lhs == p.rhs);

  const Bimodule k1 = resolve_kernel(z2, s3, "outer(simple:1, simple:2)");
  const Bimodule k2 = resolve_kernel(s3, z3, "sum(outer(simple:2, simple:1), outer(simple:1, simple:0))");
  for (const auto& v : functoriality_check(k1, k2, z2.simples, s3.simples)) CHECK(v.pass());
  for (const auto& v : functoriality_check(k1, regular_bimodule(s3.algebra), z2.simples, s3.simples)) CHECK(v.pass());
  for (const auto& m : z2.simples) CHECK(commutation_check(k1, m, z2.simples).pass());
}

TEST_CASE("Morita amplification") {
  for (const char* name : {"field", "zn:2"}) {
    CAPTURE(name);
    const MoritaReport r = morita_isometry_check(load_fixture(name), 2);
    CHECK(r.bijective);
    CHECK(r.isometry);
    CHECK(r.gram_source == r.gram_pulled_back);
    CHECK(r.central_action_intertwined);
    CHECK(r.chern_commutes);
  }
}

TEST_CASE("chern preconditions") {
  const Fixture dual = load_fixture("dual");
  expect_error(ErrorCode::MissingSerreData, [&] { (void)chern(*dual.augmentation); });
  // lambda(a + b x) = b is a symmetric Frobenius form, but the regular trace
  // pairing on the center is degenerate
  Algebra::Data d = dual.algebra->data();
  d.name = "dual-frob";
  d.serre = SerreData{{CycScalar(0), CycScalar(1)}};
  const AlgebraPtr a = Algebra::create(d);
  std::vector<SparseMatrix> action{SparseMatrix::identity(1), SparseMatrix(1, 1)};
  const ModuleRep k = ModuleRep::create(a, action, "k");
  expect_error(ErrorCode::SingularGram, [&] { (void)chern(k); });
}
