#include <doctest.h>

#include <random>

#include "hochkit/algebra.hpp"
#include "hochkit/error.hpp"
#include "hochkit/fixtures.hpp"
#include "oracles.hpp"

using namespace hochkit;

namespace {

Vector random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vector v(n);
  for (auto& x : v) x = CycScalar(d(rng));
  return v;
}

}  // namespace

TEST_CASE("group fixtures validate and have the right centers") {
  for (const auto& name : group_fixture_names()) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    REQUIRE(f.group);
    CHECK_NOTHROW(validate(*f.algebra));
    CHECK(f.algebra->dim() == f.group->order());
    CHECK(f.algebra->is_semisimple());
    CHECK(center_basis(*f.algebra).size() == oracle::class_count(*f.group));
    // field order is the group exponent
    CHECK(f.algebra->field_order() == f.group->exponent());
  }
}

TEST_CASE("field and matrix algebras") {
  CHECK(field_algebra()->dim() == 1);
  const AlgebraPtr m3 = matrix_algebra(3);
  CHECK(m3->dim() == 9);
  CHECK_NOTHROW(validate(*m3));
  CHECK(commutator_subspace(*m3).dim() == 8);
  CHECK(center_basis(*m3).size() == 1);
  CHECK(commutator_subspace(*matrix_algebra(2)).dim() == 3);
  // E11 acts on M_2 with trace 2
  CHECK(regular_trace(*matrix_algebra(2), matrix_algebra(2)->basis_vector(0)) == CycScalar(2));
}

TEST_CASE("regular trace of group algebras") {
  const Fixture s3 = load_fixture("s3");
  CHECK(regular_trace(*s3.algebra, s3.algebra->unit()) == CycScalar(6));
  for (std::size_t g = 1; g < 6; ++g) CHECK(regular_trace(*s3.algebra, s3.algebra->basis_vector(g)).is_zero());
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vector x = random_vector(rng, 6);
    const Vector y = random_vector(rng, 6);
    CHECK(regular_trace(*s3.algebra, s3.algebra->multiply(x, y)) ==
          regular_trace(*s3.algebra, s3.algebra->multiply(y, x)));
  }
}

TEST_CASE("truncated polynomials") {
  const AlgebraPtr d = truncated_poly(2);
  CHECK(d->name() == "dual");
  CHECK(!d->serre());
  CHECK(!d->is_semisimple());
  CHECK(center_basis(*d).size() == 2);
  CHECK(commutator_subspace(*d).dim() == 0);
  CHECK_THROWS_AS(truncated_poly(1), Error);
}

TEST_CASE("opposite, tensor and enveloping algebras") {
  const Fixture s3 = load_fixture("s3");
  const AlgebraPtr op = opposite(s3.algebra);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(op->product(i, j) == s3.algebra->product(j, i));
  CHECK(opposite(op)->name() == s3.algebra->name());
  const AlgebraPtr m2 = matrix_algebra(2);
  const AlgebraPtr t = tensor(m2, s3.algebra);
  CHECK(t->dim() == 24);
  CHECK_NOTHROW(validate(*t));
  CHECK(center_basis(*t).size() == 3);
  const AlgebraPtr env = enveloping(load_fixture("zn:3").algebra);
  CHECK(env->dim() == 9);
  CHECK(center_basis(*env).size() == 9);
}

TEST_CASE("invalid structure constants are rejected") {
  Algebra::Data d;
  d.name = "broken";
  d.labels = {"1", "x", "y"};
  d.unit = {CycScalar(1), CycScalar(0), CycScalar(0)};
  d.products.resize(9);
  for (std::size_t i = 0; i < 3; ++i) {
    d.products[i] = {{i, CycScalar(1)}};
    d.products[i * 3] = {{i, CycScalar(1)}};
  }
  d.products[1 * 3 + 1] = {{2, CycScalar(1)}};
  d.products[1 * 3 + 2] = {{1, CycScalar(1)}};
  try {
    (void)Algebra::create(d);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
  }
  d = truncated_poly(3)->data();
  d.unit = {CycScalar(0), CycScalar(1), CycScalar(0)};
  try {
    (void)Algebra::create(d);
    FAIL("expected UnitLawFails");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnitLawFails);
  }
}

TEST_CASE("degenerate Frobenius data is rejected") {
  Algebra::Data d = truncated_poly(2)->data();
  d.serre = SerreData{{CycScalar(1), CycScalar(0)}};
  try {
    (void)Algebra::create(d);
    FAIL("expected DegenerateFrobeniusForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFrobeniusForm);
  }
  d.serre = SerreData{{CycScalar(0), CycScalar(1)}};
  CHECK_NOTHROW((void)Algebra::create(d));
}

TEST_CASE("group tables") {
  CHECK_THROWS_AS(validate_group_table({{0, 1}, {1, 1}}), Error);
  const Group c5 = cyclic_group(5);
  CHECK(c5.order() == 5);
  CHECK(c5.exponent() == 5);
  CHECK(c5.conjugacy_classes().size() == 5);
  const Group s3 = load_fixture("s3").group.value();
  CHECK(s3.conjugacy_classes().size() == 3);
  CHECK(s3.exponent() == 6);
  for (std::size_t g = 0; g < 6; ++g) CHECK(s3.mul(g, s3.inverse(g)) == 0);
  const Group q8 = load_fixture("q8").group.value();
  CHECK(oracle::class_count(q8) == 5);
  CHECK(surface_hom_count(q8, 1) == 8 * 5);
}

TEST_CASE("surface hom counts against enumeration") {
  for (const char* name : {"zn:2", "zn:3", "s3"}) {
    const Group g = load_fixture(name).group.value();
    CHECK(surface_hom_count(g, 2) == oracle::genus_two_hom_count(g));
    CHECK(surface_hom_count(g, 0) == 1);
  }
  CHECK(surface_hom_count(load_fixture("zn:2").group.value(), 2) == 16);
}
