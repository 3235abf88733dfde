#include <doctest.h>

#include "hochkit/error.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/tqft.hpp"
#include "oracles.hpp"

using namespace hochkit;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

std::size_t dim_of(const Fixture& f, std::string_view word) { return evaluate(f, parse_word(word)).dim; }

}  // namespace

TEST_CASE("parsing words") {
  const CobordismWord sphere = parse_word("cap_in cap_out");
  CHECK(sphere.steps.size() == 2);
  CHECK(sphere.euler_characteristic() == 2);
  CHECK(!sphere.genus.has_value());

  const CobordismWord torus = parse_word("genus:1");
  REQUIRE(torus.steps.size() == 4);
  CHECK(torus.steps[1].gen == Generator::PantsSplit);
  CHECK(torus.steps[2].gen == Generator::PantsMerge);
  CHECK(torus.genus == std::optional<std::size_t>(1));
  CHECK(torus.euler_characteristic() == 0);
  CHECK(genus_word(3).euler_characteristic() == -4);

  const CobordismWord sep = parse_word("cap_in,pants_split; pants_merge\tcap_out");
  CHECK(sep.steps.size() == 4);
  CHECK(sep.steps[2].column == 21);
  CHECK(sep.steps[1].in_arity == 1);
  CHECK(sep.steps[1].out_arity == 2);

  const CobordismWord shifted = parse_word("cap_in pants_split pants_split@1 pants_merge@1 pants_merge cap_out");
  CHECK(shifted.steps[2].strand == 1);
  CHECK(shifted.euler_characteristic() == -2);
}

TEST_CASE("parse and arity errors") {
  try {
    (void)parse_word("cap_in pants_mrge cap_out");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 8);
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("genus:x"), ParseError);
  expect_error(ErrorCode::ArityMismatch, [] { (void)parse_word("cap_in pants_merge"); });
  expect_error(ErrorCode::ArityMismatch, [] { (void)parse_word("cap_in pants_split cap_out"); });
  expect_error(ErrorCode::ArityMismatch, [] { (void)parse_word("cap_out"); });
  expect_error(ErrorCode::ArityMismatch, [] { (void)parse_word("cap_in pants_split@1 pants_merge cap_out"); });
}

TEST_CASE("generator kernels connect the right arities") {
  CHECK(generator_arity(Generator::PantsSplit) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(generator_arity(Generator::PantsMerge) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(generator_arity(Generator::CapIn) == std::pair<std::size_t, std::size_t>{0, 1});
  const Fixture s3 = load_fixture("s3");
  const GeneratorKernels k = generator_kernels(s3);
  CHECK(k.cap_in.dim() == 1);
  CHECK(k.cap_out.dim() == 1);
  CHECK(k.pants_split.source()->dim() == 6);
  CHECK(k.pants_split.target()->dim() == 36);
  CHECK(k.pants_merge.source()->dim() == 36);
  expect_error(ErrorCode::MissingAugmentation, [] { (void)generator_kernels(load_fixture("mat:2")); });
}

TEST_CASE("sphere and torus") {
  for (const char* name : {"zn:2", "zn:4", "s3", "q8"}) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    CHECK(evaluate(f, genus_word(0)).dim == 1);
    const std::size_t torus = evaluate(f, genus_word(1)).dim;
    CHECK(torus == oracle::class_count(*f.group));
    CHECK(torus == hh_homology_dims(*f.algebra, 0).dims[0]);
  }
}

TEST_CASE("alternative decompositions agree") {
  for (const char* name : {"zn:2", "s3"}) {
    CAPTURE(name);
    const Fixture f = load_fixture(name);
    CHECK(dim_of(f, "cap_in cap_in pants_merge pants_split pants_merge cap_out") == dim_of(f, "genus:1"));
    CHECK(dim_of(f, "cap_in pants_split pants_split@1 pants_merge@1 pants_merge cap_out") == dim_of(f, "genus:2"));
    CHECK(dim_of(f, "cap_in pants_split pants_merge pants_split pants_merge cap_out") == dim_of(f, "genus:2"));
    CHECK(dim_of(f, "cap_in cap_in cap_out cap_out") == 1);
  }
}

TEST_CASE("genus two is reported next to the hom count") {
  const Fixture z2 = load_fixture("zn:2");
  const HomCountOracle o = hom_count_oracle(z2, 2);
  CHECK(o.hom_count == oracle::genus_two_hom_count(*z2.group));
  CHECK(o.hom_count == 16);
  CHECK(o.group_order == 2);
  // the evaluator's own value is recorded, not compared with 16 / 2
  const SurfaceInvariant s = evaluate(z2, genus_word(2));
  CHECK(s.genus == std::optional<std::size_t>(2));
  CHECK(s.dim > 0);
}
