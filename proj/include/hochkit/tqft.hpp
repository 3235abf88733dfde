#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hochkit/fixtures.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

enum class Generator { CapIn, CapOut, PantsSplit, PantsMerge };

std::string_view generator_name(Generator g);
/// (incoming circles, outgoing circles)
std::pair<std::size_t, std::size_t> generator_arity(Generator g);

struct WordStep {
  Generator gen = Generator::CapIn;
  /// First strand the generator touches; the others pass through.
  std::size_t strand = 0;
  /// 1-based column of the token in the source text.
  std::size_t column = 0;
  std::size_t in_arity = 0;
  std::size_t out_arity = 0;
};

/// Tokens cap_in, cap_out, pants_split, pants_merge, optionally suffixed
/// @i to act on strands i, i+1, ...; genus:g expands to cap_in, g copies of
/// pants_split pants_merge, cap_out. Separators: whitespace, ',' or ';'.
struct CobordismWord {
  std::string text;
  std::vector<WordStep> steps;
  std::optional<std::size_t> genus;
  /// Euler characteristic of the glued surface.
  long euler_characteristic() const;
};

/// Throws ParseError with the column, or ArityMismatch naming the step.
CobordismWord parse_word(std::string_view text);
CobordismWord genus_word(std::size_t g);

struct GeneratorKernels {
  AlgebraPtr algebra;
  Bimodule cap_in;
  Bimodule cap_out;
  Bimodule pants_split;
  Bimodule pants_merge;
};

/// Caps from the augmentation module, pants from C[G x G] with the diagonal
/// right action. Throws MissingAugmentation without a group fixture.
GeneratorKernels generator_kernels(const Fixture& f);

struct SurfaceInvariant {
  std::string word;
  std::optional<std::size_t> genus;
  std::string algebra;
  std::size_t dim = 0;
};

SurfaceInvariant evaluate(const GeneratorKernels& kernels, const CobordismWord& w);
SurfaceInvariant evaluate(const Fixture& f, const CobordismWord& w);

/// |Hom(pi_1 of the genus-g surface, G)| and |G|.
struct HomCountOracle {
  std::size_t hom_count = 0;
  std::size_t group_order = 0;
};
HomCountOracle hom_count_oracle(const Fixture& f, std::size_t genus);

}  // namespace hochkit
