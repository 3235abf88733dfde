#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/groups.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

/// An algebra with its bundled simple modules. Simples are complete (one
/// per Wedderburn block) for the semisimple fixtures.
struct Fixture {
  std::string name;
  AlgebraPtr algebra;
  std::vector<ModuleRep> simples;
  /// Trivial representation for group algebras.
  std::optional<ModuleRep> augmentation;
  std::optional<Group> group;
};

/// Builtins: field, zn:<k>, s3, d4, q8, a4, mat:<n>, dual, trunc:<k>, and
/// the combinators tensor(a,b), op(a), env(a). Anything else is looked up
/// as <dir>/<name>.alg in the fixture directory, then as a path.
Fixture load_fixture(std::string_view spec);

/// Fixture directory: $HOCHKIT_FIXTURES or the compiled-in default.
std::string fixture_directory();

/// The group fixtures bundled for representation-theoretic checks.
std::vector<std::string> group_fixture_names();

Fixture group_fixture(const Group& g, std::string name, const std::vector<std::vector<SparseMatrix>>& reps);
Fixture tensor_fixture(const Fixture& a, const Fixture& b);
Fixture opposite_fixture(const Fixture& a);

/// Module references: regular, trivial, zero, simple:<k>, sum(m1,m2),
/// or a module file path.
ModuleRep resolve_module(const Fixture& f, std::string_view ref);

/// Kernel references from `source` to `target`: regular, outer(v,w) with v
/// resolved over op(source) and w over target, sum(k1,k2), or a bimodule
/// file path.
Bimodule resolve_kernel(const Fixture& source, const Fixture& target, std::string_view ref);

/// Splits "f(a, b(c, d))" into "f" and its top-level arguments. Returns
/// false when text is not of that shape.
bool split_call(std::string_view text, std::string& head, std::vector<std::string>& args);

}  // namespace hochkit
