#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "hochkit/algebra.hpp"
#include "hochkit/modules.hpp"

namespace hochkit {

/// Resolves an algebra reference (fixture name or path) found inside a
/// module or bimodule file.
using AlgebraResolver = std::function<AlgebraPtr(const std::string&)>;

/// Algebra file:
///   name = <text>            (optional)
///   dim = <n>
///   field_order = <n>        (optional)
///   labels = [a, b, ...]     (optional)
///   unit = [s, ...]
///   mult i j = [k:s, ...]    (omitted products are zero)
///   frobenius = [s, ...]     (optional)
/// Lines starting with '#' are comments. Errors carry line and column.
AlgebraPtr parse_algebra_text(std::string_view text, std::string default_name = {});

/// Module file:
///   algebra = <name-or-path>
///   dim = <m>
///   action i = [[s, ...], ...]   (one per basis element)
ModuleRep parse_module_text(std::string_view text, const AlgebraResolver& resolve);

/// Bimodule file (a kernel from `source` to `target`):
///   source = <name-or-path>
///   target = <name-or-path>
///   dim = <m>
///   left i = [[...]]     (per target basis element)
///   right i = [[...]]    (per source basis element, R_{ab} = R_b R_a)
Bimodule parse_bimodule_text(std::string_view text, const AlgebraResolver& resolve);

std::string read_file(const std::string& path);

}  // namespace hochkit
