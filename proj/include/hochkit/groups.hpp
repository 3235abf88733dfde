#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hochkit {

/// Finite group held as its multiplication table. Element 0 is the identity.
struct Group {
  std::vector<std::string> labels;
  /// table[g][h] = g*h
  std::vector<std::vector<std::size_t>> table;
  /// Indices of a generating set.
  std::vector<std::size_t> generators;
  /// Shortest word in the generators for each element, as generator
  /// positions (empty for the identity).
  std::vector<std::vector<std::size_t>> words;

  std::size_t order() const noexcept { return table.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  std::size_t inverse(std::size_t g) const;
  std::size_t exponent() const;
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
};

/// Checks associativity, a two-sided identity at index 0 and inverses.
/// Throws NotAGroup with a witness.
void validate_group_table(const std::vector<std::vector<std::size_t>>& table);

/// Closure of permutation generators (composition (p*q)(x) = p(q(x))),
/// enumerated breadth-first by word length.
Group permutation_group(const std::vector<std::vector<std::size_t>>& generators,
                        const std::vector<std::string>& names);

/// Group from an explicit table (identity at index 0). Generators are
/// chosen greedily and words computed breadth-first.
Group group_from_table(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> labels = {});

Group cyclic_group(std::size_t n);

/// Number of (a1, b1, ..., ag, bg) with [a1,b1]...[ag,bg] = 1.
std::size_t surface_hom_count(const Group& g, unsigned genus);

}  // namespace hochkit
