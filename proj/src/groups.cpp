#include "hochkit/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "hochkit/error.hpp"

namespace hochkit {

std::size_t Group::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h) {
    if (table[g][h] == 0) return h;
  }
  throw Error(ErrorCode::NotAGroup, "element " + std::to_string(g) + " has no inverse");
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (std::size_t g = 0; g < order(); ++g) {
    std::size_t k = 1;
    for (std::size_t x = g; x != 0; x = table[x][g]) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

std::vector<std::vector<std::size_t>> Group::conjugacy_classes() const {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(order(), false);
  for (std::size_t g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < order(); ++h) {
      const std::size_t c = table[table[h][g]][inverse(h)];
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

void validate_group_table(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw Error(ErrorCode::NotAGroup, "row " + std::to_string(g) + " has wrong length");
    for (std::size_t h : table[g]) {
      if (h >= n) throw Error(ErrorCode::NotAGroup, "entry out of range in row " + std::to_string(g));
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw Error(ErrorCode::NotAGroup, "element 0 is not an identity for " + std::to_string(g));
    }
    bool has_inverse = false;
    for (std::size_t h = 0; h < n; ++h) has_inverse |= table[g][h] == 0 && table[h][g] == 0;
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, "no inverse for " + std::to_string(g));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::NotAGroup, "not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
}

namespace {

std::string word_label(const std::vector<std::size_t>& word, const std::vector<std::string>& names) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += names[word[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Group permutation_group(const std::vector<std::vector<std::size_t>>& generators,
                        const std::vector<std::string>& names) {
  using Perm = std::vector<std::size_t>;
  if (generators.empty()) throw Error(ErrorCode::NotAGroup, "no generators");
  const std::size_t degree = generators.front().size();
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
  };

  std::vector<Perm> elements{id};
  std::vector<std::vector<std::size_t>> words{{}};
  std::map<Perm, std::size_t> index{{id, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Perm next = compose(elements[cur], generators[k]);
      if (index.contains(next)) continue;
      index.emplace(next, elements.size());
      auto w = words[cur];
      w.push_back(k);
      words.push_back(std::move(w));
      elements.push_back(std::move(next));
      queue.push_back(elements.size() - 1);
    }
  }

  Group g;
  const std::size_t n = elements.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = index.at(compose(elements[a], elements[b]));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const std::size_t idx = index.at(generators[k]);
    if (idx != 0 && std::find(g.generators.begin(), g.generators.end(), idx) == g.generators.end()) {
      g.generators.push_back(idx);
    }
  }
  g.words = words;
  for (const auto& w : words) g.labels.push_back(word_label(w, names));
  return g;
}

Group group_from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels) {
  validate_group_table(table);
  const std::size_t n = table.size();
  Group g;
  g.table = std::move(table);
  // Greedy generating set: add the smallest element outside the current
  // subgroup until everything is reached.
  std::vector<std::size_t> reached{0};
  std::vector<bool> in(n, false);
  in[0] = true;
  auto close = [&] {
    for (std::size_t i = 0; i < reached.size(); ++i)
      for (std::size_t s : g.generators) {
        const std::size_t x = g.table[reached[i]][s];
        if (!in[x]) {
          in[x] = true;
          reached.push_back(x);
        }
      }
  };
  for (std::size_t x = 1; x < n; ++x) {
    if (in[x]) continue;
    g.generators.push_back(x);
    close();
  }
  g.words.assign(n, {});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      const std::size_t x = g.table[cur][g.generators[k]];
      if (seen[x]) continue;
      seen[x] = true;
      g.words[x] = g.words[cur];
      g.words[x].push_back(k);
      queue.push_back(x);
    }
  }
  if (labels.size() == n) {
    g.labels = std::move(labels);
  } else {
    for (std::size_t x = 0; x < n; ++x) g.labels.push_back(x == 0 ? "e" : "g" + std::to_string(x));
  }
  return g;
}

Group cyclic_group(std::size_t n) {
  std::vector<std::size_t> shift(n);
  for (std::size_t x = 0; x < n; ++x) shift[x] = (x + 1) % n;
  if (n == 1) return permutation_group({{0}}, {"g"});
  return permutation_group({shift}, {"g"});
}

std::size_t surface_hom_count(const Group& g, unsigned genus) {
  const std::size_t n = g.order();
  // commutators[c] = number of pairs (a, b) with [a, b] = c
  std::vector<std::size_t> commutators(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
      ++commutators[c];
    }
  // Convolve the commutator distribution genus times and read off the identity.
  std::vector<std::size_t> dist(n, 0);
  dist[0] = 1;
  for (unsigned k = 0; k < genus; ++k) {
    std::vector<std::size_t> next(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (dist[x] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) next[g.mul(x, c)] += dist[x] * commutators[c];
    }
    dist = std::move(next);
  }
  return dist[0];
}

}  // namespace hochkit
