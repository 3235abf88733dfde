#include "hochkit/tqft.hpp"

#include <cctype>
#include <charconv>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

std::optional<Generator> generator_from(std::string_view name) {
  if (name == "cap_in") return Generator::CapIn;
  if (name == "cap_out") return Generator::CapOut;
  if (name == "pants_split") return Generator::PantsSplit;
  if (name == "pants_merge") return Generator::PantsMerge;
  return std::nullopt;
}

std::size_t parse_count(std::string_view text, std::size_t column) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", 1, column);
  }
  return v;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    if (std::isspace(c) || c == ',' || c == ';') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size()) {
      const unsigned char d = text[i];
      if (std::isalnum(d) || d == '_' || d == ':' || d == '@') {
        ++i;
      } else {
        break;
      }
    }
    if (i == start) throw ParseError(std::string("unexpected character '") + text[i] + "'", 1, i + 1);
    out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

Bimodule regular_power(const AlgebraPtr& a, std::size_t k) {
  Bimodule r = regular_bimodule(a);
  Bimodule out = r;
  for (std::size_t i = 1; i < k; ++i) out = kernel_tensor(out, r);
  return out;
}

// gen acting on strands [strand, strand + in) of an arity-`arity` boundary.
Bimodule step_kernel(const GeneratorKernels& g, const WordStep& s) {
  const Bimodule* base = nullptr;
  switch (s.gen) {
    case Generator::CapIn: base = &g.cap_in; break;
    case Generator::CapOut: base = &g.cap_out; break;
    case Generator::PantsSplit: base = &g.pants_split; break;
    case Generator::PantsMerge: base = &g.pants_merge; break;
  }
  const std::size_t in = generator_arity(s.gen).first;
  const std::size_t before = s.strand;
  const std::size_t after = s.in_arity - before - in;
  Bimodule k = *base;
  if (before > 0) k = kernel_tensor(regular_power(g.algebra, before), k);
  if (after > 0) k = kernel_tensor(k, regular_power(g.algebra, after));
  return k;
}

}  // namespace

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::CapIn: return "cap_in";
    case Generator::CapOut: return "cap_out";
    case Generator::PantsSplit: return "pants_split";
    case Generator::PantsMerge: return "pants_merge";
  }
  return "?";
}

std::pair<std::size_t, std::size_t> generator_arity(Generator g) {
  switch (g) {
    case Generator::CapIn: return {0, 1};
    case Generator::CapOut: return {1, 0};
    case Generator::PantsSplit: return {1, 2};
    case Generator::PantsMerge: return {2, 1};
  }
  return {0, 0};
}

long CobordismWord::euler_characteristic() const {
  long chi = 0;
  for (const auto& s : steps) chi += (s.gen == Generator::CapIn || s.gen == Generator::CapOut) ? 1 : -1;
  return chi;
}

CobordismWord parse_word(std::string_view text) {
  CobordismWord w;
  w.text = std::string(text);
  std::vector<std::pair<Generator, std::pair<std::size_t, std::size_t>>> raw;  // gen, (strand, column)
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty cobordism word", 1, 1);
  for (const auto& tok : tokens) {
    if (tok.text.starts_with("genus:")) {
      const std::size_t g = parse_count(tok.text.substr(6), tok.column + 6);
      if (tokens.size() == 1) w.genus = g;
      raw.push_back({Generator::CapIn, {0, tok.column}});
      for (std::size_t i = 0; i < g; ++i) {
        raw.push_back({Generator::PantsSplit, {0, tok.column}});
        raw.push_back({Generator::PantsMerge, {0, tok.column}});
      }
      raw.push_back({Generator::CapOut, {0, tok.column}});
      continue;
    }
    const std::size_t at = tok.text.find('@');
    const std::string_view name = tok.text.substr(0, at);
    const auto gen = generator_from(name);
    if (!gen) throw ParseError("unknown generator '" + std::string(name) + "'", 1, tok.column);
    std::size_t strand = 0;
    if (at != std::string_view::npos) strand = parse_count(tok.text.substr(at + 1), tok.column + at + 1);
    raw.push_back({*gen, {strand, tok.column}});
  }
  std::size_t arity = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto [in, out] = generator_arity(raw[i].first);
    const std::size_t strand = raw[i].second.first;
    if (strand + in > arity || (in == 0 && strand > arity)) {
      throw Error(ErrorCode::ArityMismatch,
                  "step " + std::to_string(i + 1) + " (" + std::string(generator_name(raw[i].first)) + "@" +
                      std::to_string(strand) + ") needs " + std::to_string(strand + in) +
                      " incoming circles, have " + std::to_string(arity));
    }
    WordStep s{raw[i].first, strand, raw[i].second.second, arity, arity - in + out};
    arity = s.out_arity;
    w.steps.push_back(s);
  }
  if (arity != 0) {
    throw Error(ErrorCode::ArityMismatch, "word ends with " + std::to_string(arity) + " open circles after step " +
                                              std::to_string(raw.size()));
  }
  return w;
}

CobordismWord genus_word(std::size_t g) { return parse_word("genus:" + std::to_string(g)); }

GeneratorKernels generator_kernels(const Fixture& f) {
  if (!f.augmentation || !f.group) {
    throw Error(ErrorCode::MissingAugmentation, f.name + " is not a group algebra fixture");
  }
  const AlgebraPtr& a = f.algebra;
  const std::size_t d = a->dim();
  GeneratorKernels k;
  k.algebra = a;
  k.cap_in = Bimodule::create(field_algebra(), a, f.augmentation->actions(), {SparseMatrix::identity(1)}, "cap_in");
  k.cap_out = dual_kernel(k.cap_in);
  k.cap_out.set_label("cap_out");
  const AlgebraPtr aa = tensor(a, a);
  std::vector<SparseMatrix> left;
  for (std::size_t i = 0; i < aa->dim(); ++i) left.push_back(aa->left_mult(i));
  std::vector<SparseMatrix> right;
  for (std::size_t g = 0; g < d; ++g) right.push_back(aa->right_mult(g * d + g));
  k.pants_split = Bimodule::create(a, aa, std::move(left), std::move(right), "pants_split");
  k.pants_merge = dual_kernel(k.pants_split);
  k.pants_merge.set_label("pants_merge");
  return k;
}

SurfaceInvariant evaluate(const GeneratorKernels& kernels, const CobordismWord& w) {
  if (w.steps.empty()) throw Error(ErrorCode::ArityMismatch, "empty word");
  Bimodule cur = step_kernel(kernels, w.steps[0]);
  for (std::size_t i = 1; i < w.steps.size(); ++i) cur = convolve(cur, step_kernel(kernels, w.steps[i]));
  return {w.text, w.genus, kernels.algebra->name(), cur.dim()};
}

SurfaceInvariant evaluate(const Fixture& f, const CobordismWord& w) { return evaluate(generator_kernels(f), w); }

HomCountOracle hom_count_oracle(const Fixture& f, std::size_t genus) {
  if (!f.group) throw Error(ErrorCode::MissingAugmentation, f.name + " is not a group algebra fixture");
  return {surface_hom_count(*f.group, static_cast<unsigned>(genus)), f.group->table.size()};
}

}  // namespace hochkit
