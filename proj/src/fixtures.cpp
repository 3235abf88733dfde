#include "hochkit/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>

#include "hochkit/error.hpp"
#include "hochkit/spec_files.hpp"

#ifndef HOCHKIT_DEFAULT_FIXTURE_DIR
#define HOCHKIT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace hochkit {

namespace fs = std::filesystem;

namespace {

using Perm = std::vector<std::size_t>;
using Matrices = std::vector<SparseMatrix>;

SparseMatrix mat(std::initializer_list<std::initializer_list<CycScalar>> rows) {
  std::vector<Vector> dense;
  for (const auto& r : rows) dense.emplace_back(r);
  return SparseMatrix::from_dense(dense);
}

CycScalar z(unsigned n, long k) { return CycScalar::root_of_unity(n, k); }

// Permutation action on the sum-zero vectors, basis v_i = e_i - e_{i+1};
// x = sum c_i v_i has c_j = x_0 + ... + x_j.
SparseMatrix sum_zero_rep(const Perm& p) {
  const std::size_t m = p.size();
  SparseMatrix out(m - 1, m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    Vector x(m);
    x[p[j]] += CycScalar(1);
    x[p[j + 1]] -= CycScalar(1);
    CycScalar c;
    for (std::size_t t = 0; t + 1 < m; ++t) {
      c += x[t];
      out.set(t, j, c);
    }
  }
  return out;
}

// Image of every group element from the images of the generators.
ModuleRep rep_from_generators(const Group& g, const AlgebraPtr& a, const Matrices& images, std::string label) {
  const std::size_t d = images.front().rows();
  std::vector<SparseMatrix> action;
  action.reserve(g.order());
  for (const auto& word : g.words) {
    SparseMatrix m = SparseMatrix::identity(d);
    for (std::size_t k : word) m = m * images[k];
    action.push_back(std::move(m));
  }
  return ModuleRep::create(a, std::move(action), std::move(label));
}

Fixture cyclic_fixture(std::size_t n) {
  const Group g = cyclic_group(n);
  std::vector<Matrices> reps;
  for (std::size_t k = 0; k < n; ++k) reps.push_back({SparseMatrix::scalar(z(static_cast<unsigned>(n), static_cast<long>(k)))});
  return group_fixture(g, "zn:" + std::to_string(n), reps);
}

Fixture s3_fixture() {
  const Perm s{1, 0, 2};
  const Perm r{1, 2, 0};
  const Group g = permutation_group({s, r}, {"s", "r"});
  return group_fixture(g, "s3",
                       {{SparseMatrix::scalar(1), SparseMatrix::scalar(1)},
                        {SparseMatrix::scalar(-1), SparseMatrix::scalar(1)},
                        {sum_zero_rep(s), sum_zero_rep(r)}});
}

Fixture d4_fixture() {
  const Perm rot{1, 2, 3, 0};
  const Perm refl{0, 3, 2, 1};
  const Group g = permutation_group({rot, refl}, {"r", "f"});
  std::vector<Matrices> reps;
  for (int a : {1, -1})
    for (int b : {1, -1}) reps.push_back({SparseMatrix::scalar(a), SparseMatrix::scalar(b)});
  reps.push_back({mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})});
  return group_fixture(g, "d4", reps);
}

Fixture q8_fixture() {
  // Units as basis * 2 + sign bit, basis 0..3 = 1, i, j, k.
  static const int table[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  auto left_mult = [&](int q) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      const int b = x / 2;
      const int sign = x % 2 ? -1 : 1;
      const int rb = table[q][b][0];
      const int rs = table[q][b][1] * sign;
      p[x] = static_cast<std::size_t>(rb * 2 + (rs < 0 ? 1 : 0));
    }
    return p;
  };
  const Group g = permutation_group({left_mult(1), left_mult(2)}, {"i", "j"});
  std::vector<Matrices> reps;
  for (int a : {1, -1})
    for (int b : {1, -1}) reps.push_back({SparseMatrix::scalar(a), SparseMatrix::scalar(b)});
  reps.push_back({mat({{z(4, 1), 0}, {0, -z(4, 1)}}), mat({{0, -1}, {1, 0}})});
  return group_fixture(g, "q8", reps);
}

Fixture a4_fixture() {
  const Perm a{1, 2, 0, 3};
  const Perm b{1, 0, 3, 2};
  const Group g = permutation_group({a, b}, {"a", "b"});
  std::vector<Matrices> reps;
  for (long k = 0; k < 3; ++k) reps.push_back({SparseMatrix::scalar(z(3, k)), SparseMatrix::scalar(1)});
  reps.push_back({sum_zero_rep(a), sum_zero_rep(b)});
  return group_fixture(g, "a4", reps);
}

Fixture matrix_fixture(std::size_t n) {
  Fixture f;
  f.name = "mat:" + std::to_string(n);
  f.algebra = matrix_algebra(n);
  std::vector<SparseMatrix> action;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseMatrix e(n, n);
      e.set(i, j, 1);
      action.push_back(std::move(e));
    }
  f.simples.push_back(ModuleRep::create(f.algebra, std::move(action), "C^" + std::to_string(n)));
  return f;
}

Fixture truncated_fixture(std::size_t k) {
  Fixture f;
  f.algebra = truncated_poly(k);
  f.name = f.algebra->name();
  std::vector<SparseMatrix> action(k, SparseMatrix::zero(1, 1));
  action[0] = SparseMatrix::identity(1);
  f.simples.push_back(ModuleRep::create(f.algebra, std::move(action), "k"));
  f.augmentation = f.simples.front();
  return f;
}

Fixture field_fixture() {
  Fixture f;
  f.name = "field";
  f.algebra = field_algebra();
  f.simples.push_back(vector_space(1));
  f.augmentation = f.simples.front();
  return f;
}

Group product_group(const Group& a, const Group& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) table[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
    }
  return group_from_table(std::move(table), std::move(labels));
}

bool parse_positive(std::string_view s, std::size_t& out) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  out = std::stoul(std::string(s));
  return out > 0;
}

Fixture file_fixture(const fs::path& path) {
  Fixture f;
  f.name = path.stem().string();
  f.algebra = parse_algebra_text(read_file(path.string()), f.name);
  // Simples ship alongside as <stem>.simple<k>.mod.
  std::vector<fs::path> mods;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string fname = entry.path().filename().string();
    if (fname.starts_with(f.name + ".simple") && fname.ends_with(".mod")) mods.push_back(entry.path());
  }
  std::sort(mods.begin(), mods.end());
  const AlgebraPtr alg = f.algebra;
  auto resolve = [&](const std::string& ref) {
    AlgebraPtr other = load_fixture(ref).algebra;
    return same_algebra(*other, *alg) ? alg : other;
  };
  for (const auto& m : mods) {
    ModuleRep s = parse_module_text(read_file(m.string()), [&](const std::string& ref) {
      return ref == f.name || ref == path.string() ? alg : resolve(ref);
    });
    f.simples.push_back(rebase(s, alg));
  }
  return f;
}

}  // namespace

std::string fixture_directory() {
  if (const char* env = std::getenv("HOCHKIT_FIXTURES"); env != nullptr && *env != '\0') return env;
  return HOCHKIT_DEFAULT_FIXTURE_DIR;
}

std::vector<std::string> group_fixture_names() {
  return {"zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "s3", "d4", "q8", "a4"};
}

Fixture group_fixture(const Group& g, std::string name, const std::vector<Matrices>& reps) {
  Fixture f;
  f.name = name;
  f.algebra = group_algebra(g, name);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    f.simples.push_back(rep_from_generators(g, f.algebra, reps[i], "V" + std::to_string(i)));
  }
  f.augmentation = f.simples.front();
  f.augmentation->set_label("trivial");
  f.group = g;
  return f;
}

Fixture tensor_fixture(const Fixture& a, const Fixture& b) {
  Fixture f;
  f.algebra = tensor(a.algebra, b.algebra);
  f.name = f.algebra->name();
  auto combine = [&](const ModuleRep& x, const ModuleRep& y) {
    std::vector<SparseMatrix> action;
    action.reserve(f.algebra->dim());
    for (const auto& m : x.actions())
      for (const auto& n : y.actions()) action.push_back(kron(m, n));
    return ModuleRep::create_trusted(f.algebra, std::move(action), x.label() + "⊠" + y.label());
  };
  for (const auto& x : a.simples)
    for (const auto& y : b.simples) f.simples.push_back(combine(x, y));
  if (a.augmentation && b.augmentation) f.augmentation = combine(*a.augmentation, *b.augmentation);
  if (a.group && b.group) f.group = product_group(*a.group, *b.group);
  return f;
}

Fixture opposite_fixture(const Fixture& a) {
  Fixture f;
  f.algebra = opposite(a.algebra);
  f.name = f.algebra->name();
  for (const auto& s : a.simples) f.simples.push_back(rebase(dual_module(s), f.algebra));
  if (a.augmentation) f.augmentation = rebase(dual_module(*a.augmentation), f.algebra);
  return f;
}

bool split_call(std::string_view text, std::string& head, std::vector<std::string>& args) {
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') return false;
  head = std::string(text.substr(0, open));
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
  args.clear();
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i + 1 < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) return false;
    if (c == ',' && depth == 0) {
      args.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) return false;
  args.emplace_back(text.substr(start, text.size() - 1 - start));
  for (auto& a : args) {
    const auto b = a.find_first_not_of(" \t");
    const auto e = a.find_last_not_of(" \t");
    a = b == std::string::npos ? std::string() : a.substr(b, e - b + 1);
  }
  return true;
}

Fixture load_fixture(std::string_view spec_in) {
  std::string spec(spec_in);
  spec.erase(std::remove_if(spec.begin(), spec.end(), [](unsigned char c) { return std::isspace(c); }), spec.end());
  std::size_t n = 0;
  if (spec == "field") return field_fixture();
  if (spec == "s3") return s3_fixture();
  if (spec == "d4") return d4_fixture();
  if (spec == "q8") return q8_fixture();
  if (spec == "a4") return a4_fixture();
  if (spec == "dual") return truncated_fixture(2);
  if (spec.starts_with("zn:") && parse_positive(spec.substr(3), n)) {
    if (n > 64) throw Error(ErrorCode::Usage, "zn order too large");
    return cyclic_fixture(n);
  }
  if (spec.starts_with("mat:") && parse_positive(spec.substr(4), n)) {
    if (n > 8) throw Error(ErrorCode::Usage, "matrix size too large");
    return matrix_fixture(n);
  }
  if (spec.starts_with("trunc:") && parse_positive(spec.substr(6), n)) {
    if (n < 2 || n > 64) throw Error(ErrorCode::Usage, "trunc:<k> needs 2 <= k <= 64");
    return truncated_fixture(n);
  }
  std::string head;
  std::vector<std::string> args;
  if (split_call(spec, head, args)) {
    if (head == "tensor" && args.size() == 2) return tensor_fixture(load_fixture(args[0]), load_fixture(args[1]));
    if (head == "op" && args.size() == 1) return opposite_fixture(load_fixture(args[0]));
    if (head == "env" && args.size() == 1) {
      const Fixture a = load_fixture(args[0]);
      Fixture e = tensor_fixture(a, opposite_fixture(a));
      Algebra::Data d = e.algebra->data();
      d.name = "env(" + a.name + ")";
      AlgebraPtr renamed = Algebra::create_trusted(std::move(d));
      for (auto& s : e.simples) s = rebase(s, renamed);
      if (e.augmentation) e.augmentation = rebase(*e.augmentation, renamed);
      e.algebra = renamed;
      e.name = renamed->name();
      return e;
    }
  }
  const fs::path in_dir = fs::path(fixture_directory()) / (spec + ".alg");
  if (fs::exists(in_dir)) return file_fixture(in_dir);
  if (fs::exists(spec)) return file_fixture(spec);
  throw Error(ErrorCode::NotFound, "unknown algebra '" + spec + "'");
}

ModuleRep resolve_module(const Fixture& f, std::string_view ref_in) {
  std::string ref(ref_in);
  const auto b = ref.find_first_not_of(" \t");
  const auto e = ref.find_last_not_of(" \t");
  ref = b == std::string::npos ? std::string() : ref.substr(b, e - b + 1);
  if (ref == "regular") return regular_module(f.algebra);
  if (ref == "zero") return ModuleRep::zero(f.algebra);
  if (ref == "trivial") {
    if (!f.augmentation) throw Error(ErrorCode::MissingAugmentation, f.name + " has no trivial module");
    return *f.augmentation;
  }
  std::size_t k = 0;
  if (ref.starts_with("simple:")) {
    const std::string_view idx = std::string_view(ref).substr(7);
    if (idx == "0") return f.simples.at(0);
    if (!parse_positive(idx, k)) throw Error(ErrorCode::Usage, "bad simple index in '" + ref + "'");
    if (k >= f.simples.size()) {
      throw Error(ErrorCode::MissingSimples, f.name + " has " + std::to_string(f.simples.size()) + " simples");
    }
    return f.simples[k];
  }
  std::string head;
  std::vector<std::string> args;
  if (split_call(ref, head, args) && head == "sum" && args.size() >= 2) {
    ModuleRep m = resolve_module(f, args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) m = direct_sum(m, resolve_module(f, args[i]));
    return m;
  }
  if (fs::exists(ref)) {
    ModuleRep m = parse_module_text(read_file(ref), [&](const std::string& name) {
      if (name == f.name) return f.algebra;
      return load_fixture(name).algebra;
    });
    return rebase(m, f.algebra);
  }
  throw Error(ErrorCode::NotFound, "unknown module '" + ref + "'");
}

Bimodule resolve_kernel(const Fixture& source, const Fixture& target, std::string_view ref_in) {
  std::string ref(ref_in);
  const auto b = ref.find_first_not_of(" \t");
  const auto e = ref.find_last_not_of(" \t");
  ref = b == std::string::npos ? std::string() : ref.substr(b, e - b + 1);
  if (ref == "regular") {
    if (!same_algebra(*source.algebra, *target.algebra)) {
      throw Error(ErrorCode::AlgebraMismatch, "regular kernel needs equal source and target");
    }
    return regular_bimodule(source.algebra);
  }
  std::string head;
  std::vector<std::string> args;
  if (split_call(ref, head, args)) {
    if (head == "outer" && args.size() == 2) {
      const Fixture op = opposite_fixture(source);
      Bimodule k = outer(resolve_module(op, args[0]), resolve_module(target, args[1]));
      return Bimodule::create_trusted(source.algebra, target.algebra, k.left(), k.right(), k.label());
    }
    if (head == "sum" && args.size() >= 2) {
      Bimodule k = resolve_kernel(source, target, args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) k = kernel_sum(k, resolve_kernel(source, target, args[i]));
      return k;
    }
  }
  if (fs::exists(ref)) {
    Bimodule k = parse_bimodule_text(read_file(ref), [&](const std::string& name) {
      if (name == source.name) return source.algebra;
      if (name == target.name) return target.algebra;
      return load_fixture(name).algebra;
    });
    if (!same_algebra(*k.source(), *source.algebra) || !same_algebra(*k.target(), *target.algebra)) {
      throw Error(ErrorCode::AlgebraMismatch, "kernel file algebras differ from the requested ones");
    }
    return Bimodule::create_trusted(source.algebra, target.algebra, k.left(), k.right(), k.label());
  }
  throw Error(ErrorCode::NotFound, "unknown kernel '" + ref + "'");
}

}  // namespace hochkit
