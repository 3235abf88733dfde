#include "hochkit/spec_files.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

struct Segment {
  std::size_t offset;  // into the joined value
  std::size_t line;
  std::size_t column;  // column of value[offset] in the file
};

// One `key = value` record; the value may continue over several lines while
// brackets are open.
struct Record {
  std::vector<std::string> key;
  std::string value;
  std::size_t line = 0;
  std::vector<Segment> segments;

  std::pair<std::size_t, std::size_t> locate(std::size_t value_column) const {
    const std::size_t off = value_column == 0 ? 0 : value_column - 1;
    const Segment* seg = &segments.front();
    for (const auto& s : segments) {
      if (s.offset <= off) seg = &s;
    }
    return {seg->line, seg->column + (off - seg->offset)};
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t value_column = 1) const {
    const auto [l, c] = locate(value_column);
    throw ParseError(msg, l, c);
  }
};

int bracket_balance(std::string_view s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
  }
  return depth;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Record> read_records(std::string_view text) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  Record* open = nullptr;
  int depth = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (open != nullptr) {
      const std::size_t lead = line.find_first_not_of(" \t");
      if (lead == std::string_view::npos) continue;
      open->segments.push_back({open->value.size() + 1, line_no, lead + 1});
      open->value += ' ';
      open->value += line.substr(lead);
      depth += bracket_balance(line);
      if (depth <= 0) open = nullptr;
      continue;
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no, line.find_first_not_of(" \t") + 1);
    }
    Record r;
    r.line = line_no;
    std::istringstream keys{std::string(line.substr(0, eq))};
    for (std::string w; keys >> w;) r.key.push_back(w);
    if (r.key.empty()) throw ParseError("missing key", line_no, 1);
    std::size_t vstart = eq + 1;
    while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
    r.value = std::string(line.substr(vstart));
    r.segments.push_back({0, line_no, vstart + 1});
    depth = bracket_balance(r.value);
    out.push_back(std::move(r));
    if (depth > 0) open = &out.back();
    if (eol == text.size()) break;
  }
  if (open != nullptr) open->fail("unclosed bracket");
  return out;
}

std::size_t parse_index(const Record& r, std::size_t which, std::size_t bound, const std::string& what) {
  if (r.key.size() <= which) throw ParseError("missing " + what + " index", r.line, 1);
  const std::string& s = r.key[which];
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad " + what + " index '" + s + "'", r.line, 1);
  }
  const std::size_t v = std::stoul(s);
  if (v >= bound) throw ParseError(what + " index " + s + " out of range", r.line, 1);
  return v;
}

std::size_t parse_count(const Record& r) {
  const std::string_view v = trim(r.value);
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    r.fail("expected a non-negative integer");
  }
  return std::stoul(std::string(v));
}

Vector parse_list(const Record& r) {
  try {
    return parse_scalar_list(r.value);
  } catch (const ParseError& e) {
    r.fail(e.message(), e.column());
  }
}

// "[k:s, k:s]" with top-level commas.
SparseVector parse_sparse(const Record& r, std::size_t dim) {
  const std::string& v = r.value;
  const std::size_t open = v.find('[');
  const std::size_t close = v.rfind(']');
  if (open == std::string::npos) r.fail("expected '['");
  if (close == std::string::npos || close < open) r.fail("expected ']'", v.size() + 1);
  SparseVector out;
  std::size_t start = open + 1;
  int depth = 0;
  for (std::size_t i = open + 1; i <= close; ++i) {
    const char c = v[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (!((c == ',' && depth == 0) || i == close)) continue;
    const std::string_view piece(v.data() + start, i - start);
    const std::size_t piece_col = start + 1;
    start = i + 1;
    if (trim(piece).empty()) {
      if (i == close && out.empty()) break;
      r.fail("empty entry", piece_col);
    }
    const std::size_t colon = piece.find(':');
    if (colon == std::string_view::npos) r.fail("expected 'index:scalar'", piece_col);
    const std::string_view idx = trim(piece.substr(0, colon));
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      r.fail("bad coordinate index", piece_col);
    }
    const std::size_t k = std::stoul(std::string(idx));
    if (k >= dim) r.fail("coordinate index out of range", piece_col);
    try {
      CycScalar s = parse_scalar(piece.substr(colon + 1));
      if (!s.is_zero()) out.emplace_back(k, std::move(s));
    } catch (const ParseError& e) {
      r.fail(e.message(), piece_col + colon + e.column());
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].first == out[i - 1].first) r.fail("duplicate coordinate index");
  }
  return out;
}

SparseMatrix parse_matrix(const Record& r, std::size_t dim) {
  std::vector<Vector> rows;
  try {
    rows = parse_scalar_rows(r.value);
  } catch (const ParseError& e) {
    r.fail(e.message(), e.column());
  }
  if (rows.size() != dim) r.fail("expected " + std::to_string(dim) + " rows");
  for (const auto& row : rows) {
    if (row.size() != dim) r.fail("expected " + std::to_string(dim) + " columns");
  }
  if (dim == 0) return SparseMatrix(0, 0);
  return SparseMatrix::from_dense(rows);
}

std::vector<std::string> parse_labels(const Record& r) {
  std::string_view v = trim(r.value);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') r.fail("expected [label, ...]");
  v = v.substr(1, v.size() - 2);
  std::vector<std::string> out;
  while (true) {
    const auto comma = v.find(',');
    out.emplace_back(trim(v.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t last_line(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

const Record* single(const std::vector<Record>& rs, const std::string& key) {
  const Record* found = nullptr;
  for (const auto& r : rs) {
    if (r.key.size() == 1 && r.key[0] == key) {
      if (found != nullptr) throw ParseError("duplicate key '" + key + "'", r.line, 1);
      found = &r;
    }
  }
  return found;
}

const Record& required(const std::vector<Record>& rs, const std::string& key, std::string_view text) {
  const Record* r = single(rs, key);
  if (r == nullptr) throw ParseError("missing '" + key + "'", last_line(text), 1);
  return *r;
}

void check_keys(const std::vector<Record>& rs, const std::map<std::string, std::size_t>& allowed) {
  for (const auto& r : rs) {
    auto it = allowed.find(r.key[0]);
    if (it == allowed.end() || it->second != r.key.size()) {
      throw ParseError("unexpected key '" + r.key[0] + "'", r.line, 1);
    }
  }
}

// Fills one matrix per index from `name i = [[...]]` records.
std::vector<SparseMatrix> indexed_matrices(const std::vector<Record>& rs, const std::string& name,
                                           std::size_t count, std::size_t dim, std::string_view text) {
  std::vector<std::optional<SparseMatrix>> mats(count);
  for (const auto& r : rs) {
    if (r.key[0] != name) continue;
    const std::size_t i = parse_index(r, 1, count, name);
    if (mats[i]) throw ParseError("duplicate '" + name + " " + std::to_string(i) + "'", r.line, 1);
    mats[i] = parse_matrix(r, dim);
  }
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!mats[i]) throw ParseError("missing '" + name + " " + std::to_string(i) + "'", last_line(text), 1);
    out.push_back(std::move(*mats[i]));
  }
  return out;
}

}  // namespace

AlgebraPtr parse_algebra_text(std::string_view text, std::string default_name) {
  const auto rs = read_records(text);
  check_keys(rs, {{"name", 1}, {"dim", 1}, {"field_order", 1}, {"labels", 1}, {"unit", 1}, {"mult", 3}, {"frobenius", 1}});
  Algebra::Data d;
  const Record& dim_rec = required(rs, "dim", text);
  const std::size_t n = parse_count(dim_rec);
  if (n == 0) dim_rec.fail("dimension must be positive");
  d.name = std::move(default_name);
  if (const Record* r = single(rs, "name")) d.name = std::string(trim(r->value));
  if (const Record* r = single(rs, "field_order")) {
    const std::size_t fo = parse_count(*r);
    if (fo == 0) r->fail("field order must be positive");
    d.field_order = static_cast<unsigned>(fo);
  }
  if (const Record* r = single(rs, "labels")) {
    d.labels = parse_labels(*r);
    if (d.labels.size() != n) r->fail("expected " + std::to_string(n) + " labels");
  }
  const Record& unit_rec = required(rs, "unit", text);
  d.unit = parse_list(unit_rec);
  if (d.unit.size() != n) unit_rec.fail("expected " + std::to_string(n) + " unit coordinates");
  d.products.resize(n * n);
  std::vector<bool> seen(n * n, false);
  for (const auto& r : rs) {
    if (r.key[0] != "mult") continue;
    const std::size_t i = parse_index(r, 1, n, "mult");
    const std::size_t j = parse_index(r, 2, n, "mult");
    if (seen[i * n + j]) throw ParseError("duplicate product", r.line, 1);
    seen[i * n + j] = true;
    d.products[i * n + j] = parse_sparse(r, n);
  }
  if (const Record* r = single(rs, "frobenius")) {
    Vector lambda = parse_list(*r);
    if (lambda.size() != n) r->fail("expected " + std::to_string(n) + " trace coordinates");
    d.serre = SerreData{std::move(lambda)};
  }
  return Algebra::create(std::move(d));
}

ModuleRep parse_module_text(std::string_view text, const AlgebraResolver& resolve) {
  const auto rs = read_records(text);
  check_keys(rs, {{"algebra", 1}, {"dim", 1}, {"action", 2}, {"label", 1}});
  const Record& alg_rec = required(rs, "algebra", text);
  AlgebraPtr a = resolve(std::string(trim(alg_rec.value)));
  const std::size_t m = parse_count(required(rs, "dim", text));
  auto action = indexed_matrices(rs, "action", a->dim(), m, text);
  std::string label = "module";
  if (const Record* r = single(rs, "label")) label = std::string(trim(r->value));
  return ModuleRep::create(std::move(a), std::move(action), std::move(label));
}

Bimodule parse_bimodule_text(std::string_view text, const AlgebraResolver& resolve) {
  const auto rs = read_records(text);
  check_keys(rs, {{"source", 1}, {"target", 1}, {"dim", 1}, {"left", 2}, {"right", 2}, {"label", 1}});
  AlgebraPtr source = resolve(std::string(trim(required(rs, "source", text).value)));
  AlgebraPtr target = resolve(std::string(trim(required(rs, "target", text).value)));
  const std::size_t m = parse_count(required(rs, "dim", text));
  auto left = indexed_matrices(rs, "left", target->dim(), m, text);
  auto right = indexed_matrices(rs, "right", source->dim(), m, text);
  std::string label = "kernel";
  if (const Record* r = single(rs, "label")) label = std::string(trim(r->value));
  return Bimodule::create(std::move(source), std::move(target), std::move(left), std::move(right), std::move(label));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hochkit
