#include "hochkit/linalg.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "hochkit/error.hpp"

namespace hochkit {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

void axpy(SparseVector& y, const CycScalar& a, const SparseVector& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      CycScalar v = std::move(iy->second);
      v += a * ix->second;
      if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const CycScalar& a) {
  if (a.is_zero()) return {};
  SparseVector out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

CycScalar dot(const SparseVector& x, const Vector& y) {
  CycScalar s;
  for (const auto& [i, v] : x) s += v * y[i];
  return s;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const CycScalar& x) { return x.is_zero(); });
}

namespace {

// Dense accumulator for building one sparse row from many contributions.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t n) : values_(n), used_(n, false) {}

  void add(std::size_t j, const CycScalar& v) {
    if (!used_[j]) {
      used_[j] = true;
      touched_.push_back(j);
      values_[j] = v;
    } else {
      values_[j] += v;
    }
  }

  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector out;
    out.reserve(touched_.size());
    for (std::size_t j : touched_) {
      if (!values_[j].is_zero()) out.emplace_back(j, std::move(values_[j]));
      values_[j] = CycScalar();
      used_[j] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<CycScalar> values_;
  std::vector<bool> used_;
  std::vector<std::size_t> touched_;
};

}  // namespace

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, CycScalar(1));
  return m;
}

SparseMatrix SparseMatrix::scalar(const CycScalar& c) {
  SparseMatrix m(1, 1);
  if (!c.is_zero()) m.data_[0].emplace_back(0, c);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged dense matrix");
    m.data_[i] = to_sparse(rows[i]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty() && rows[i].back().first >= cols) {
      throw Error(ErrorCode::ShapeMismatch, "row entry beyond column count");
    }
    m.data_[i] = std::move(rows[i]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  SparseMatrix m(rows, cols);
  for (auto& [i, j, v] : t) {
    if (i >= rows || j >= cols) throw Error(ErrorCode::ShapeMismatch, "triplet out of range");
    auto& row = m.data_[i];
    if (!row.empty() && row.back().first == j) {
      row.back().second += v;
    } else {
      row.emplace_back(j, std::move(v));
    }
  }
  for (auto& row : m.data_) {
    std::erase_if(row, [](const SparseEntry& e) { return e.second.is_zero(); });
  }
  return m;
}

CycScalar SparseMatrix::get(std::size_t i, std::size_t j) const {
  const auto& row = data_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const SparseEntry& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == j) return it->second;
  return {};
}

void SparseMatrix::set(std::size_t i, std::size_t j, const CycScalar& v) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::ShapeMismatch, "set out of range");
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const SparseEntry& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == j) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (!v.is_zero()) {
    row.insert(it, {j, v});
  }
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

unsigned SparseMatrix::field_order() const {
  unsigned order = 1;
  for (const auto& r : data_)
    for (const auto& e : r) order = std::lcm(order, e.second.order());
  return order;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

SparseMatrix SparseMatrix::scaled(const CycScalar& c) const {
  if (c.is_zero()) return zero(rows_, cols_);
  SparseMatrix m = *this;
  for (auto& r : m.data_)
    for (auto& e : r) e.second *= c;
  return m;
}

CycScalar SparseMatrix::trace() const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "trace of non-square matrix");
  CycScalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += get(i, i);
  return t;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(hochkit::to_dense(r, cols_));
  return out;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(data_[i], x);
  return y;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  return to_sparse(apply(hochkit::to_dense(x, cols_)));
}

SparseVector SparseMatrix::column(std::size_t j) const {
  SparseVector out;
  for (std::size_t i = 0; i < rows_; ++i) {
    CycScalar v = get(i, j);
    if (!v.is_zero()) out.emplace_back(i, std::move(v));
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product dimension mismatch");
  SparseMatrix c(a.rows_, b.cols_);
  RowAccumulator acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (const auto& [k, av] : a.data_[i]) {
      for (const auto& [j, bv] : b.data_[k]) acc.add(j, av * bv);
    }
    c.data_[i] = acc.take();
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  SparseMatrix c = a;
  for (std::size_t i = 0; i < a.rows_; ++i) axpy(c.data_[i], CycScalar(1), b.data_[i]);
  return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  SparseMatrix c = a;
  for (std::size_t i = 0; i < a.rows_; ++i) axpy(c.data_[i], CycScalar(-1), b.data_[i]);
  return c;
}

void SparseMatrix::dump(std::ostream& os) const {
  os << rows_ << ' ' << cols_ << ' ' << field_order() << '\n';
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) os << '(' << i << ", " << j << ", " << v << ")\n";
}

SparseMatrix SparseMatrix::parse_dump(std::istream& is) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  unsigned order = 0;
  if (!(is >> rows >> cols >> order)) throw ParseError("bad dump header", 1, 1);
  std::string line;
  std::getline(is, line);
  std::size_t line_no = 1;
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto open = line.find('(');
    const auto close = line.rfind(')');
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (open == std::string::npos || close == std::string::npos || c2 == std::string::npos) {
      throw ParseError("expected (row, col, scalar)", line_no, 1);
    }
    try {
      const std::size_t i = std::stoul(line.substr(open + 1, c1 - open - 1));
      const std::size_t j = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
      t.emplace_back(i, j, parse_scalar(line.substr(c2 + 1, close - c2 - 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_no, c2 + 1 + e.column());
    } catch (const std::logic_error&) {
      throw ParseError("bad index", line_no, open + 2);
    }
  }
  return from_triplets(rows, cols, std::move(t));
}

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m) {
  m.dump(os);
  return os;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<SparseVector> rows(out.rows());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ib = 0; ib < b.rows(); ++ib) {
      auto& row = rows[ia * b.rows() + ib];
      row.reserve(a.row(ia).size() * b.row(ib).size());
      for (const auto& [ja, va] : a.row(ia))
        for (const auto& [jb, vb] : b.row(ib)) row.emplace_back(ja * b.cols() + jb, va * vb);
    }
  }
  return SparseMatrix::from_rows(out.cols(), std::move(rows));
}

SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseVector> rows;
  rows.reserve(a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    SparseVector r = b.row(i);
    for (auto& e : r) e.first += a.cols();
    rows.push_back(std::move(r));
  }
  return SparseMatrix::from_rows(a.cols() + b.cols(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

bool is_unit_pivot(const CycScalar& v) {
  return v.is_rational() && (v.rational() == 1 || v.rational() == -1);
}

void normalize_row(SparseVector& row, std::size_t pivot_col) {
  auto it = std::lower_bound(row.begin(), row.end(), pivot_col,
                             [](const SparseEntry& e, std::size_t c) { return e.first < c; });
  if (it->second.is_one()) return;
  const CycScalar inv = it->second.inverse();
  for (auto& e : row) e.second *= inv;
}

const CycScalar* find_entry(const SparseVector& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void back_substitute(Echelon& ech) {
  const std::size_t n = ech.rows.size();
  std::vector<std::size_t> pivot_owner(ech.cols, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < n; ++k) pivot_owner[ech.pivots[k]] = k;
  // rows_with[k]: earlier pivot rows holding pivot column of row k.
  std::vector<std::vector<std::size_t>> rows_with(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : ech.rows[i]) {
      const std::size_t owner = pivot_owner[e.first];
      if (owner != static_cast<std::size_t>(-1) && owner != i) rows_with[owner].push_back(i);
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t i : rows_with[k]) {
      const CycScalar* v = find_entry(ech.rows[i], ech.pivots[k]);
      if (v == nullptr) continue;
      const CycScalar factor = -*v;
      axpy(ech.rows[i], factor, ech.rows[k]);
    }
  }
  ech.reduced = true;
}

Echelon eliminate_dense(std::vector<SparseVector> sparse_rows, std::size_t cols,
                        EliminationMode mode) {
  std::vector<Vector> rows;
  rows.reserve(sparse_rows.size());
  for (auto& r : sparse_rows) rows.push_back(to_dense(r, cols));
  sparse_rows.clear();
  const std::size_t limit = std::min(mode.pivot_limit, cols);
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < limit && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      if (best == rows.size()) best = r;
      if (is_unit_pivot(rows[r][c])) {
        best = r;
        break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    Vector& p = rows[rank];
    if (!p[c].is_one()) {
      const CycScalar inv = p[c].inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!p[j].is_zero()) p[j] *= inv;
      }
    }
    const std::size_t first = mode.reduce ? 0 : rank + 1;
    for (std::size_t r = first; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const CycScalar f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!p[j].is_zero()) rows[r][j].sub_mul(f, p[j]);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  Echelon ech;
  ech.cols = cols;
  ech.reduced = mode.reduce;
  ech.pivots = std::move(pivots);
  for (std::size_t r = 0; r < rank; ++r) ech.rows.push_back(to_sparse(rows[r]));
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!is_zero(rows[r])) ++ech.residual_rows;
  }
  return ech;
}

}  // namespace

Echelon eliminate(std::vector<SparseVector> rows, std::size_t cols, EliminationMode mode,
                  const LinalgOptions& options) {
  std::erase_if(rows, [](const SparseVector& r) { return r.empty(); });
  const std::size_t limit = std::min(mode.pivot_limit, cols);
  std::size_t nnz = 0;
  for (const auto& r : rows) nnz += r.size();
  const double cells = static_cast<double>(rows.size()) * static_cast<double>(cols);
  if (!rows.empty() && cells <= 4.0e6 && static_cast<double>(nnz) > options.dense_threshold * cells) {
    return eliminate_dense(std::move(rows), cols, mode);
  }

  const std::size_t n = rows.size();
  std::vector<std::vector<std::size_t>> col_rows(cols);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& e : rows[r]) {
      if (e.first < limit) col_rows[e.first].push_back(r);
    }
  std::vector<char> active(n, 1);
  using Item = std::pair<std::size_t, std::size_t>;  // (nnz, row)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t r = 0; r < n; ++r) heap.emplace(rows[r].size(), r);

  Echelon ech;
  ech.cols = cols;
  std::vector<std::size_t> order;
  while (!heap.empty()) {
    const auto [k, r] = heap.top();
    heap.pop();
    if (!active[r] || rows[r].size() != k) continue;
    if (rows[r].empty()) {
      active[r] = 0;
      continue;
    }
    // Markowitz: sparsest column within the sparsest row, preferring +-1.
    std::size_t pivot = cols;
    std::size_t best_count = 0;
    bool best_unit = false;
    for (const auto& [c, v] : rows[r]) {
      if (c >= limit) break;
      const std::size_t count = col_rows[c].size();
      const bool unit = is_unit_pivot(v);
      if (pivot == cols || count < best_count || (count == best_count && unit && !best_unit)) {
        pivot = c;
        best_count = count;
        best_unit = unit;
      }
    }
    active[r] = 0;
    if (pivot == cols) {
      ++ech.residual_rows;
      continue;
    }
    normalize_row(rows[r], pivot);
    const SparseVector& prow = rows[r];
    for (std::size_t s : col_rows[pivot]) {
      if (s == r || !active[s]) continue;
      const CycScalar* v = find_entry(rows[s], pivot);
      if (v == nullptr) continue;
      const CycScalar factor = -*v;
      // Record fill-in columns before the update.
      SparseVector& target = rows[s];
      SparseVector merged;
      merged.reserve(target.size() + prow.size());
      auto it = target.begin();
      auto ip = prow.begin();
      while (it != target.end() || ip != prow.end()) {
        if (ip == prow.end() || (it != target.end() && it->first < ip->first)) {
          merged.push_back(std::move(*it++));
        } else if (it == target.end() || ip->first < it->first) {
          if (ip->first < limit) col_rows[ip->first].push_back(s);
          merged.emplace_back(ip->first, factor * ip->second);
          ++ip;
        } else {
          CycScalar x = std::move(it->second);
          x += factor * ip->second;
          if (!x.is_zero()) merged.emplace_back(it->first, std::move(x));
          ++it;
          ++ip;
        }
      }
      target = std::move(merged);
      heap.emplace(target.size(), s);
    }
    col_rows[pivot].clear();
    col_rows[pivot].shrink_to_fit();
    order.push_back(r);
    ech.pivots.push_back(pivot);
  }
  ech.rows.reserve(order.size());
  for (std::size_t r : order) ech.rows.push_back(std::move(rows[r]));
  if (mode.reduce) back_substitute(ech);
  return ech;
}

// ---------------------------------------------------------------------------
// Subspace

SparseVector Subspace::reduce(SparseVector v) const {
  if (v.empty()) return v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const CycScalar* c = find_entry(v, pivots_[k]);
    if (c == nullptr) continue;
    const CycScalar factor = -*c;
    axpy(v, factor, basis_[k]);
  }
  return v;
}

bool Subspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t lead = v.front().first;
  normalize_row(v, lead);
  for (auto& b : basis_) {
    const CycScalar* c = find_entry(b, lead);
    if (c == nullptr) continue;
    const CycScalar factor = -*c;
    axpy(b, factor, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  basis_.insert(basis_.begin() + idx, std::move(v));
  return true;
}

Subspace Subspace::span(std::span<const SparseVector> vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().first >= ambient_dim) {
      throw Error(ErrorCode::ShapeMismatch, "vector outside ambient space");
    }
    s.insert(v);
  }
  return s;
}

std::optional<Vector> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (const CycScalar* c = find_entry(v, pivots_[k])) coords[k] = *c;
  }
  return coords;
}

// ---------------------------------------------------------------------------

std::size_t rank(const SparseMatrix& m, const LinalgOptions& options) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) {
    const SparseMatrix t = m.transpose();
    return eliminate(t.row_data(), t.cols(), {}, options).rows.size();
  }
  return eliminate(m.row_data(), m.cols(), {}, options).rows.size();
}

Subspace nullspace(const SparseMatrix& m, const LinalgOptions& options) {
  Echelon ech = eliminate(m.row_data(), m.cols(), {.reduce = true}, options);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : ech.pivots) is_pivot[p] = 1;
  // column f -> list of (pivot row, value) for building null vectors
  std::vector<std::vector<std::pair<std::size_t, CycScalar>>> by_col(m.cols());
  for (std::size_t k = 0; k < ech.rows.size(); ++k)
    for (const auto& [c, v] : ech.rows[k]) {
      if (!is_pivot[c]) by_col[c].emplace_back(ech.pivots[k], v);
    }
  std::vector<SparseVector> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    v.emplace_back(f, CycScalar(1));
    for (const auto& [p, val] : by_col[f]) v.emplace_back(p, -val);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vectors.push_back(std::move(v));
  }
  return Subspace::span(vectors, m.cols());
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b, const LinalgOptions& options) {
  if (b.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: rhs length");
  std::vector<SparseVector> rows = m.row_data();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!b[i].is_zero()) rows[i].emplace_back(m.cols(), b[i]);
  }
  Echelon ech = eliminate(std::move(rows), m.cols() + 1, {.reduce = true, .pivot_limit = m.cols()},
                          options);
  if (ech.residual_rows > 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    const auto& row = ech.rows[k];
    if (!row.empty() && row.back().first == m.cols()) x[ech.pivots[k]] = row.back().second;
  }
  return x;
}

Cokernel cokernel_projector(const SparseMatrix& m, const LinalgOptions& options) {
  const SparseMatrix t = m.transpose();
  Echelon ech = eliminate(t.row_data(), m.rows(), {.reduce = true}, options);
  const std::size_t n = m.rows();
  std::vector<std::size_t> index(n, static_cast<std::size_t>(-1));
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : ech.pivots) is_pivot[p] = 1;
  std::size_t q = 0;
  std::vector<SparseVector> complement_basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    index[j] = q++;
    complement_basis.push_back(SparseVector{{j, CycScalar(1)}});
  }
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> proj;
  std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> lift;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    proj.emplace_back(index[j], j, CycScalar(1));
    lift.emplace_back(j, index[j], CycScalar(1));
  }
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    for (const auto& [f, v] : ech.rows[k]) {
      if (!is_pivot[f]) proj.emplace_back(index[f], ech.pivots[k], -v);
    }
  }
  Cokernel out;
  out.complement = Subspace::span(complement_basis, n);
  out.projection = SparseMatrix::from_triplets(q, n, std::move(proj));
  out.lift = SparseMatrix::from_triplets(n, q, std::move(lift));
  return out;
}

}  // namespace hochkit
