#include "hochkit/cyclotomic.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

#include "hochkit/error.hpp"

namespace hochkit {

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IntPoly = std::vector<Integer>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

std::unique_ptr<CyclotomicField> build_field(unsigned n) {
  auto field = std::make_unique<CyclotomicField>();
  field->order = n;
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_field(d).minpoly);
  }
  field->minpoly = std::move(poly);
  field->degree = static_cast<unsigned>(field->minpoly.size() - 1);

  const unsigned deg = field->degree;
  std::vector<Rational> cur(deg, 0);
  cur[0] = 1;
  field->power.reserve(n);
  for (unsigned e = 0; e < n; ++e) {
    field->power.push_back(cur);
    // multiply by x
    Rational top = cur[deg - 1];
    for (unsigned i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < deg; ++i) cur[i] -= top * Rational(field->minpoly[i]);
    }
  }
  return field;
}

constexpr unsigned kFastFields = 1024;

}  // namespace

const CyclotomicField& cyclotomic_field(unsigned order) {
  if (order == 0) throw Error(ErrorCode::ShapeMismatch, "cyclotomic order must be positive");
  static std::array<std::atomic<const CyclotomicField*>, kFastFields> fast{};
  if (order < kFastFields) {
    if (const auto* f = fast[order].load(std::memory_order_acquire)) return *f;
  }
  static std::recursive_mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto it = fields.find(order);
  if (it == fields.end()) it = fields.emplace(order, build_field(order)).first;
  if (order < kFastFields) fast[order].store(it->second.get(), std::memory_order_release);
  return *it->second;
}

// ---------------------------------------------------------------------------

unsigned CycScalar::common_order(unsigned a, unsigned b) { return std::lcm(a, b); }

CycScalar CycScalar::root_of_unity(unsigned n, long k) {
  const auto& field = cyclotomic_field(n);
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  const auto& p = field.power[static_cast<std::size_t>(e)];
  CycScalar out(n, Coeffs(p.begin(), p.end()));
  out.normalize();
  return out;
}

CycScalar CycScalar::from_coeffs(unsigned order, std::span<const Rational> coeffs) {
  const auto& field = cyclotomic_field(order);
  if (coeffs.size() != field.degree) {
    throw Error(ErrorCode::ShapeMismatch, "Q(zeta_" + std::to_string(order) + ") needs " +
                                              std::to_string(field.degree) + " coordinates");
  }
  CycScalar out(order, Coeffs(coeffs.begin(), coeffs.end()));
  for (auto& c : out.coeffs_) c.canonicalize();
  out.normalize();
  return out;
}

void CycScalar::normalize() {
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return;
  }
  coeffs_.resize(1);
  order_ = 1;
}

CycScalar CycScalar::lifted(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) {
    throw Error(ErrorCode::ShapeMismatch, "cannot lift order " + std::to_string(order_) +
                                              " into order " + std::to_string(m));
  }
  const auto& field = cyclotomic_field(m);
  Coeffs out(field.degree, Rational(0));
  if (order_ == 1) {
    out[0] = coeffs_[0];
    return CycScalar(m, std::move(out));
  }
  const unsigned step = m / order_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const auto& p = field.power[(j * step) % m];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) != 0) out[i] += coeffs_[j] * p[i];
    }
  }
  return CycScalar(m, std::move(out));
}

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  if (order_ == 1 && other.order_ == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  if (other.order_ == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  const unsigned m = common_order(order_, other.order_);
  if (order_ != m) *this = lifted(m);
  if (other.order_ == m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  } else {
    const CycScalar o = other.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  }
  normalize();
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) {
  if (other.order_ == 1) {
    coeffs_[0] -= other.coeffs_[0];
    return *this;
  }
  return *this += -other;
}

CycScalar& CycScalar::operator*=(const CycScalar& other) {
  if (other.order_ == 1) {
    if (sgn(other.coeffs_[0]) == 0) {
      *this = CycScalar();
      return *this;
    }
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    const Rational s = coeffs_[0];
    if (sgn(s) == 0) return *this;
    *this = other;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const unsigned m = common_order(order_, other.order_);
  const CycScalar a = order_ == m ? *this : lifted(m);
  const CycScalar b = other.order_ == m ? other : other.lifted(m);
  const auto& field = cyclotomic_field(m);
  const std::size_t deg = field.degree;
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  for (std::size_t d = prod.size(); d-- > deg;) {
    if (sgn(prod[d]) == 0) continue;
    const Rational t = prod[d];
    for (std::size_t i = 0; i < deg; ++i) {
      if (field.minpoly[i] != 0) prod[d - deg + i] -= t * Rational(field.minpoly[i]);
    }
    prod[d] = 0;
  }
  order_ = m;
  coeffs_.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
  normalize();
  return *this;
}

void CycScalar::sub_mul(const CycScalar& factor, const CycScalar& other) {
  if (order_ == 1 && factor.order_ == 1 && other.order_ == 1) {
    coeffs_[0] -= factor.coeffs_[0] * other.coeffs_[0];
    return;
  }
  *this -= factor * other;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) {
    return std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
  }
  // Normalized rationals are stored at order 1, so a rational never equals an
  // order > 1 value.
  if (a.order_ == 1 || b.order_ == 1) return false;
  const unsigned m = CycScalar::common_order(a.order_, b.order_);
  const CycScalar la = a.lifted(m);
  const CycScalar lb = b.lifted(m);
  return std::equal(la.coeffs_.begin(), la.coeffs_.end(), lb.coeffs_.begin(), lb.coeffs_.end());
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

void poly_divmod(RatPoly num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd || (num.size() == 1 && sgn(num[0]) == 0)) {
    quot = RatPoly{Rational(0)};
    rem = num;
    return;
  }
  quot.assign(num.size() - dd, Rational(0));
  const Rational lead = den.back();
  for (std::size_t i = num.size(); i-- > dd;) {
    if (sgn(num[i]) == 0) continue;
    const Rational c = num[i] / lead;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  num.resize(std::max<std::size_t>(dd, 1));
  trim(num);
  trim(quot);
  rem = num;
}

}  // namespace

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (order_ == 1) return CycScalar(Rational(1) / coeffs_[0]);
  const auto& field = cyclotomic_field(order_);
  RatPoly r0(field.minpoly.begin(), field.minpoly.end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0{Rational(0)};
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = r1[0];
  RatPoly q, rem;
  RatPoly mod(field.minpoly.begin(), field.minpoly.end());
  poly_divmod(s1, mod, q, rem);
  Coeffs out(field.degree, Rational(0));
  for (std::size_t i = 0; i < rem.size() && i < out.size(); ++i) out[i] = rem[i] / c;
  CycScalar result(order_, std::move(out));
  result.normalize();
  return result;
}

CycScalar CycScalar::conj() const {
  if (order_ == 1) return *this;
  const auto& field = cyclotomic_field(order_);
  Coeffs out(field.degree, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const auto& p = field.power[(order_ - j) % order_];
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) != 0) out[i] += coeffs_[j] * p[i];
    }
  }
  CycScalar result(order_, std::move(out));
  result.normalize();
  return result;
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    sum += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (j == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z" + std::to_string(order_) + "^" + std::to_string(j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CycScalar& value) { return os << value.to_string(); }

}  // namespace hochkit
