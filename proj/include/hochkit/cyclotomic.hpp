#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace hochkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Euler totient.
unsigned totient(unsigned n);

/// Cyclotomic polynomial data for Q(zeta_n) = Q[x]/Phi_n(x). Instances are
/// created once per order and live for the whole process.
struct CyclotomicField {
  unsigned order = 1;
  unsigned degree = 1;               // phi(order)
  std::vector<Integer> minpoly;      // Phi_n, low to high, monic, size degree + 1
  std::vector<std::vector<Rational>> power;  // x^e mod Phi_n for e in [0, order)
};

const CyclotomicField& cyclotomic_field(unsigned order);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
///
/// Values whose irrational coordinates vanish are stored at order 1, so
/// rational arithmetic never touches polynomial reduction. Equality across
/// different orders compares after lifting to the lcm.
class CycScalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  CycScalar() : coeffs_(1) {}
  CycScalar(long value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  CycScalar(int value) : coeffs_{Rational(value)} {}   // NOLINT(google-explicit-constructor)
  CycScalar(Rational value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }  // NOLINT

  /// zeta_n^k for any integer k.
  static CycScalar root_of_unity(unsigned n, long k = 1);
  /// Coordinates in the power basis of Q(zeta_order); size must be phi(order).
  static CycScalar from_coeffs(unsigned order, std::span<const Rational> coeffs);

  unsigned order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const noexcept { return order_ == 1 && sgn(coeffs_[0]) == 0; }
  bool is_one() const noexcept { return order_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const noexcept { return order_ == 1; }
  /// Only meaningful when is_rational().
  const Rational& rational() const noexcept { return coeffs_[0]; }

  /// Same value expressed in Q(zeta_m); order() must divide m.
  CycScalar lifted(unsigned m) const;

  CycScalar inverse() const;
  /// Complex conjugation zeta -> zeta^{-1}.
  CycScalar conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  CycScalar& operator/=(const CycScalar& other) { return *this *= other.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// this -= factor * other, without a temporary in the rational case.
  void sub_mul(const CycScalar& factor, const CycScalar& other);

 private:
  CycScalar(unsigned order, Coeffs coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void normalize();
  static unsigned common_order(unsigned a, unsigned b);

  unsigned order_ = 1;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& value);

inline CycScalar cyc_add(const CycScalar& a, const CycScalar& b) { return a + b; }
inline CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }
inline CycScalar cyc_inv(const CycScalar& a) { return a.inverse(); }
inline CycScalar cyc_conj(const CycScalar& a) { return a.conj(); }

/// Parses the scalar text syntax: rationals `p/q`, roots `z{n}^{k}` (bare
/// `z{n}` means k = 1), `+ - *` and parentheses.
CycScalar parse_scalar(std::string_view text);

/// Parses `[s, s, ...]`.
std::vector<CycScalar> parse_scalar_list(std::string_view text);

/// Parses `[[s, ...], [s, ...], ...]` into rows.
std::vector<std::vector<CycScalar>> parse_scalar_rows(std::string_view text);

}  // namespace hochkit
