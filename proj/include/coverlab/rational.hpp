#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace coverlab {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every value that feeds an inequality of the toolkit (densities, Mertens
/// products, both sides of the index bounds) is carried in this type, so no
/// comparison ever depends on rounding.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit ExactRational(const BigInt& value);
  /// Throws std::domain_error when den == 0.
  ExactRational(const BigInt& num, const BigInt& den);
  ExactRational(std::int64_t num, std::int64_t den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  /// Integer power, exponent may be negative for nonzero values.
  static ExactRational pow(const ExactRational& base, int exponent);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

inline BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return r;
}

/// Throws std::overflow_error when v does not fit.
std::uint64_t to_u64(const BigInt& v);

}  // namespace coverlab
