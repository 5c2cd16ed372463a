#include "coverlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace coverlab {

ExactRational::ExactRational(std::int64_t value) {
  mpz_class n;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(n);
}

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational::ExactRational(std::int64_t num, std::int64_t den)
    : ExactRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactRational ExactRational::pow(const ExactRational& base, int exponent) {
  if (exponent < 0) {
    if (base.value_ == 0) throw std::domain_error("ExactRational: zero to a negative power");
    return ExactRational(1) / pow(base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return ExactRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace coverlab
