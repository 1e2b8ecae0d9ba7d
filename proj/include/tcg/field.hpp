#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <string>
#include <utility>

#include "tcg/errors.hpp"

namespace tcg {

/// Arbitrary-precision rational scalar. Thin value wrapper so that Eigen's
/// scalar-promotion machinery never probes the multiprecision backend's
/// converting constructors (those are not SFINAE-safe against matrix types).
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int x) : v_(x) {}
  Rational(long x) : v_(static_cast<long long>(x)) {}
  Rational(long long x) : v_(x) {}
  Rational(long long num, long long den) : v_(num, den) {
    if (den == 0) throw InputError("Rational: zero denominator");
  }

  /// Parses "n" or "n/d" with optional sign.
  static Rational fromString(const std::string& s);

  bool isZero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  std::string str() const { return v_.str(); }
  const Rep& rep() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.isZero()) throw InputError("Rational: division by zero");
    return Rational(Rep(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(Rep(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

inline Rational Rational::fromString(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r;
      r.v_ = Rep(boost::multiprecision::cpp_int(s));
      return r;
    }
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw InputError("Rational: zero denominator in '" + s + "'");
    Rational r;
    r.v_ = Rep(num, den);
    return r;
  } catch (const std::runtime_error&) {
    throw InputError("Rational: cannot parse '" + s + "'");
  }
}

/// Prime-field scalar F_p with a process-global modulus, NTL-style: the
/// characteristic is fixed once per computation via Fp::setModulus (or the
/// scoped guard below) and every element is stored reduced mod p.
class Fp {
 public:
  Fp() = default;
  Fp(int x) : v_(normalize(x)) {}
  Fp(long x) : v_(normalize(x)) {}
  Fp(long long x) : v_(normalize(x)) {}

  static void setModulus(std::int64_t p);
  static std::int64_t modulus() { return p_; }

  bool isZero() const { return v_ == 0; }
  std::int64_t value() const { return v_; }
  std::string str() const { return std::to_string(v_); }

  friend Fp operator+(Fp a, Fp b) { return fromReduced((a.v_ + b.v_) % p_); }
  friend Fp operator-(Fp a, Fp b) { return fromReduced((a.v_ - b.v_ + p_) % p_); }
  friend Fp operator*(Fp a, Fp b) { return fromReduced((a.v_ * b.v_) % p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return fromReduced(v_ == 0 ? 0 : p_ - v_); }
  Fp& operator+=(Fp o) { v_ = (v_ + o.v_) % p_; return *this; }
  Fp& operator-=(Fp o) { v_ = (v_ - o.v_ + p_) % p_; return *this; }
  Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % p_; return *this; }
  Fp& operator/=(Fp o) { *this = *this / o; return *this; }

  Fp inverse() const;

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Fp a);

 private:
  static Fp fromReduced(std::int64_t v) { Fp r; r.v_ = v; return r; }
  static std::int64_t normalize(std::int64_t x) { std::int64_t r = x % p_; return r < 0 ? r + p_ : r; }
  static inline std::int64_t p_ = 2;
  std::int64_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

inline bool isPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void Fp::setModulus(std::int64_t p) {
  if (!isPrime(p) || p > 97) throw InputError("Fp: modulus must be a prime <= 97, got " + std::to_string(p));
  p_ = p;
}

inline Fp Fp::inverse() const {
  if (v_ == 0) throw InputError("Fp: division by zero");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  return fromReduced(((x0 % p_) + p_) % p_);
}

/// Scoped modulus switch; restores the previous characteristic on exit.
class ScopedPrime {
 public:
  explicit ScopedPrime(std::int64_t p) : prev_(Fp::modulus()) { Fp::setModulus(p); }
  ~ScopedPrime() { Fp::setModulus(prev_); }
  ScopedPrime(const ScopedPrime&) = delete;
  ScopedPrime& operator=(const ScopedPrime&) = delete;

 private:
  std::int64_t prev_;
};

/// Runtime field selection as chosen on the command line.
struct FieldSpec {
  bool rationals = true;
  std::int64_t p = 0;  // prime when !rationals

  /// Accepts "Q" or "F<p>" (e.g. "F2", "F97").
  static FieldSpec parse(const std::string& s) {
    if (s == "Q" || s == "q") return {true, 0};
    if ((s.size() > 1) && (s[0] == 'F' || s[0] == 'f')) {
      std::int64_t p = 0;
      try {
        p = std::stoll(s.substr(1));
      } catch (...) {
        throw InputError("field: cannot parse '" + s + "'");
      }
      if (!isPrime(p) || p > 97) throw InputError("field: F_p needs a prime p <= 97, got '" + s + "'");
      return {false, p};
    }
    throw InputError("field: expected Q or F<p>, got '" + s + "'");
  }

  std::string str() const { return rationals ? "Q" : "F" + std::to_string(p); }
};

template <class Scalar>
Scalar scalarFromString(const std::string& s);

template <>
inline Rational scalarFromString<Rational>(const std::string& s) { return Rational::fromString(s); }

template <>
inline Fp scalarFromString<Fp>(const std::string& s) {
  try {
    return Fp(std::stoll(s));
  } catch (const std::exception&) {
    throw InputError("Fp: cannot parse '" + s + "'");
  }
}

template <class Scalar>
std::string scalarToString(const Scalar& s) { return s.str(); }

}  // namespace tcg

namespace Eigen {

template <>
struct NumTraits<tcg::Rational> : GenericNumTraits<tcg::Rational> {
  using Real = tcg::Rational;
  using NonInteger = tcg::Rational;
  using Literal = tcg::Rational;
  using Nested = tcg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tcg::Fp> : GenericNumTraits<tcg::Fp> {
  using Real = tcg::Fp;
  using NonInteger = tcg::Fp;
  using Literal = tcg::Fp;
  using Nested = tcg::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
