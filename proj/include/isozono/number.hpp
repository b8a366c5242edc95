#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isozono {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point or direction of R^n with exact rational coordinates.
using RationalVector = std::vector<Rational>;

/// An integer vector of arbitrary precision (facet normals, generators).
using IntVector = std::vector<Integer>;

enum class ErrorKind {
  DimensionMismatch,
  DimensionDeficient,
  ZeroVector,
  NonPrimitive,
  AntipodalPair,
  DuplicateGenerator,
  RankDeficient,
  InvalidArgument,
  EmptySection,
  Unbounded,
  NonInteger,
  BudgetExceeded,
  InternalConsistency,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::DimensionDeficient: return "dimension deficient";
    case ErrorKind::ZeroVector: return "zero vector";
    case ErrorKind::NonPrimitive: return "non-primitive vector";
    case ErrorKind::AntipodalPair: return "antipodal pair";
    case ErrorKind::DuplicateGenerator: return "duplicate generator";
    case ErrorKind::RankDeficient: return "rank deficient";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::EmptySection: return "empty section";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::NonInteger: return "non-integer data";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::InternalConsistency: return "internal consistency";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

/// Every contract violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(where) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// ---------------------------------------------------------------------------
// Conversions

inline Rational to_rational(const Integer& z) { return Rational(z); }

inline RationalVector to_rational(std::span<const Integer> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline IntVector to_integer(std::span<const std::int64_t> v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<std::int64_t> to_int64(std::span<const Integer> v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer out of int64 range");
    out.push_back(x.get_si());
  }
  return out;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

/// "p/q", or "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, 1);
  q /= den;
  return q;
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Vector arithmetic, templated over the coordinate type.

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  require_same_dim(a.size(), b.size(), "dot");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  return dot(std::span<const T>(a), std::span<const T>(b));
}

inline Rational dot(const IntVector& a, const RationalVector& x) {
  require_same_dim(a.size(), x.size(), "dot");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  require_same_dim(a.size(), b.size(), "add");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

template <class T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
  require_same_dim(a.size(), b.size(), "sub");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <class T, class S>
std::vector<T> scale(const std::vector<T>& a, const S& s) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

template <class T>
std::vector<T> negate(const std::vector<T>& a) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

template <class T>
bool is_zero(const std::vector<T>& a) {
  return std::all_of(a.begin(), a.end(), [](const T& x) { return x == 0; });
}

template <class T>
T norm_squared(const std::vector<T>& a) {
  return dot(a, a);
}

// ---------------------------------------------------------------------------
// Primitive integer vectors

inline Integer content(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

inline bool is_primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline IntVector make_primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

/// Positive multiple of a rational vector with coprime integer entries.
inline IntVector primitive_multiple(const RationalVector& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return make_primitive(std::move(out));
}

/// Index of the first nonzero entry, or size() for the zero vector.
template <class T>
std::size_t leading_index(const std::vector<T>& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  return i;
}

/// Sign-normalizes so the first nonzero entry is positive.
template <class T>
std::vector<T> sign_canonical(std::vector<T> v) {
  auto i = leading_index(v);
  if (i < v.size() && v[i] < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

template <class T>
struct LexLess {
  bool operator()(const std::vector<T>& a, const std::vector<T>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <class T>
void sort_unique(std::vector<std::vector<T>>& rows) {
  std::sort(rows.begin(), rows.end(), LexLess<T>{});
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : v) {
      h ^= std::hash<long>{}(x.fits_slong_p() ? x.get_si() : static_cast<long>(mpz_size(x.get_mpz_t())));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace isozono
