#pragma once

#include "isozono/number.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace isozono::io {

/// Line-oriented reader for the plain-text formats. Blank lines and '#'
/// comments are skipped; every error names the 1-based source line.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  /// Next non-empty line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no_) + ": " + what);
  }

  Rational rational(const std::string& token) const {
    try {
      return parse_rational(token);
    } catch (const Error&) {
      fail("bad number '" + token + "'");
    }
  }

  Integer integer(const std::string& token) const {
    Rational q = rational(token);
    if (!is_integral(q)) fail("expected an integer, got '" + token + "'");
    return q.get_num();
  }

  std::int64_t int64(const std::string& token) const {
    Integer z = integer(token);
    if (!z.fits_slong_p()) fail("integer '" + token + "' out of range");
    return z.get_si();
  }

  std::size_t count(const std::string& token) const {
    std::int64_t v = int64(token);
    if (v < 0) fail("expected a non-negative count, got '" + token + "'");
    return static_cast<std::size_t>(v);
  }

 private:
  std::istringstream in_;
  std::size_t line_no_ = 0;
};

template <class Range>
std::string join(const Range& xs) {
  std::string out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += ' ';
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      out += format_rational(x);
    } else if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Integer>) {
      out += x.get_str();
    } else {
      out += std::to_string(x);
    }
  }
  return out;
}

}  // namespace isozono::io
