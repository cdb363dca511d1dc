#ifndef THETAKIT_RATIONAL_HPP_
#define THETAKIT_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace thetakit {

// An approximation factor r = num/den >= 1 in lowest terms.
class Rational {
 public:
  // Throws InvalidArgument for a zero denominator, non-positive numerator,
  // or num/den < 1.
  Rational(std::uint64_t num, std::uint64_t den);

  // Parses "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  std::string str() const;

  bool operator==(const Rational&) const = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

// Exact comparison by cross-multiplication in 128-bit arithmetic.
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

}  // namespace thetakit

#endif  // THETAKIT_RATIONAL_HPP_
