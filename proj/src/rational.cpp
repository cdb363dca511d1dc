#include "thetakit/rational.hpp"

#include <charconv>
#include <numeric>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

using Wide = unsigned __int128;

std::uint64_t parse_unsigned(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw InvalidArgument("rational with zero denominator");
  if (num_ == 0) throw InvalidArgument("rational factor must be positive");
  const std::uint64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  if (num_ < den_)
    throw InvalidArgument("approximation factor " + str() + " is below 1");
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_unsigned(text, text), 1);
  return Rational(parse_unsigned(text.substr(0, slash), text),
                  parse_unsigned(text.substr(slash + 1), text));
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide{a.num()} * b.den() < Wide{b.num()} * a.den();
}

bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

}  // namespace thetakit
