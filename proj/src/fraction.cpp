#include "tanglelab/fraction.hpp"

#include <cctype>
#include <numeric>

#include "tanglelab/errors.hpp"

namespace tanglelab {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InputError("integer overflow in fraction arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InputError("integer overflow in fraction arithmetic");
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    if (numerator == 0) throw InputError("0/0 is not a fraction");
    num_ = 1;
    den_ = 0;
    return;
  }
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Fraction Fraction::operator-() const {
  if (is_infinite()) return *this;
  return Fraction(checked_mul(num_, -1), den_);
}

Fraction Fraction::reciprocal() const {
  if (num_ == 0) return infinity();
  if (is_infinite()) return Fraction(0, 1);
  return Fraction(den_, num_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.is_infinite() || b.is_infinite()) return Fraction::infinity();
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
  std::int64_t den = checked_mul(a.den_ / g, b.den_);
  return Fraction(num, den);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Fraction::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

Fraction parse_fraction(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "inf" || t == "1/0") return Fraction::infinity();
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw InputError("empty integer in fraction '" + text + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::out_of_range&) {
      throw InputError("integer overflow in fraction '" + text + "'");
    } catch (const std::invalid_argument&) {
      throw InputError("malformed fraction '" + text + "'");
    }
    if (used != s.size()) throw InputError("malformed fraction '" + text + "'");
    return v;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) return Fraction(parse_int(t), 1);
  std::int64_t p = parse_int(t.substr(0, slash));
  std::int64_t q = parse_int(t.substr(slash + 1));
  if (p == 0 && q == 0) throw InputError("0/0 is not a fraction");
  return Fraction(p, q);
}

}  // namespace tanglelab
