#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace tanglelab {

// Reduced fraction p/q with q >= 0. The pair (1, 0) is the single point at
// infinity; -inf is identified with inf, as for tangle slopes.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t numerator, std::int64_t denominator = 1);

  static Fraction infinity() { return Fraction(1, 0); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Fraction operator-() const;
  Fraction reciprocal() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// Parses "p/q", "p" or "inf".
Fraction parse_fraction(const std::string& text);

// Multiplication that throws InputError on 64-bit overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// Nonnegative residue of a modulo m (m > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

}  // namespace tanglelab
