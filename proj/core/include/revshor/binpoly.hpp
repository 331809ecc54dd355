#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revshor {

// Polynomial over GF(2). Bit i of the coefficient vector is the coefficient of x^i.
class BinPoly {
 public:
  // degree() of the zero polynomial.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  BinPoly() = default;
  explicit BinPoly(std::uint64_t bits);

  static BinPoly monomial(int k);
  static BinPoly from_bits(const std::vector<bool>& bits);
  // Accepts an optional 0x prefix. Throws std::invalid_argument on bad digits.
  static BinPoly from_hex(std::string_view hex);

  std::string to_hex() const;
  std::vector<bool> to_bits(int width) const;

  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(int i) const;
  void set_coeff(int i, bool value);
  void flip_coeff(int i);
  int popcount() const;
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  BinPoly& operator+=(const BinPoly& other);
  friend BinPoly operator+(BinPoly a, const BinPoly& b) { return a += b; }
  friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
  friend bool operator==(const BinPoly& a, const BinPoly& b) = default;

  BinPoly shifted_up(int k) const;
  // Drops the k lowest coefficients.
  BinPoly shifted_down(int k) const;
  // x^d * p(1/x). Requires degree() <= d.
  BinPoly reversed(int d) const;

  // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<BinPoly, BinPoly> divmod(const BinPoly& divisor) const;
  BinPoly mod(const BinPoly& m) const { return divmod(m).second; }

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

}  // namespace revshor
