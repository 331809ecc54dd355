#include "revshor/binpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace revshor {

BinPoly::BinPoly(std::uint64_t bits) {
  if (bits != 0) words_.push_back(bits);
}

BinPoly BinPoly::monomial(int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  BinPoly p;
  p.set_coeff(k, true);
  return p;
}

BinPoly BinPoly::from_bits(const std::vector<bool>& bits) {
  BinPoly p;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) p.set_coeff(static_cast<int>(i), true);
  return p;
}

BinPoly BinPoly::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw std::invalid_argument("from_hex: empty string");
  BinPoly p;
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    char c = *it;
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument("from_hex: bad digit '" + std::string(1, c) + "'");
    for (int j = 0; j < 4; ++j)
      if ((v >> j) & 1) p.set_coeff(bit + j, true);
  }
  return p;
}

std::string BinPoly::to_hex() const {
  if (is_zero()) return "0x0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  int top = degree();
  for (int nib = top / 4; nib >= 0; --nib) {
    int v = 0;
    for (int j = 0; j < 4; ++j)
      if (coeff(nib * 4 + j)) v |= 1 << j;
    out.push_back(digits[v]);
  }
  return "0x" + out;
}

std::vector<bool> BinPoly::to_bits(int width) const {
  std::vector<bool> bits(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) bits[static_cast<std::size_t>(i)] = coeff(i);
  return bits;
}

int BinPoly::degree() const {
  if (words_.empty()) return kMinusInfinity;
  int hi = static_cast<int>(words_.size()) - 1;
  return hi * 64 + 63 - std::countl_zero(words_.back());
}

bool BinPoly::coeff(int i) const {
  if (i < 0) return false;
  std::size_t w = static_cast<std::size_t>(i) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1;
}

void BinPoly::set_coeff(int i, bool value) {
  if (i < 0) throw std::out_of_range("set_coeff: negative index");
  std::size_t w = static_cast<std::size_t>(i) / 64;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % 64);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (i % 64));
    trim();
  }
}

void BinPoly::flip_coeff(int i) { set_coeff(i, !coeff(i)); }

int BinPoly::popcount() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

BinPoly& BinPoly::operator+=(const BinPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
  BinPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t aw = a.words_[i];
    while (aw) {
      int bit = std::countr_zero(aw);
      aw &= aw - 1;
      // r ^= b << (64*i + bit)
      for (std::size_t j = 0; j < b.words_.size(); ++j) {
        std::uint64_t bw = b.words_[j];
        r.words_[i + j] ^= bw << bit;
        if (bit != 0) r.words_[i + j + 1] ^= bw >> (64 - bit);
      }
    }
  }
  r.trim();
  return r;
}

BinPoly BinPoly::shifted_up(int k) const {
  if (k < 0) return shifted_down(-k);
  if (is_zero() || k == 0) return *this;
  BinPoly r;
  std::size_t ws = static_cast<std::size_t>(k) / 64;
  int bs = k % 64;
  r.words_.assign(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i + ws] ^= words_[i] << bs;
    if (bs != 0) r.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
  }
  r.trim();
  return r;
}

BinPoly BinPoly::shifted_down(int k) const {
  if (k < 0) return shifted_up(-k);
  if (is_zero() || k == 0) return *this;
  std::size_t ws = static_cast<std::size_t>(k) / 64;
  if (ws >= words_.size()) return BinPoly{};
  int bs = k % 64;
  BinPoly r;
  r.words_.assign(words_.size() - ws, 0);
  for (std::size_t i = ws; i < words_.size(); ++i) {
    r.words_[i - ws] ^= words_[i] >> bs;
    if (bs != 0 && i + 1 < words_.size()) r.words_[i - ws] ^= words_[i + 1] << (64 - bs);
  }
  r.trim();
  return r;
}

BinPoly BinPoly::reversed(int d) const {
  if (degree() > d) throw std::invalid_argument("reversed: degree exceeds reversal width");
  BinPoly r;
  if (d < 0) return r;
  for (int i = 0; i <= d; ++i)
    if (coeff(i)) r.set_coeff(d - i, true);
  return r;
}

std::pair<BinPoly, BinPoly> BinPoly::divmod(const BinPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  BinPoly q, r = *this;
  int dd = divisor.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    int s = r.degree() - dd;
    q.set_coeff(s, true);
    r += divisor.shifted_up(s);
  }
  return {q, r};
}

void BinPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace revshor
