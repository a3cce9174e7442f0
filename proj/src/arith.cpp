#include "eqstab/arith.hpp"

#include <stdexcept>
#include <utility>

namespace eqstab {

Int tree_product(std::vector<Int> leaves) {
  if (leaves.empty()) return Int(1);
  while (leaves.size() > 1) {
    std::size_t half = (leaves.size() + 1) / 2;
    for (std::size_t i = 0; i + 1 < leaves.size(); i += 2) {
      leaves[i / 2] = leaves[i] * leaves[i + 1];
    }
    if (leaves.size() % 2 == 1) leaves[half - 1] = std::move(leaves.back());
    leaves.resize(half);
  }
  return leaves.front();
}

namespace {

Int int_from_u128(unsigned __int128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  Int lo(static_cast<unsigned long>(v));
  return (hi << 64) + lo;
}

int bit_width_u64(std::uint64_t v) { return v ? 64 - __builtin_clzll(v) : 0; }

}  // namespace

Int product_of(const std::vector<std::int64_t>& factors) {
  std::vector<Int> leaves;
  leaves.reserve(factors.size() / 4 + 1);
  unsigned __int128 acc = 1;
  int acc_bits = 0;
  bool negative = false;
  bool zero = false;
  for (std::int64_t f : factors) {
    if (f == 0) zero = true;
    if (f < 0) {
      negative = !negative;
      f = -f;
    }
    int bits = bit_width_u64(static_cast<std::uint64_t>(f));
    if (acc_bits + bits > 126) {
      leaves.push_back(int_from_u128(acc));
      acc = 1;
      acc_bits = 0;
    }
    acc *= static_cast<unsigned __int128>(static_cast<std::uint64_t>(f));
    acc_bits += bits;
  }
  if (zero) return Int(0);
  leaves.push_back(int_from_u128(acc));
  Int result = tree_product(std::move(leaves));
  if (negative) result = -result;
  return result;
}

Int pow2(unsigned long bits) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, bits);
  return v;
}

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

double to_double(const Int& v) { return v.get_d(); }

double to_double(const Rat& v) { return v.get_d(); }

}  // namespace eqstab
