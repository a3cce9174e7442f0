#ifndef EQSTAB_ARITH_HPP
#define EQSTAB_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace eqstab {

using Int = mpz_class;  // arbitrary-precision signed integer
using Rat = mpq_class;  // arbitrary-precision rational, kept canonical

// Multiplies adjacent pairs until one value remains. Operand sizes stay
// balanced, unlike a left fold, which matters for products of tens of
// thousands of factors.
Int tree_product(std::vector<Int> leaves);

// Balanced product of machine-word factors. Runs of small factors are
// packed into two-limb chunks before entering the tree.
Int product_of(const std::vector<std::int64_t>& factors);

Int pow2(unsigned long bits);

// num/den reduced to lowest terms, denominator positive.
Rat make_rat(Int num, Int den);

// "num" when the denominator is 1, otherwise "num/den".
std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);

double to_double(const Int& v);
double to_double(const Rat& v);

}  // namespace eqstab

#endif
