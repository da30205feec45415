#pragma once

// Enumeration of Weil polynomials over F_q.

#include "hodgesig/weil.hpp"

#include <vector>

namespace hodgesig::io {

/// Every Weil q-polynomial of genus g, in lexicographic order of
/// (a_1, ..., a_g) where P = x^2g + a_1 x^(2g-1) + ... .
///
/// The search runs over the real polynomial h with P(x) = x^g h(x + q/x),
/// fixing its coefficients from the top. After b_k is chosen the k-th
/// derivative of h is known, and it must have all its roots in
/// [-2 sqrt q, 2 sqrt q]; for fixed higher coefficients the admissible b_k
/// form an interval, so each scan stops at the first failure after a success.
std::vector<WeilPolynomial> enumerate_weil(const Integer& q, int g, unsigned jobs = 1);

/// Products of Weil polynomials of genus at most max_factor_genus with total
/// genus g, without repetition, in the same order.
std::vector<WeilPolynomial> enumerate_split(const Integer& q, int g, int max_factor_genus,
                                            unsigned jobs = 1);

/// Strict weak order of enumerate_weil.
bool enumeration_less(const WeilPolynomial& a, const WeilPolynomial& b);

}  // namespace hodgesig::io
