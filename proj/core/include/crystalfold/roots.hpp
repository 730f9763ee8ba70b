#pragma once

#include <map>

#include "crystalfold/cartan.hpp"
#include "crystalfold/rational.hpp"

namespace crystalfold {

/// All positive roots of a finite-type datum, in alpha-coordinates, found by
/// root-string closure. Throws std::invalid_argument on non-finite input.
std::vector<Coeffs> positive_roots(const CartanDatum& cd);

/// Kostant partition count: multisets of positive roots summing to beta.
long long kostant_count(const CartanDatum& cd, const Coeffs& beta);
long long kostant_count(const CartanDatum& cd, const std::vector<Coeffs>& roots,
                        const Coeffs& beta);

/// Weight multiplicities of the irreducible V(lambda) by the Freudenthal
/// recursion under the M-form. Keys are drops from lambda (so lambda itself
/// is the zero vector). lambda must be dominant with zero drop part.
std::map<Coeffs, long long> freudenthal(const CartanDatum& cd, const Weight& lambda);

/// dim V(lambda) by the Weyl product formula (exact).
BigInt weyl_dim(const CartanDatum& cd, const Weight& lambda);

}  // namespace crystalfold
