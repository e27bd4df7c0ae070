#pragma once

#include <vector>

#include "nsgap/common.hpp"

namespace nsgap {

// A finite integer multiset: order-insensitive, duplicates significant.
using IntMultiset = std::vector<Int>;

// The inclusive integer interval [lo, hi] as a multiset; empty when lo > hi.
IntMultiset interval(Int lo, Int hi);

// counts[r] is the number of entries congruent to r mod modulus.
struct ResidueHistogram {
    Int modulus = 1;
    std::vector<Int> counts;

    bool operator==(const ResidueHistogram&) const = default;
};

/**
 * Exact integer arithmetic in Z[x]/(x^m - 1): a class is stored as its
 * canonical representative of degree < m, a dense coefficient vector of
 * length m. Addition, subtraction and multiplication reduce exponents mod m
 * and are overflow-checked.
 */
struct CycPoly {
    Int modulus = 1;
    std::vector<Int> coeffs;

    bool operator==(const CycPoly&) const = default;
    bool is_zero() const;
};

CycPoly cyc_zero(Int m);
CycPoly cyc_x_minus_one(Int m); // the class of x - 1 (the zero class when m == 1)
CycPoly operator+(const CycPoly& a, const CycPoly& b);
CycPoly operator-(const CycPoly& a, const CycPoly& b);
CycPoly operator*(const CycPoly& a, const CycPoly& b);

// Residue histogram of a multiset; negative entries reduce to [0, m-1].
ResidueHistogram residue_counts(const IntMultiset& a, Int m);

// True iff a and b have equal residue histograms mod m (equivalently, some
// residue-preserving bijection exists between them).
bool multiset_congruent(const IntMultiset& a, const IntMultiset& b, Int m);

// True iff every residue class mod m holds the same number of entries.
bool is_evenly_distributed(const IntMultiset& a, Int m);

// The generating polynomial sum of x^e over entries e, reduced mod x^m - 1.
// Entries must be non-negative (NegativeExponentError otherwise); the
// resulting coefficients equal the residue histogram.
CycPoly reduce_exponents(const IntMultiset& a, Int m);

// 1 + x + ... + x^(n-1) reduced mod x^m - 1.
CycPoly cyc_c_n(Int n, Int m);

// Even distribution via the polynomial criterion: the multiset is evenly
// distributed mod m iff (x - 1) times its reduced generating polynomial is
// zero in Z[x]/(x^m - 1). Agrees with is_evenly_distributed on every input.
bool ed_via_polynomial(const IntMultiset& a, Int m);

} // namespace nsgap
