#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsgap {

// All quantities are exact 64-bit signed integers. Arithmetic that could
// leave the representable range goes through the checked_* helpers below,
// which throw std::overflow_error instead of wrapping.
using Int = std::int64_t;

// Base class for input-domain violations. The CLI maps these to exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EmptyInputError : public DomainError {
public:
    EmptyInputError() : DomainError("generator list is empty") {}
};

class GcdNotOneError : public DomainError {
public:
    explicit GcdNotOneError(Int gcd_value)
        : DomainError("gcd of generators is " + std::to_string(gcd_value) + ", not 1"),
          gcd(gcd_value) {}
    Int gcd;
};

class NotAMemberError : public DomainError {
public:
    explicit NotAMemberError(Int value)
        : DomainError(std::to_string(value) + " is not a nonzero element of the semigroup"),
          value(value) {}
    Int value;
};

class NegativeExponentError : public DomainError {
public:
    explicit NegativeExponentError(Int entry)
        : DomainError("multiset entry " + std::to_string(entry) +
                      " cannot be used as a polynomial exponent"),
          entry(entry) {}
    Int entry;
};

class BadParametersError : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidFormError : public DomainError {
public:
    using DomainError::DomainError;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Canonical residue in [0, m); works for negative x.
inline Int emod(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

inline bool congruent_mod(Int x, Int y, Int m) { return emod(x, m) == emod(y, m); }

// Positive divisors of n >= 1, ascending.
inline std::vector<Int> divisors_of(Int n) {
    std::vector<Int> small, large;
    for (Int i = 1; i <= n / i; ++i) {
        if (n % i != 0) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace nsgap
