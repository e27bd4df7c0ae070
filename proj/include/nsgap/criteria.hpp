#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsgap/residue.hpp"
#include "nsgap/semigroup.hpp"

namespace nsgap {

/**
 * Parameters (a, beta, delta) of an Apery set whose nonzero part is the
 * arithmetic sequence beta + delta, beta + 2*delta, ..., beta + (a-1)*delta.
 * For a >= 3 this forces gcd(a, delta) = 1, a | beta and beta >= 0; the
 * conventions for the degenerate lengths are (1, 0, 1) and (2, b-1, 1).
 */
struct ArithmeticAperyForm {
    Int a = 1;
    Int beta = 0;
    Int delta = 1;

    bool operator==(const ArithmeticAperyForm&) const = default;
};

// The two families whose Apery sets are arithmetic, plus the multiplicity-2
// specialization; parameters are valid only for the fields their tag names.
struct FamilyClassification {
    enum class Tag { EmbDim2, GenArithMED, ArithMED, Mult2, Other };

    Tag tag = Tag::Other;
    Int a = 0; // EmbDim2 / GenArithMED / ArithMED
    Int b = 0; // EmbDim2 / Mult2
    Int h = 0; // GenArithMED
    Int d = 0; // GenArithMED / ArithMED

    bool operator==(const FamilyClassification&) const = default;
};

std::string to_string(FamilyClassification::Tag tag);

enum class EDRoute { Direct, Apery, Polynomial, ClosedForm };

std::string to_string(EDRoute route);

// Verdict for "is the gap set evenly distributed mod m", together with how
// it was decided and enough detail to audit a negative or closed-form answer.
struct EDReport {
    Int modulus = 1;
    bool evenly_distributed = false;
    EDRoute route = EDRoute::Direct;

    // On a false direct verdict: lexicographically least residue pair with
    // unequal gap counts. On a false Apery verdict: least residue pair where
    // the Apery histogram exceeds / falls short of the interval histogram.
    std::optional<std::pair<Int, Int>> unequal_residues;

    // Closed-form route: every case of the arithmetic-Apery criterion that
    // holds mod m (m == 1 fires all four).
    std::vector<int> fired_cases;

    // Apery route: the base element the criterion selected.
    std::optional<Int> apery_base;
};

// The set of moduli m for which the gap set is evenly distributed. A gapless
// semigroup qualifies for every m, signalled by all_moduli instead of an
// infinite listing.
struct ModulusSet {
    bool all_moduli = false;
    std::vector<Int> moduli; // ascending; unused when all_moduli

    bool operator==(const ModulusSet&) const = default;
};

// Direct counting of gap residues.
EDReport ed_direct(const NumericalSemigroup& s, Int m);

// Apery criterion: picks the least nonzero member a with gcd(a, m) = 1 and
// tests Ap(S;a) against [0, a-1] as multisets mod m. Agrees with ed_direct
// on every input.
EDReport ed_apery_criterion(const NumericalSemigroup& s, Int m);

// All qualifying moduli; candidates are the divisors of the genus.
ModulusSet ed_all_moduli(const NumericalSemigroup& s);

// Recognizes an Apery set whose nonzero part is arithmetic, returning its
// (a, beta, delta) parameters; nullopt when the differences are not constant.
std::optional<ArithmeticAperyForm> detect_arithmetic_apery(const NumericalSemigroup& s, Int a);

// Even distribution for an arithmetic Apery form: gcd(a*delta, m) = 1 and at
// least one of four congruences (recorded in fired_cases). a = 1 is evenly
// distributed for every m; a = 2 reduces to gcd(2, m) = 1 and
// beta + delta = 1 mod m.
EDReport ed_main_theorem(const ArithmeticAperyForm& form, Int m);

// Routes a semigroup to the sharpest closed form that applies.
FamilyClassification classify_family(const NumericalSemigroup& s);

// Closed forms. Each validates its parameter constraints and throws
// BadParametersError on violation; m must always be >= 1.
bool ed_embdim2(Int a, Int b, Int m);          // S = <a,b>, 1 < a < b, gcd(a,b) = 1
bool ed_mult2(Int b, Int m);                   // S = <2,b>, b odd, b >= 3
bool ed_mult3(Int b, Int c, Int m);            // S = <3,b,c>, 3 < b < c < 2b
bool ed_gen_arith(Int a, Int h, Int d, Int m); // S = <a, ha+d, ..., ha+(a-1)d>
bool ed_arith(Int a, Int d, Int m);            // h = 1 specialization

} // namespace nsgap
