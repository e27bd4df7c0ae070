#include "nsgap/criteria.hpp"

#include <algorithm>
#include <numeric>

namespace nsgap {

namespace {

void require_modulus(Int m) {
    if (m < 1) throw BadParametersError("modulus must be a positive integer");
}

} // namespace

std::string to_string(FamilyClassification::Tag tag) {
    switch (tag) {
        case FamilyClassification::Tag::EmbDim2: return "emb_dim_2";
        case FamilyClassification::Tag::GenArithMED: return "gen_arith_med";
        case FamilyClassification::Tag::ArithMED: return "arith_med";
        case FamilyClassification::Tag::Mult2: return "mult_2";
        case FamilyClassification::Tag::Other: return "other";
    }
    return "other";
}

std::string to_string(EDRoute route) {
    switch (route) {
        case EDRoute::Direct: return "direct";
        case EDRoute::Apery: return "apery";
        case EDRoute::Polynomial: return "polynomial";
        case EDRoute::ClosedForm: return "closed_form";
    }
    return "direct";
}

EDReport ed_direct(const NumericalSemigroup& s, Int m) {
    require_modulus(m);
    EDReport report;
    report.modulus = m;
    report.route = EDRoute::Direct;

    ResidueHistogram h = residue_counts(s.gaps(), m);
    report.evenly_distributed = std::all_of(h.counts.begin(), h.counts.end(),
                                            [&](Int c) { return c == h.counts[0]; });
    if (!report.evenly_distributed) {
        for (Int r1 = 0; r1 < m && !report.unequal_residues; ++r1) {
            for (Int r2 = r1 + 1; r2 < m; ++r2) {
                if (h.counts[static_cast<size_t>(r1)] != h.counts[static_cast<size_t>(r2)]) {
                    report.unequal_residues = {r1, r2};
                    break;
                }
            }
        }
    }
    return report;
}

EDReport ed_apery_criterion(const NumericalSemigroup& s, Int m) {
    require_modulus(m);

    // Least nonzero member coprime to m; one exists among the m consecutive
    // members above the Frobenius number.
    Int a = s.multiplicity();
    while (!(s.contains(a) && std::gcd(a, m) == 1)) a = checked_add(a, 1);

    EDReport report;
    report.modulus = m;
    report.route = EDRoute::Apery;
    report.apery_base = a;

    ResidueHistogram got = residue_counts(s.apery_set(a).elements, m);
    ResidueHistogram want = residue_counts(interval(0, a - 1), m);
    report.evenly_distributed = (got == want);
    if (!report.evenly_distributed) {
        Int over = -1, under = -1;
        for (Int r = 0; r < m; ++r) {
            Int diff = got.counts[static_cast<size_t>(r)] - want.counts[static_cast<size_t>(r)];
            if (diff > 0 && over < 0) over = r;
            if (diff < 0 && under < 0) under = r;
        }
        report.unequal_residues = {over, under};
    }
    return report;
}

ModulusSet ed_all_moduli(const NumericalSemigroup& s) {
    ModulusSet out;
    if (s.genus() == 0) {
        out.all_moduli = true;
        return out;
    }
    for (Int m : divisors_of(s.genus())) {
        if (ed_direct(s, m).evenly_distributed) out.moduli.push_back(m);
    }
    return out;
}

std::optional<ArithmeticAperyForm> detect_arithmetic_apery(const NumericalSemigroup& s, Int a) {
    if (a <= 0 || !s.contains(a)) throw NotAMemberError(a);
    if (a == 1) return ArithmeticAperyForm{1, 0, 1};

    AperySet ap = s.apery_set(a);
    if (a == 2) return ArithmeticAperyForm{2, ap.elements[1] - 1, 1};

    std::vector<Int> nonzero = ap.sorted();
    nonzero.erase(nonzero.begin()); // drops the 0 in class 0
    Int delta = nonzero[1] - nonzero[0];
    for (size_t i = 2; i < nonzero.size(); ++i) {
        if (nonzero[i] - nonzero[i - 1] != delta) return std::nullopt;
    }

    ArithmeticAperyForm form{a, nonzero[0] - delta, delta};
    if (std::gcd(form.a, form.delta) != 1 || form.beta < 0 || form.beta % form.a != 0) {
        throw std::logic_error("arithmetic Apery sequence violates its structural invariants");
    }
    return form;
}

EDReport ed_main_theorem(const ArithmeticAperyForm& form, Int m) {
    require_modulus(m);
    if (form.a < 1 || form.delta < 1 || form.beta < 0) {
        throw InvalidFormError("arithmetic Apery form requires a >= 1, delta >= 1, beta >= 0");
    }
    if (form.a >= 3 &&
        (std::gcd(form.a, form.delta) != 1 || form.beta % form.a != 0)) {
        throw InvalidFormError("for a >= 3 the form requires gcd(a, delta) = 1 and a | beta");
    }

    EDReport report;
    report.modulus = m;
    report.route = EDRoute::ClosedForm;

    bool case1 = congruent_mod(form.a, 1, m);
    bool case2 = congruent_mod(form.a, 2, m) &&
                 congruent_mod(checked_add(form.beta, form.delta), 1, m);
    bool case3 = congruent_mod(form.delta, 1, m) && congruent_mod(form.beta, 0, m);
    bool case4 = congruent_mod(form.delta, -1, m) && congruent_mod(form.beta, form.a, m);
    if (case1) report.fired_cases.push_back(1);
    if (case2) report.fired_cases.push_back(2);
    if (case3) report.fired_cases.push_back(3);
    if (case4) report.fired_cases.push_back(4);

    if (form.a == 1) {
        // Empty gap set: evenly distributed for every m.
        report.evenly_distributed = true;
    } else if (form.a == 2) {
        // Only beta + delta (the odd generator) matters, whatever the split.
        report.evenly_distributed = (std::gcd<Int>(2, m) == 1) && case2;
    } else {
        report.evenly_distributed =
            std::gcd(checked_mul(form.a, form.delta), m) == 1 &&
            (case1 || case2 || case3 || case4);
    }
    return report;
}

FamilyClassification classify_family(const NumericalSemigroup& s) {
    const std::vector<Int>& gens = s.minimal_generators();
    FamilyClassification out;

    if (s.multiplicity() == 2) {
        out.tag = FamilyClassification::Tag::Mult2;
        out.b = gens[1];
        return out;
    }
    if (s.embedding_dimension() == 2) {
        out.tag = FamilyClassification::Tag::EmbDim2;
        out.a = gens[0];
        out.b = gens[1];
        return out;
    }
    if (s.is_maximal_embedding_dimension() && s.multiplicity() >= 3) {
        // Candidate parameters from the two smallest non-multiplicity
        // generators, then exact reconstruction of the whole listing.
        Int a = gens[0];
        Int d = gens[2] - gens[1];
        Int beta = gens[1] - d;
        if (d >= 1 && beta >= a && beta % a == 0 && std::gcd(a, d) == 1) {
            Int h = beta / a;
            bool match = true;
            for (Int i = 1; i < a && match; ++i) {
                Int expected = checked_add(checked_mul(h, a), checked_mul(i, d));
                match = (gens[static_cast<size_t>(i)] == expected);
            }
            if (match) {
                if (h == 1) {
                    out.tag = FamilyClassification::Tag::ArithMED;
                } else {
                    out.tag = FamilyClassification::Tag::GenArithMED;
                    out.h = h;
                }
                out.a = a;
                out.d = d;
                return out;
            }
        }
    }
    return out; // Other
}

bool ed_embdim2(Int a, Int b, Int m) {
    require_modulus(m);
    if (!(1 < a && a < b && std::gcd(a, b) == 1)) {
        throw BadParametersError("ed_embdim2 requires 1 < a < b with gcd(a, b) = 1");
    }
    return std::gcd(checked_mul(a, b), m) == 1 &&
           (congruent_mod(a, 1, m) || congruent_mod(b, 1, m));
}

bool ed_mult2(Int b, Int m) {
    require_modulus(m);
    if (!(b >= 3 && b % 2 == 1)) {
        throw BadParametersError("ed_mult2 requires an odd b >= 3");
    }
    return m % 2 == 1 && ((b - 1) / 2) % m == 0;
}

bool ed_mult3(Int b, Int c, Int m) {
    require_modulus(m);
    if (!(3 < b && b < c && c < checked_mul(2, b) && b % 3 != 0 && c % 3 != 0 &&
          emod(b, 3) != emod(c, 3))) {
        throw BadParametersError(
            "ed_mult3 requires 3 < b < c < 2b with gcd(3, bc) = 1 and b != c mod 3");
    }
    return std::gcd<Int>(3, m) == 1 &&
           (std::gcd(b - 1, c - 2) % m == 0 || std::gcd(b - 2, c - 1) % m == 0);
}

bool ed_gen_arith(Int a, Int h, Int d, Int m) {
    require_modulus(m);
    if (!(a >= 3 && h >= 1 && d >= 1 && std::gcd(a, d) == 1)) {
        throw BadParametersError("ed_gen_arith requires a >= 3, h >= 1, d >= 1, gcd(a, d) = 1");
    }
    if (std::gcd(checked_mul(a, d), m) != 1) return false;
    return congruent_mod(a, 1, m) ||
           (congruent_mod(a, 2, m) &&
            congruent_mod(checked_add(checked_mul(2, h), d), 1, m)) ||
           (congruent_mod(d, 1, m) && congruent_mod(h, 0, m)) ||
           (congruent_mod(d, -1, m) && congruent_mod(h, 1, m));
}

bool ed_arith(Int a, Int d, Int m) {
    require_modulus(m);
    if (!(a >= 3 && d >= 1 && std::gcd(a, d) == 1)) {
        throw BadParametersError("ed_arith requires a >= 3, d >= 1, gcd(a, d) = 1");
    }
    return std::gcd(checked_mul(a, d), m) == 1 &&
           (congruent_mod(a, 1, m) || congruent_mod(d, -1, m));
}

} // namespace nsgap
