#include "nsgap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "nsgap/criteria.hpp"
#include "nsgap/residue.hpp"

namespace nsgap {

namespace {

// Naive ground truth, independent of the library's Apery-bounded sieve:
// representability is decided for every integer up to
// (max generator)^2 + max generator, a safe Frobenius over-bound.
std::vector<Int> naive_gap_set(const std::vector<Int>& gens) {
    Int gmax = *std::max_element(gens.begin(), gens.end());
    Int bound = checked_add(checked_mul(gmax, gmax), gmax);
    std::vector<char> reachable(static_cast<size_t>(bound) + 1, 0);
    reachable[0] = 1;
    for (Int n = 1; n <= bound; ++n) {
        for (Int g : gens) {
            if (g <= n && reachable[static_cast<size_t>(n - g)]) {
                reachable[static_cast<size_t>(n)] = 1;
                break;
            }
        }
    }
    std::vector<Int> gaps;
    for (Int n = 1; n <= bound; ++n) {
        if (!reachable[static_cast<size_t>(n)]) gaps.push_back(n);
    }
    return gaps;
}

bool counts_balanced(const std::vector<Int>& values, Int m) {
    std::vector<long long> counts(static_cast<size_t>(m), 0);
    for (Int v : values) counts[static_cast<size_t>(emod(v, m))] += 1;
    return std::all_of(counts.begin(), counts.end(),
                       [&](long long c) { return c == counts[0]; });
}

class ElapsedTimer {
public:
    std::int64_t ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Recorder {
    SweepReport& report;

    void check(bool ok, const std::string& parameters, const std::string& expected,
               const std::string& got) {
        report.instances_checked += 1;
        if (!ok) report.mismatches.push_back({parameters, expected, got});
    }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

bool oracle_ed(const NumericalSemigroup& s, Int m) {
    if (m < 1) throw BadParametersError("modulus must be a positive integer");
    return counts_balanced(naive_gap_set(s.minimal_generators()), m);
}

bool check_tuenter_identity(const NumericalSemigroup& s, Int a) {
    if (a <= 0 || !s.contains(a)) throw NotAMemberError(a);

    std::map<Int, Int> lhs; // exponent -> coefficient of (x^a - 1) * gap polynomial
    for (Int n : s.gaps()) {
        lhs[checked_add(n, a)] += 1;
        lhs[n] -= 1;
    }
    std::map<Int, Int> rhs;
    for (Int w : s.apery_set(a).elements) rhs[w] += 1;
    for (Int n = 0; n < a; ++n) rhs[n] -= 1;

    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    return lhs == rhs;
}

SweepReport sweep_embdim2(Int max_b) {
    if (max_b < 3) throw BadParametersError("sweep_embdim2 requires max_b >= 3");
    ElapsedTimer timer;
    SweepReport report;
    report.sweep_name = "embdim2";
    Recorder rec{report};

    for (Int a = 2; a < max_b; ++a) {
        for (Int b = a + 1; b <= max_b; ++b) {
            if (std::gcd(a, b) != 1) continue;
            NumericalSemigroup s = NumericalSemigroup::from_generators({a, b});

            std::ostringstream base;
            base << "a=" << a << " b=" << b;
            Int genus_formula = (a - 1) * (b - 1) / 2;
            rec.check(s.genus() == genus_formula, base.str() + " genus",
                      std::to_string(genus_formula), std::to_string(s.genus()));

            std::vector<Int> oracle_gaps = naive_gap_set(s.minimal_generators());
            for (Int m = 1; m <= s.genus() + 2; ++m) {
                bool oracle = counts_balanced(oracle_gaps, m);
                bool closed = ed_embdim2(a, b, m);
                rec.check(closed == oracle, base.str() + " m=" + std::to_string(m),
                          bool_str(oracle), bool_str(closed));
            }
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

SweepReport sweep_gen_arith(Int max_a, Int max_hd) {
    if (max_a < 3) throw BadParametersError("sweep_gen_arith requires max_a >= 3");
    if (max_hd < 1) throw BadParametersError("sweep_gen_arith requires max_hd >= 1");
    ElapsedTimer timer;
    SweepReport report;
    report.sweep_name = "gen_arith";
    Recorder rec{report};

    for (Int a = 3; a <= max_a; ++a) {
        for (Int h = 1; h <= max_hd; ++h) {
            for (Int d = 1; d <= max_hd; ++d) {
                if (std::gcd(a, d) != 1) continue;

                std::vector<Int> gens{a};
                for (Int i = 1; i < a; ++i) {
                    gens.push_back(checked_add(checked_mul(h, a), checked_mul(i, d)));
                }
                NumericalSemigroup s = NumericalSemigroup::from_generators(gens);

                std::ostringstream base;
                base << "a=" << a << " h=" << h << " d=" << d;
                Int genus_formula = (a - 1) * (2 * h + d - 1) / 2;
                rec.check(s.genus() == genus_formula, base.str() + " genus",
                          std::to_string(genus_formula), std::to_string(s.genus()));

                auto form = detect_arithmetic_apery(s, a);
                bool recovered = form && form->beta == h * a && form->delta == d;
                rec.check(recovered, base.str() + " detected form",
                          "beta=" + std::to_string(h * a) + " delta=" + std::to_string(d),
                          form ? "beta=" + std::to_string(form->beta) +
                                     " delta=" + std::to_string(form->delta)
                               : "not arithmetic");

                std::vector<Int> oracle_gaps = naive_gap_set(s.minimal_generators());
                for (Int m = 1; m <= s.genus() + 2; ++m) {
                    std::string params = base.str() + " m=" + std::to_string(m);
                    bool oracle = counts_balanced(oracle_gaps, m);
                    bool closed = ed_gen_arith(a, h, d, m);
                    rec.check(closed == oracle, params + " closed form",
                              bool_str(oracle), bool_str(closed));
                    if (form) {
                        bool via_form = ed_main_theorem(*form, m).evenly_distributed;
                        rec.check(via_form == oracle, params + " arithmetic-Apery criterion",
                                  bool_str(oracle), bool_str(via_form));
                    }
                    if (a == 3) {
                        bool via_mult3 = ed_mult3(3 * h + d, 3 * h + 2 * d, m);
                        rec.check(via_mult3 == oracle, params + " multiplicity-3 form",
                                  bool_str(oracle), bool_str(via_mult3));
                    }
                }
            }
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

SweepReport sweep_equivalences(long long trials, std::uint64_t seed) {
    if (trials < 1) throw BadParametersError("sweep_equivalences requires trials >= 1");
    ElapsedTimer timer;
    SweepReport report;
    report.sweep_name = "equivalences";
    Recorder rec{report};

    std::mt19937_64 rng(seed);
    // Plain modulo: draw sequences must be identical across standard libraries.
    auto draw = [&](Int lo, Int hi) {
        return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    for (long long trial = 0; trial < trials; ++trial) {
        std::vector<Int> gens;
        Int overall_gcd;
        do {
            gens.clear();
            Int count = draw(3, 5);
            overall_gcd = 0;
            for (Int i = 0; i < count; ++i) {
                gens.push_back(draw(2, 60));
                overall_gcd = std::gcd(overall_gcd, gens.back());
            }
        } while (overall_gcd != 1);

        NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
        std::ostringstream base;
        base << "trial=" << trial << " gens=";
        for (size_t i = 0; i < gens.size(); ++i) base << (i ? "," : "") << gens[i];

        // Divisor closure of the qualifying-modulus set.
        ModulusSet ed_set = ed_all_moduli(s);
        for (Int m : ed_set.moduli) {
            for (Int d : divisors_of(m)) {
                bool present = std::binary_search(ed_set.moduli.begin(), ed_set.moduli.end(), d);
                rec.check(present, base.str() + " divisor-closure m=" + std::to_string(m) +
                                       " d=" + std::to_string(d),
                          "divisor qualifies", "divisor missing");
            }
        }

        for (Int m = 1; m <= s.genus() + 2; ++m) {
            std::string params = base.str() + " m=" + std::to_string(m);
            bool direct = ed_direct(s, m).evenly_distributed;
            bool via_apery = ed_apery_criterion(s, m).evenly_distributed;
            bool via_poly = ed_via_polynomial(s.gaps(), m);
            rec.check(direct == via_apery, params + " apery route", bool_str(direct),
                      bool_str(via_apery));
            rec.check(direct == via_poly, params + " polynomial route", bool_str(direct),
                      bool_str(via_poly));

            if (direct) {
                // Even distribution forces the Apery congruence for every
                // base, coprime to m or not.
                Int hi = checked_add(s.frobenius(), m + 1);
                for (Int a = 1; a <= hi; ++a) {
                    if (!s.contains(a)) continue;
                    bool congruent =
                        multiset_congruent(s.apery_set(a).elements, interval(0, a - 1), m);
                    rec.check(congruent, params + " apery-congruence a=" + std::to_string(a),
                              "congruent to [0,a-1]", "not congruent");
                }
            }
        }

        if (s.genus() > 0 && s.contains(s.genus())) {
            bool at_genus = ed_direct(s, s.genus()).evenly_distributed;
            rec.check(!at_genus, base.str() + " genus-obstruction g=" + std::to_string(s.genus()),
                      "false", bool_str(at_genus));
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

} // namespace nsgap
