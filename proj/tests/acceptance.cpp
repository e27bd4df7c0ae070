// Acceptance suite: end-to-end checks of the worked examples, the exhaustive
// closed-form sweeps and the structural identities, printed one line per
// criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsgap/criteria.hpp"
#include "nsgap/verify.hpp"
#include "test_support.hpp"

using namespace nsgap;
using nsgap::testing::draw;
using nsgap::testing::random_coprime_gens;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
    return NumericalSemigroup::from_generators(std::vector<Int>(gens));
}

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool criterion_1(Checker& c) {
    auto s = make({5, 7});
    c.expect(s.gaps() == std::vector<Int>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23}, "gap set");
    c.expect(s.genus() == 12, "genus");
    c.expect(ed_all_moduli(s) == ModulusSet{false, {1, 2, 3, 4, 6}}, "qualifying moduli");
    return c.ok;
}

bool criterion_2(Checker& c) {
    auto s = make({3, 5});
    c.expect(s.gaps() == std::vector<Int>{1, 2, 4, 7}, "gap set");
    c.expect(s.apery_set(3).sorted() == std::vector<Int>{0, 5, 10}, "Ap(S;3)");
    c.expect(s.apery_set(5).sorted() == std::vector<Int>{0, 3, 6, 9, 12}, "Ap(S;5)");
    c.expect(s.apery_set(14).sorted() ==
                 std::vector<Int>{0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 18, 21},
             "Ap(S;14)");
    for (Int a : {Int{3}, Int{5}, Int{14}}) {
        c.expect(multiset_congruent(s.apery_set(a).elements, interval(0, a - 1), 4),
                 "congruence mod 4 at a=" + std::to_string(a));
    }
    return c.ok;
}

bool criterion_3(Checker& c) {
    auto s = make({4, 5, 11});
    c.expect(s.gaps() == std::vector<Int>{1, 2, 3, 6, 7}, "gap set");
    c.expect(s.genus() == 5, "genus");
    c.expect(s.apery_set(5).sorted() == std::vector<Int>{0, 4, 8, 11, 12}, "Ap(S;5)");
    c.expect(multiset_congruent(s.apery_set(5).elements, interval(0, 4), 5),
             "Apery congruence mod 5");
    c.expect(!ed_direct(s, 5).evenly_distributed, "not evenly distributed mod 5");
    return c.ok;
}

bool criterion_4(Checker& c) {
    SweepReport r = sweep_embdim2(40);
    c.expect(r.mismatches.empty(),
             r.mismatches.empty() ? "" : r.mismatches.front().parameters);
    return c.ok;
}

bool criterion_5(Checker& c) {
    SweepReport r = sweep_gen_arith(12, 10);
    c.expect(r.mismatches.empty(),
             r.mismatches.empty() ? "" : r.mismatches.front().parameters);
    return c.ok;
}

bool criterion_6(Checker& c) {
    for (Int a = 2; a <= 40; ++a) {
        for (Int b = a + 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            bool balanced = ed_embdim2(a, b, 2);
            bool both_odd = (a % 2 == 1) && (b % 2 == 1);
            c.expect(balanced == both_odd,
                     "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    return c.ok;
}

bool criterion_7(Checker& c) {
    SweepReport r = sweep_equivalences(200, 42);
    c.expect(r.mismatches.empty(),
             r.mismatches.empty() ? "" : r.mismatches.front().parameters);
    return c.ok;
}

bool criterion_8(Checker& c) {
    std::mt19937_64 rng(20240814);
    for (int t = 0; t < 100; ++t) {
        auto s = NumericalSemigroup::from_generators(random_coprime_gens(rng, 2, 5, 60));
        Int a = draw(rng, 1, s.frobenius() + 20);
        while (!s.contains(a) || a < 1) a = draw(rng, 1, s.frobenius() + 20);
        std::ostringstream params;
        params << "trial=" << t << " a=" << a;
        c.expect(check_tuenter_identity(s, a), params.str());
    }
    return c.ok;
}

bool criterion_9(Checker& c) {
    for (Int b = 4; b <= 60; ++b) {
        for (Int c2 = b + 1; c2 < 2 * b && c2 <= 60; ++c2) {
            if (b % 3 == 0 || c2 % 3 == 0 || emod(b, 3) == emod(c2, 3)) continue;
            Int h = (2 * b - c2) / 3;
            Int d = c2 - b;
            for (Int m = 1; m <= 30; ++m) {
                c.expect(ed_mult3(b, c2, m) == ed_gen_arith(3, h, d, m),
                         "b=" + std::to_string(b) + " c=" + std::to_string(c2) +
                             " m=" + std::to_string(m));
            }
        }
    }
    return c.ok;
}

bool criterion_10(Checker& c) {
    c.expect(ed_all_moduli(make({1})).all_moduli, "<1> qualifies for every modulus");

    for (Int b = 3; b <= 41; b += 2) {
        auto s = make({2, b});
        Int genus = (b - 1) / 2;
        c.expect(s.genus() == genus, "genus of <2," + std::to_string(b) + ">");

        std::vector<Int> want;
        for (Int d : divisors_of(genus)) {
            if (d % 2 == 1) want.push_back(d);
        }
        c.expect(ed_all_moduli(s).moduli == want,
                 "odd divisors of " + std::to_string(genus) + " for b=" + std::to_string(b));

        ArithmeticAperyForm form{2, b - 1, 1};
        for (Int m = 1; m <= genus + 2; ++m) {
            bool direct = ed_direct(s, m).evenly_distributed;
            std::string at = "b=" + std::to_string(b) + " m=" + std::to_string(m);
            c.expect(ed_mult2(b, m) == direct, "multiplicity-2 form at " + at);
            c.expect(ed_main_theorem(form, m).evenly_distributed == direct,
                     "arithmetic-Apery form at " + at);
        }
    }
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* description;
        std::function<bool(Checker&)> run;
    };

    const std::vector<Criterion> criteria = {
        {1, "worked example <5,7>: gaps, genus, qualifying moduli {1,2,3,4,6}", criterion_1},
        {2, "worked example <3,5>: gaps, Apery sets, congruences mod 4", criterion_2},
        {3, "non-example <4,5,11>: congruent at base 5 yet not evenly distributed mod 5",
         criterion_3},
        {4, "two-generator closed form vs oracle, all coprime pairs up to 40", criterion_4},
        {5, "generalized arithmetic closed forms vs oracle, a <= 12, h,d <= 10", criterion_5},
        {6, "mod-2 balance iff both generators odd, pairs up to 40", criterion_6},
        {7, "route equivalences, divisor closure, congruences, genus obstruction (200 trials)",
         criterion_7},
        {8, "exact Apery polynomial identity on 100 random (S, a) pairs", criterion_8},
        {9, "multiplicity-3 form matches the generalized arithmetic form, b < c <= 60",
         criterion_9},
        {10, "degenerate lengths: <1> and <2,b> against both closed forms", criterion_10},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        bool ok = false;
        std::string error;
        try {
            ok = criterion.run(checker);
        } catch (const std::exception& e) {
            error = e.what();
        }
        if (ok) {
            std::printf("[%2d] PASS %s\n", criterion.id, criterion.description);
        } else {
            ++failures;
            std::string why = !error.empty() ? error : checker.detail;
            std::printf("[%2d] FAIL %s%s%s\n", criterion.id, criterion.description,
                        why.empty() ? "" : " -- ", why.c_str());
        }
    }

    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    return 1;
}
