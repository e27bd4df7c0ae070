#include "nsgap/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nsgap {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Least combination of gens in each residue class mod a, by shortest-distance
// relaxation: each generator g is an edge r -> (r+g) mod a of weight g.
// Requires gcd(gens) == 1 so that every class is reachable.
std::vector<Int> least_members_mod(const std::vector<Int>& gens, Int a) {
    std::vector<Int> dist(static_cast<size_t>(a), kUnreached);
    dist[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Int r = 0; r < a; ++r) {
            if (dist[static_cast<size_t>(r)] == kUnreached) continue;
            for (Int g : gens) {
                Int nd = checked_add(dist[static_cast<size_t>(r)], g);
                Int r2 = (r + g % a) % a;
                if (nd < dist[static_cast<size_t>(r2)]) {
                    dist[static_cast<size_t>(r2)] = nd;
                    changed = true;
                }
            }
        }
    }
    return dist;
}

// rep[x] == 1 iff x is a non-negative combination of gens, for x in [0, limit].
std::vector<char> representable_upto(const std::vector<Int>& gens, Int limit) {
    std::vector<char> rep(static_cast<size_t>(limit) + 1, 0);
    rep[0] = 1;
    for (Int x = 1; x <= limit; ++x) {
        for (Int g : gens) {
            if (g <= x && rep[static_cast<size_t>(x - g)]) {
                rep[static_cast<size_t>(x)] = 1;
                break;
            }
        }
    }
    return rep;
}

} // namespace

std::vector<Int> AperySet::sorted() const {
    std::vector<Int> out = elements;
    std::sort(out.begin(), out.end());
    return out;
}

Int frobenius_from_apery(const AperySet& ap) {
    Int mx = *std::max_element(ap.elements.begin(), ap.elements.end());
    return mx - ap.relative_to;
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& gens_in) {
    if (gens_in.empty()) throw EmptyInputError();
    for (Int g : gens_in) {
        if (g < 1) throw BadParametersError("generators must be positive integers");
    }

    std::vector<Int> gens = gens_in;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw GcdNotOneError(g);

    // A generator is redundant iff it is a combination of the others; only
    // strictly smaller ones can contribute to such a combination.
    std::vector<Int> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<Int> smaller(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i));
        if (smaller.empty()) {
            minimal.push_back(gens[i]);
            continue;
        }
        auto rep = representable_upto(smaller, gens[i]);
        if (!rep[static_cast<size_t>(gens[i])]) minimal.push_back(gens[i]);
    }

    NumericalSemigroup s;
    s.minimal_generators_ = std::move(minimal);

    // Frobenius bound from the Apery set relative to the multiplicity, then
    // an exact sieve of representable integers up to that bound.
    Int a = s.minimal_generators_.front();
    std::vector<Int> dist = least_members_mod(s.minimal_generators_, a);
    Int max_apery = *std::max_element(dist.begin(), dist.end());
    s.frobenius_ = max_apery - a;

    if (s.frobenius_ >= 1) {
        Int limit = checked_add(s.frobenius_, a);
        auto rep = representable_upto(s.minimal_generators_, limit);
        for (Int x = 1; x <= s.frobenius_; ++x) {
            if (!rep[static_cast<size_t>(x)]) s.gaps_.push_back(x);
        }
    }
    return s;
}

bool NumericalSemigroup::contains(Int n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

AperySet NumericalSemigroup::apery_set(Int a) const {
    if (a <= 0 || !contains(a)) throw NotAMemberError(a);

    // Membership table over [0, frobenius] makes the per-class scans O(1)
    // per step; everything above the Frobenius number is a member.
    std::vector<char> member;
    if (frobenius_ >= 0) {
        member.assign(static_cast<size_t>(frobenius_) + 1, 1);
        for (Int gap : gaps_) member[static_cast<size_t>(gap)] = 0;
    }
    auto is_member = [&](Int n) {
        return n > frobenius_ || member[static_cast<size_t>(n)] != 0;
    };

    AperySet ap;
    ap.relative_to = a;
    ap.elements.resize(static_cast<size_t>(a));
    for (Int r = 0; r < a; ++r) {
        Int n = r;
        while (!is_member(n)) n = checked_add(n, a);
        ap.elements[static_cast<size_t>(r)] = n;
    }
    return ap;
}

} // namespace nsgap
