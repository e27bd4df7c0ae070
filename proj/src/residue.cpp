#include "nsgap/residue.hpp"

#include <algorithm>

namespace nsgap {

namespace {

void require_modulus(Int m) {
    if (m < 1) throw BadParametersError("modulus must be a positive integer");
}

void require_same_modulus(const CycPoly& a, const CycPoly& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("CycPoly modulus mismatch");
}

} // namespace

IntMultiset interval(Int lo, Int hi) {
    IntMultiset out;
    if (lo > hi) return out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    for (Int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

bool CycPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c == 0; });
}

CycPoly cyc_zero(Int m) {
    require_modulus(m);
    return CycPoly{m, std::vector<Int>(static_cast<size_t>(m), 0)};
}

CycPoly cyc_x_minus_one(Int m) {
    CycPoly p = cyc_zero(m);
    p.coeffs[static_cast<size_t>(1 % m)] += 1;
    p.coeffs[0] -= 1;
    return p;
}

CycPoly operator+(const CycPoly& a, const CycPoly& b) {
    require_same_modulus(a, b);
    CycPoly out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = checked_add(out.coeffs[i], b.coeffs[i]);
    return out;
}

CycPoly operator-(const CycPoly& a, const CycPoly& b) {
    require_same_modulus(a, b);
    CycPoly out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = checked_sub(out.coeffs[i], b.coeffs[i]);
    return out;
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    require_same_modulus(a, b);
    Int m = a.modulus;
    CycPoly out = cyc_zero(m);
    for (Int i = 0; i < m; ++i) {
        if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
        for (Int j = 0; j < m; ++j) {
            if (b.coeffs[static_cast<size_t>(j)] == 0) continue;
            size_t k = static_cast<size_t>((i + j) % m);
            out.coeffs[k] = checked_add(
                out.coeffs[k],
                checked_mul(a.coeffs[static_cast<size_t>(i)], b.coeffs[static_cast<size_t>(j)]));
        }
    }
    return out;
}

ResidueHistogram residue_counts(const IntMultiset& a, Int m) {
    require_modulus(m);
    ResidueHistogram h{m, std::vector<Int>(static_cast<size_t>(m), 0)};
    for (Int e : a) h.counts[static_cast<size_t>(emod(e, m))] += 1;
    return h;
}

bool multiset_congruent(const IntMultiset& a, const IntMultiset& b, Int m) {
    return residue_counts(a, m) == residue_counts(b, m);
}

bool is_evenly_distributed(const IntMultiset& a, Int m) {
    ResidueHistogram h = residue_counts(a, m);
    return std::all_of(h.counts.begin(), h.counts.end(),
                       [&](Int c) { return c == h.counts[0]; });
}

CycPoly reduce_exponents(const IntMultiset& a, Int m) {
    require_modulus(m);
    CycPoly p = cyc_zero(m);
    for (Int e : a) {
        if (e < 0) throw NegativeExponentError(e);
        p.coeffs[static_cast<size_t>(e % m)] += 1;
    }
    return p;
}

CycPoly cyc_c_n(Int n, Int m) {
    if (n < 1) throw BadParametersError("n must be a positive integer");
    CycPoly p = cyc_zero(m);
    Int full = n / m, rest = n % m;
    for (Int r = 0; r < m; ++r) p.coeffs[static_cast<size_t>(r)] = full + (r < rest ? 1 : 0);
    return p;
}

bool ed_via_polynomial(const IntMultiset& a, Int m) {
    return (cyc_x_minus_one(m) * reduce_exponents(a, m)).is_zero();
}

} // namespace nsgap
