#pragma once

// Density constants for shifted-square squarefree counts. Each constant is
// an Euler product: small primes 2 and 3 enter through an exact residue
// count, primes 5..P through exact rational factors, and the tail through a
// certified enclosure, so every value is an interval that provably contains
// the true constant.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/modarith.hpp"
#include "sqfree/primes.hpp"
#include "sqfree/rational.hpp"

namespace sqfree {

inline constexpr unsigned kDefaultTruncation = 1000;

// Nonempty subset of the shifts {1,2,3}.
struct ShiftSet {
    std::uint8_t mask = 0;

    static ShiftSet of(std::initializer_list<u32> shifts) {
        ShiftSet s;
        for (u32 f : shifts) {
            require_shift(f);
            s.mask |= static_cast<std::uint8_t>(1u << (f - 1));
        }
        if (s.mask == 0) throw std::invalid_argument("shift set must be nonempty");
        return s;
    }

    bool contains(u32 shift) const { return (mask >> (shift - 1)) & 1; }
    int size() const { return (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1); }

    std::vector<u32> shifts() const {
        std::vector<u32> out;
        for (u32 f = 1; f <= 3; ++f)
            if (contains(f)) out.push_back(f);
        return out;
    }

    std::string list_string() const {
        std::string out;
        for (u32 f : shifts()) {
            if (!out.empty()) out += ',';
            out += static_cast<char>('0' + f);
        }
        return out;
    }

    // phi_k for singletons, theta_j for pairs in the order (1,2),(1,3),(2,3),
    // sigma for the full set.
    std::string name() const {
        switch (mask) {
            case 0b001: return "phi_1";
            case 0b010: return "phi_2";
            case 0b100: return "phi_3";
            case 0b011: return "theta_1";
            case 0b101: return "theta_2";
            case 0b110: return "theta_3";
            case 0b111: return "sigma";
        }
        throw std::invalid_argument("shift set must be nonempty");
    }

    bool operator==(const ShiftSet&) const = default;
};

inline const std::array<ShiftSet, 7>& all_shift_sets() {
    static const std::array<ShiftSet, 7> sets = {
        ShiftSet::of({1}),    ShiftSet::of({2}),    ShiftSet::of({3}),
        ShiftSet::of({1, 2}), ShiftSet::of({1, 3}), ShiftSet::of({2, 3}),
        ShiftSet::of({1, 2, 3}),
    };
    return sets;
}

inline ShiftSet shift_set_from_name(const std::string& name) {
    for (const ShiftSet& s : all_shift_sets())
        if (s.name() == name) return s;
    throw std::invalid_argument("unknown shift set name: " + name +
                                " (expected phi_1..phi_3, theta_1..theta_3 or sigma)");
}

// One congruence n^2 + shift == 0 (mod modulus); modulus must be 1 or the
// square of a squarefree integer.
struct LambdaAssignment {
    u32 shift;
    u64 modulus;
};

// |{n in [0, prod q_i) : q_i | n^2 + shift_i for all i}| for pairwise
// coprime square moduli, assembled from per-modulus root counts (the counts
// multiply because the residues combine one-to-one by CRT).
inline u64 lambda(const std::vector<LambdaAssignment>& assignments) {
    if (assignments.empty()) throw std::invalid_argument("lambda: empty assignment list");
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        for (std::size_t j = i + 1; j < assignments.size(); ++j) {
            if (std::gcd(assignments[i].modulus, assignments[j].modulus) != 1)
                throw std::invalid_argument("lambda: moduli must be pairwise coprime");
        }
    }
    u64 count = 1;
    for (const LambdaAssignment& a : assignments) {
        require_shift(a.shift);
        u64 d = isqrt(a.modulus);
        if (d * d != a.modulus)
            throw std::invalid_argument("lambda: modulus is not a perfect square");
        count *= roots_mod_square(a.shift, d).roots.size();
    }
    return count;
}

// Direct enumeration over [0, prod q_i); the oracle lambda is checked
// against. Kept exact by refusing products that would make the scan silly.
inline u64 lambda_bruteforce(const std::vector<LambdaAssignment>& assignments) {
    if (assignments.empty()) throw std::invalid_argument("lambda: empty assignment list");
    u64 product = 1;
    for (const LambdaAssignment& a : assignments) {
        require_shift(a.shift);
        if (a.modulus == 0) throw std::invalid_argument("lambda: modulus must be positive");
        if (__builtin_mul_overflow(product, a.modulus, &product) || product > 100'000'000)
            throw std::overflow_error("lambda_bruteforce: modulus product too large to scan");
    }
    u64 count = 0;
    for (u64 n = 0; n < product; ++n) {
        bool ok = true;
        for (const LambdaAssignment& a : assignments) {
            if ((mul_mod(n, n, a.modulus) + a.shift) % a.modulus != 0) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

// |{x mod m : x^2 + shift == 0 (mod m) for some shift in the set}|.
inline u64 count_killed_bruteforce(ShiftSet set, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    std::vector<u32> shifts = set.shifts();
    u64 killed = 0;
    for (u64 x = 0; x < modulus; ++x) {
        u64 sq = mul_mod(x, x, modulus);
        for (u32 f : shifts) {
            if ((sq + f) % modulus == 0) {
                ++killed;
                break;
            }
        }
    }
    return killed;
}

// Local numerator at p > 3: the number of residues mod p^2 on which some
// shift in the set fails. Shifts 1..3 stay distinct mod p^2, so the per-shift
// root sets are disjoint and the lambda values add; the result must agree
// with |set| + sum of legendre(-shift, p), which is checked on every call.
inline u64 rho(ShiftSet set, u64 p) {
    if (p <= 3) throw std::invalid_argument("rho is defined for primes p > 3");
    if (p > kMaxSquarableD) throw std::overflow_error("rho: p^2 exceeds 64 bits");
    u64 from_lambda = 0;
    i64 from_symbols = 0;
    for (u32 f : set.shifts()) {
        from_lambda += lambda({{f, p * p}});
        from_symbols += 1 + legendre(-static_cast<i64>(f), p);
    }
    if (from_symbols < 0 || static_cast<u64>(from_symbols) != from_lambda)
        throw std::logic_error("rho: root count disagrees with character sum");
    return from_lambda;
}

// Joint density of survivors at p = 2 and p = 3. Residues mod 4 and mod 9
// are counted directly, so no quadratic-character bookkeeping is involved.
inline Rational c_constant(ShiftSet set) {
    u64 killed4 = count_killed_bruteforce(set, 4);
    u64 killed9 = count_killed_bruteforce(set, 9);
    return Rational(4 - killed4, 4) * Rational(9 - killed9, 9);
}

// Lower bound on the neglected tail prod_{p > P} (1 - rho(p)/p^2). Each
// factor is at least 1 - 6/p^2 >= (1 - 4/p^2)(1 - 4/(p+1)^2) for p >= 5, and
// distinct primes beyond P claim disjoint integer pairs, so the tail is at
// least prod_{n > P} (1 - 4/n^2), which telescopes to P(P-1)/((P+1)(P+2)).
inline Rational tail_lower_bound(unsigned truncation) {
    if (truncation < 5) throw std::invalid_argument("truncation must be at least 5");
    Rational p(truncation);
    return p * (p - 1) / ((p + 1) * (p + 2));
}

// prod_{3 < p <= P} (1 - rho(p)/p^2), exact.
inline Rational partial_product(ShiftSet set, unsigned truncation) {
    if (truncation < 5) throw std::invalid_argument("truncation must be at least 5");
    Rational partial(1);
    PrimeTable primes = primes_up_to(truncation);
    for (u64 p : primes.primes) {
        if (p <= 3) continue;
        partial *= Rational(p * p - rho(set, p), p * p);
    }
    return partial;
}

// The partial product widened by the certified tail bound.
inline Interval euler_product(ShiftSet set, unsigned truncation) {
    Rational partial = partial_product(set, truncation);
    return Interval(partial * tail_lower_bound(truncation), partial);
}

// A density constant with its full provenance: the exact small-prime factor,
// the exact truncated product, the tail enclosure, and their product.
struct DensityProfile {
    ShiftSet set;
    unsigned truncation = kDefaultTruncation;
    Rational c;
    Rational partial;
    Interval tail;
    Interval value;
};

inline DensityProfile constant(ShiftSet set, unsigned truncation = kDefaultTruncation) {
    DensityProfile profile;
    profile.set = set;
    profile.truncation = truncation;
    profile.c = c_constant(set);
    profile.partial = partial_product(set, truncation);
    profile.tail = Interval(tail_lower_bound(truncation), Rational(1));
    Rational top = profile.c * profile.partial;
    profile.value = Interval(top * profile.tail.lower, top);
    if (!(profile.value.lower > 0 && profile.value.upper < 1))
        throw std::logic_error("density constant escaped (0,1)");
    return profile;
}

inline Interval constant_value(ShiftSet set, unsigned truncation = kDefaultTruncation) {
    return constant(set, truncation).value;
}

// Enclosure of (density) * X, the main term the counts converge to.
inline Interval predicted_main_term(ShiftSet set, u64 x,
                                    unsigned truncation = kDefaultTruncation) {
    if (x == 0) return Interval(Rational(0), Rational(0));
    return constant_value(set, truncation) * Rational(x);
}

// Power-mean lower bound for the triple density: with s = phi_1 + theta_3,
// the count of n <= X with all of n^2+1, n^2+2, n^2+3 squarefree is at least
// (s^2 - s)/2 * X + o(X). The enclosure below certifies that slope.
inline Interval alpha_from(const Interval& phi1, const Interval& theta3) {
    Interval s = phi1 + theta3;
    Interval one = Interval::point(Rational(1));
    Interval half = Interval::point(Rational(1, 2));
    return s * (s - one) * half;
}

inline Interval weak_form_alpha(unsigned truncation = kDefaultTruncation) {
    return alpha_from(constant_value(ShiftSet::of({1}), truncation),
                      constant_value(ShiftSet::of({2, 3}), truncation));
}

}  // namespace sqfree
