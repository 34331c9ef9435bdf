#pragma once

// Modular arithmetic kernel: Legendre symbols, Tonelli-Shanks square roots,
// Hensel lifting to prime squares, and CRT assembly of root sets of
// x^2 + shift == 0 (mod d^2) for squarefree d.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqfree {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// d^2 must fit in 64 bits.
inline constexpr u64 kMaxSquarableD = 0xFFFFFFFFull;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// Normalize a signed value into [0, m).
inline u64 norm_mod(i64 a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    u64 mag = static_cast<u64>(-(a + 1)) + 1;  // |a| without overflow at INT64_MIN
    u64 r = mag % m;
    return r == 0 ? 0 : m - r;
}

inline u64 mod_pow(i64 base, u64 exponent, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    u64 b = norm_mod(base, modulus);
    u64 result = 1 % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;  // floor(sqrt(2^64-1)) = 2^32-1
    while (r > 0 && r * r > n) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

// Legendre symbol (a/p) over an odd prime p via Euler's criterion.
// Primality of p is the caller's contract; even p, p < 3, and composites
// exposed by the criterion are rejected.
inline int legendre(i64 a, u64 p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre: p must be an odd prime");
    u64 e = mod_pow(a, (p - 1) / 2, p);
    if (e == 0) return 0;
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::invalid_argument("legendre: p fails Euler's criterion (composite?)");
}

// Square roots of a mod an odd prime p, via Tonelli-Shanks.
// Returns {} if a is a nonresidue, {0} if p | a, and the sorted pair
// {r, p-r} otherwise. The nonresidue search is a deterministic increment
// from 2 so results are bit-identical across runs.
inline std::vector<u64> sqrt_mod_p(i64 a, u64 p) {
    int sym = legendre(a, p);
    if (sym == 0) return {0};
    if (sym == -1) return {};

    u64 am = norm_mod(a, p);
    u64 r;
    if (p % 4 == 3) {
        r = mod_pow(static_cast<i64>(am), (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        unsigned s = 0;
        while (q % 2 == 0) { q >>= 1; ++s; }
        u64 z = 2;
        while (legendre(static_cast<i64>(z), p) != -1) ++z;
        u64 m = s;
        u64 c = mod_pow(static_cast<i64>(z), q, p);
        u64 t = mod_pow(static_cast<i64>(am), q, p);
        r = mod_pow(static_cast<i64>(am), (q + 1) / 2, p);
        while (t != 1) {
            u64 t2 = t;
            u64 i = 0;
            while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
    }
    if (mul_mod(r, r, p) != am)
        throw std::invalid_argument("sqrt_mod_p: p fails root verification (composite?)");
    u64 other = p - r;
    return {std::min(r, other), std::max(r, other)};
}

// Lift the root r of x^2 == a (mod p) to the unique s == r (mod p) with
// s^2 == a (mod p^2). Requires p odd prime and p not dividing a (the
// nonsingular case); the singular case is the caller's problem.
inline u64 hensel_lift(u64 r, i64 a, u64 p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("hensel_lift: p must be an odd prime");
    if (p > kMaxSquarableD)
        throw std::overflow_error("hensel_lift: p^2 exceeds 64-bit range");
    r %= p;
    u64 ap = norm_mod(a, p);
    if (ap == 0)
        throw std::invalid_argument("hensel_lift: singular case p | a");
    if (mul_mod(r, r, p) != ap)
        throw std::invalid_argument("hensel_lift: r is not a root of a mod p");
    u64 p2 = p * p;
    u64 a2 = norm_mod(a, p2);
    u64 diff = (a2 + p2 - mul_mod(r, r, p2)) % p2;  // == a - r^2 (mod p^2), divisible by p
    u64 q = (diff / p) % p;
    u64 inv2r = mod_pow(static_cast<i64>(mul_mod(2, r, p)), p - 2, p);
    u64 t = mul_mod(q, inv2r, p);
    return r + p * t;
}

// Residue class r (mod m), kept normalized.
struct ResidueClass {
    u64 modulus;
    u64 residue;

    ResidueClass(u64 m, u64 r) : modulus(m), residue() {
        if (m == 0) throw std::invalid_argument("ResidueClass: modulus must be positive");
        residue = r % m;
    }
};

// Modular inverse via extended gcd; requires gcd(a, m) = 1.
inline u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

// Combine two residue classes with coprime moduli into one mod m1*m2.
inline ResidueClass crt_combine(const ResidueClass& a, const ResidueClass& b) {
    if (std::gcd(a.modulus, b.modulus) != 1)
        throw std::invalid_argument("crt_combine: moduli must be coprime");
    u64 m;
    if (__builtin_mul_overflow(a.modulus, b.modulus, &m))
        throw std::overflow_error("crt_combine: modulus product exceeds 64-bit range");
    u64 diff = (b.residue + b.modulus - a.residue % b.modulus) % b.modulus;
    u64 t = mul_mod(diff, inv_mod(a.modulus % b.modulus, b.modulus), b.modulus);
    return ResidueClass(m, a.residue + a.modulus * t);
}

// Distinct prime factors of d by trial division; throws if d is not squarefree.
inline std::vector<u64> squarefree_factorization(u64 d) {
    if (d == 0) throw std::invalid_argument("squarefree_factorization: d must be positive");
    std::vector<u64> factors;
    u64 rest = d;
    for (u64 f = 2; f * f <= rest; f = (f == 2 ? 3 : f + 2)) {
        if (rest % f != 0) continue;
        rest /= f;
        if (rest % f == 0)
            throw std::invalid_argument("squarefree_factorization: d is not squarefree");
        factors.push_back(f);
    }
    if (rest > 1) factors.push_back(rest);
    return factors;
}

// Solutions of x^2 + shift == 0 (mod d^2) for squarefree d.
struct RootSet {
    u32 shift;
    u64 d;
    std::vector<u64> roots;  // sorted, in [0, d^2)

    u64 modulus() const { return d * d; }
};

inline void require_shift(u32 shift) {
    if (shift < 1 || shift > 3)
        throw std::invalid_argument("shift must be 1, 2 or 3");
}

// Roots of x^2 + shift == 0 (mod p^2) for a prime p. p = 2 is handled by
// brute force over four residues; (p, shift) = (3, 3) is the singular case
// with no roots (x^2 == 6 mod 9 is unsolvable); the rest go through
// Tonelli-Shanks plus a Hensel lift.
inline std::vector<u64> roots_mod_prime_square(u32 shift, u64 p) {
    require_shift(shift);
    if (p == 2) {
        std::vector<u64> out;
        for (u64 x = 0; x < 4; ++x)
            if ((x * x + shift) % 4 == 0) out.push_back(x);
        return out;
    }
    if (p == 3 && shift % 3 == 0) return {};
    std::vector<u64> base = sqrt_mod_p(-static_cast<i64>(shift), p);
    std::vector<u64> out;
    out.reserve(base.size());
    for (u64 r : base) out.push_back(hensel_lift(r, -static_cast<i64>(shift), p));
    std::sort(out.begin(), out.end());
    return out;
}

// Full root set mod d^2 for squarefree d, assembled per prime by CRT.
// d is factorized by trial division, so non-squarefree input is always
// detected and rejected.
inline RootSet roots_mod_square(u32 shift, u64 d) {
    require_shift(shift);
    if (d == 0) throw std::invalid_argument("roots_mod_square: d must be positive");
    if (d > kMaxSquarableD)
        throw std::overflow_error("roots_mod_square: d^2 exceeds 64-bit range");
    if (d == 1) return RootSet{shift, 1, {0}};

    std::vector<u64> primes = squarefree_factorization(d);
    std::vector<ResidueClass> classes = {ResidueClass(1, 0)};
    for (u64 p : primes) {
        std::vector<u64> proots = roots_mod_prime_square(shift, p);
        std::vector<ResidueClass> next;
        next.reserve(classes.size() * proots.size());
        for (const ResidueClass& c : classes)
            for (u64 r : proots)
                next.push_back(crt_combine(c, ResidueClass(p * p, r)));
        classes = std::move(next);
        if (classes.empty()) break;
    }

    RootSet set{shift, d, {}};
    set.roots.reserve(classes.size());
    for (const ResidueClass& c : classes) set.roots.push_back(c.residue);
    std::sort(set.roots.begin(), set.roots.end());

    u64 d2 = d * d;
    for (u64 r : set.roots)
        if ((mul_mod(r, r, d2) + shift) % d2 != 0)
            throw std::logic_error("roots_mod_square: root verification failed");
    return set;
}

}  // namespace sqfree
