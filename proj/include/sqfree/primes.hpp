#pragma once

// Segmented prime generation and a smallest-prime-factor table for
// factorization-heavy checks.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sqfree/modarith.hpp"

namespace sqfree {

// Memory budget: prime tables and sieve ranges are capped here so that
// n^2 + shift always fits u64 with slack.
inline constexpr u64 kMaxPrimeLimit = u64{1} << 31;

struct PrimeTable {
    u64 limit;
    std::vector<u64> primes;  // strictly increasing, exactly the primes <= limit

    std::size_t size() const { return primes.size(); }
};

// All primes <= limit by a segmented Eratosthenes sieve; working memory is
// bounded by the segment size, not the limit.
inline PrimeTable primes_up_to(u64 limit) {
    if (limit == 0) throw std::invalid_argument("primes_up_to: limit must be positive");
    if (limit > kMaxPrimeLimit)
        throw std::overflow_error("primes_up_to: limit exceeds the configured memory budget");

    PrimeTable table{limit, {}};
    if (limit < 2) return table;

    u64 root = isqrt(limit);
    std::vector<bool> base(root + 1, true);
    std::vector<u64> base_primes;
    for (u64 i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (u64 j = i * i; j <= root; j += i) base[j] = false;
    }

    constexpr u64 kSegment = u64{1} << 20;
    std::vector<bool> seg;
    for (u64 low = 2; low <= limit; low += kSegment) {
        u64 high = std::min(limit, low + kSegment - 1);
        seg.assign(high - low + 1, true);
        for (u64 p : base_primes) {
            u64 start = std::max(p * p, (low + p - 1) / p * p);
            for (u64 j = start; j <= high; j += p) seg[j - low] = false;
        }
        for (u64 i = low; i <= high; ++i)
            if (seg[i - low]) table.primes.push_back(i);
    }
    return table;
}

// Smallest prime factor for every n <= limit; backs omega, mu^2 and divisor
// enumeration in the lemma checks.
struct SmallestFactorTable {
    std::vector<u32> spf;

    explicit SmallestFactorTable(u32 limit) : spf(static_cast<std::size_t>(limit) + 1, 0) {
        for (u64 i = 2; i <= limit; ++i) {
            if (spf[i] != 0) continue;
            for (u64 j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = static_cast<u32>(i);
        }
    }

    u32 limit() const { return static_cast<u32>(spf.size() - 1); }

    // (prime, exponent) pairs in increasing prime order.
    std::vector<std::pair<u32, u32>> factor(u32 n) const {
        std::vector<std::pair<u32, u32>> out;
        while (n > 1) {
            u32 p = spf[n];
            u32 e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
        return out;
    }

    unsigned omega(u32 n) const {
        unsigned w = 0;
        while (n > 1) {
            u32 p = spf[n];
            while (n % p == 0) n /= p;
            ++w;
        }
        return w;
    }

    bool is_squarefree(u32 n) const {
        while (n > 1) {
            u32 p = spf[n];
            n /= p;
            if (n % p == 0) return false;
        }
        return true;
    }

    std::vector<u32> divisors(u32 n) const {
        std::vector<u32> divs = {1};
        for (auto [p, e] : factor(n)) {
            std::size_t count = divs.size();
            u64 pk = 1;
            for (u32 k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < count; ++i)
                    divs.push_back(static_cast<u32>(divs[i] * pk));
            }
        }
        return divs;
    }
};

}  // namespace sqfree
