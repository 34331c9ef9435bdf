#pragma once

// Shifted-square squarefree sieve: for each prime p, cross off n with
// n^2 + shift == 0 (mod p^2), producing bit masks and the counts of n <= X
// with n^2+1, n^2+2, n^2+3 squarefree (singly, pairwise and jointly).

#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sqfree/modarith.hpp"
#include "sqfree/primes.hpp"

namespace sqfree {

inline constexpr u64 kMaxSieveX = u64{1} << 31;
inline constexpr u64 kDefaultSegmentLength = u64{1} << 22;

struct SieveOptions {
    u64 segment_length = kDefaultSegmentLength;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Bit i set <=> (start+i)^2 + shift is squarefree.
struct SquarefreeMask {
    u32 shift;
    u64 start;
    u64 length;
    std::vector<u64> bits;

    bool test(u64 i) const { return (bits[i >> 6] >> (i & 63)) & 1; }

    u64 count() const {
        u64 total = 0;
        for (u64 w : bits) total += static_cast<u64>(std::popcount(w));
        return total;
    }
};

// Primes with their roots mod p^2, shared read-only across segments.
// Root counts are 0 or 2 for every (shift, p) pair here.
struct ShiftRootTable {
    struct Entry {
        u64 p2;
        u64 root[2];
        u32 nroots;
    };
    u32 shift;
    u64 prime_limit;
    std::vector<Entry> entries;
};

inline ShiftRootTable build_root_table(u32 shift, const PrimeTable& table) {
    require_shift(shift);
    ShiftRootTable out{shift, table.limit, {}};
    out.entries.reserve(table.primes.size());
    for (u64 p : table.primes) {
        std::vector<u64> roots = roots_mod_prime_square(shift, p);
        if (roots.empty()) continue;
        ShiftRootTable::Entry e{p * p, {0, 0}, static_cast<u32>(roots.size())};
        for (std::size_t i = 0; i < roots.size(); ++i) e.root[i] = roots[i];
        out.entries.push_back(e);
    }
    return out;
}

inline void check_sieve_range(u64 start, u64 length) {
    if (start == 0) throw std::invalid_argument("sieve range must start at n >= 1");
    u64 end;
    if (__builtin_add_overflow(start, length, &end) || end - 1 > kMaxSieveX)
        throw std::overflow_error("sieve range exceeds the supported 2^31 bound");
}

namespace detail {

// Clear bits of n in [start, start+length) with n == root (mod p^2).
inline void mark_roots(const ShiftRootTable& table, u64 start, u64 length,
                       std::vector<u64>& bits) {
    if (length == 0) return;
    u64 last = start + length - 1;
    for (const ShiftRootTable::Entry& e : table.entries) {
        u64 rem = start % e.p2;
        for (u32 k = 0; k < e.nroots; ++k) {
            u64 r = e.root[k];
            // n <= 2^31 and p^2 < 2^62, so the stride never wraps u64.
            for (u64 n = start + (r >= rem ? r - rem : e.p2 - rem + r); n <= last;
                 n += e.p2) {
                u64 i = n - start;
                bits[i >> 6] &= ~(u64{1} << (i & 63));
            }
        }
    }
}

inline std::vector<u64> fresh_bits(u64 length) {
    std::vector<u64> bits((length + 63) / 64, ~u64{0});
    if (length % 64 != 0 && !bits.empty())
        bits.back() = (u64{1} << (length % 64)) - 1;
    return bits;
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace detail

// Mask for n in [start, start+length). Sieving primes up to start+length
// suffice: for n >= 2, p^2 | n^2+shift forces p <= n, and the one
// perfect-square case (n=1, shift=3) is covered by p = 2.
inline SquarefreeMask squarefree_mask(u32 shift, u64 start, u64 length) {
    require_shift(shift);
    check_sieve_range(start, length);
    SquarefreeMask mask{shift, start, length, {}};
    if (length == 0) return mask;
    mask.bits = detail::fresh_bits(length);
    PrimeTable primes = primes_up_to(start + length);
    ShiftRootTable table = build_root_table(shift, primes);
    detail::mark_roots(table, start, length, mask.bits);
    return mask;
}

// Counts of n <= X with n^2+k squarefree for each requested shift, for each
// pair of shifts, and for all three at once. Pair index: (1,2),(1,3),(2,3).
struct CountReport {
    u64 x = 0;
    u64 singles[3] = {0, 0, 0};
    u64 pairs[3] = {0, 0, 0};
    u64 triple = 0;
};

namespace detail {

template <typename Fn>
void for_each_segment(u64 x, const SieveOptions& opts, Fn&& fn) {
    u64 seg = opts.segment_length == 0 ? kDefaultSegmentLength : opts.segment_length;
    u64 nsegs = (x + seg - 1) / seg;
    unsigned threads = resolve_threads(opts.threads);
    if (threads <= 1 || nsegs <= 1) {
        for (u64 s = 0; s < nsegs; ++s) {
            u64 start = 1 + s * seg;
            fn(start, std::min(seg, x - start + 1));
        }
        return;
    }
    std::atomic<u64> next{0};
    auto worker = [&] {
        for (u64 s = next.fetch_add(1); s < nsegs; s = next.fetch_add(1)) {
            u64 start = 1 + s * seg;
            fn(start, std::min(seg, x - start + 1));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

}  // namespace detail

// Full report from three masks per segment; pair and triple counts come from
// word-wise ANDs. Result merging is plain addition, so the totals are
// deterministic under any segment scheduling.
inline CountReport count_triple(u64 x, const SieveOptions& opts = {}) {
    if (x == 0) throw std::invalid_argument("count_triple: X must be positive");
    check_sieve_range(1, x);

    PrimeTable primes = primes_up_to(x + 1);
    ShiftRootTable tables[3] = {
        build_root_table(1, primes),
        build_root_table(2, primes),
        build_root_table(3, primes),
    };

    std::atomic<u64> singles[3] = {0, 0, 0};
    std::atomic<u64> pairs[3] = {0, 0, 0};
    std::atomic<u64> triple{0};

    detail::for_each_segment(x, opts, [&](u64 start, u64 length) {
        std::vector<u64> bits[3];
        for (int i = 0; i < 3; ++i) {
            bits[i] = detail::fresh_bits(length);
            detail::mark_roots(tables[i], start, length, bits[i]);
        }
        u64 s[3] = {0, 0, 0}, pr[3] = {0, 0, 0}, tr = 0;
        std::size_t words = bits[0].size();
        for (std::size_t w = 0; w < words; ++w) {
            u64 b1 = bits[0][w], b2 = bits[1][w], b3 = bits[2][w];
            s[0] += std::popcount(b1);
            s[1] += std::popcount(b2);
            s[2] += std::popcount(b3);
            pr[0] += std::popcount(b1 & b2);
            pr[1] += std::popcount(b1 & b3);
            pr[2] += std::popcount(b2 & b3);
            tr += std::popcount(b1 & b2 & b3);
        }
        for (int i = 0; i < 3; ++i) {
            singles[i] += s[i];
            pairs[i] += pr[i];
        }
        triple += tr;
    });

    CountReport report;
    report.x = x;
    for (int i = 0; i < 3; ++i) {
        report.singles[i] = singles[i].load();
        report.pairs[i] = pairs[i].load();
    }
    report.triple = triple.load();

    // monotone containment: triple <= pairs <= constituent singles <= X
    auto check = [](bool ok) {
        if (!ok) throw std::logic_error("count_triple: containment invariant violated");
    };
    for (int i = 0; i < 3; ++i) check(report.singles[i] <= x);
    check(report.pairs[0] <= report.singles[0] && report.pairs[0] <= report.singles[1]);
    check(report.pairs[1] <= report.singles[0] && report.pairs[1] <= report.singles[2]);
    check(report.pairs[2] <= report.singles[1] && report.pairs[2] <= report.singles[2]);
    for (int i = 0; i < 3; ++i) check(report.triple <= report.pairs[i]);
    return report;
}

inline u64 count_singles(u64 x, u32 shift, const SieveOptions& opts = {}) {
    require_shift(shift);
    if (x == 0) throw std::invalid_argument("count_singles: X must be positive");
    check_sieve_range(1, x);
    PrimeTable primes = primes_up_to(x + 1);
    ShiftRootTable table = build_root_table(shift, primes);
    std::atomic<u64> total{0};
    detail::for_each_segment(x, opts, [&](u64 start, u64 length) {
        std::vector<u64> bits = detail::fresh_bits(length);
        detail::mark_roots(table, start, length, bits);
        u64 local = 0;
        for (u64 w : bits) local += std::popcount(w);
        total += local;
    });
    return total.load();
}

inline u64 count_pairs(u64 x, u32 k, u32 j, const SieveOptions& opts = {}) {
    require_shift(k);
    require_shift(j);
    if (k >= j) throw std::invalid_argument("count_pairs: shifts must satisfy k < j");
    if (x == 0) throw std::invalid_argument("count_pairs: X must be positive");
    check_sieve_range(1, x);
    PrimeTable primes = primes_up_to(x + 1);
    ShiftRootTable tk = build_root_table(k, primes);
    ShiftRootTable tj = build_root_table(j, primes);
    std::atomic<u64> total{0};
    detail::for_each_segment(x, opts, [&](u64 start, u64 length) {
        std::vector<u64> bk = detail::fresh_bits(length);
        std::vector<u64> bj = detail::fresh_bits(length);
        detail::mark_roots(tk, start, length, bk);
        detail::mark_roots(tj, start, length, bj);
        u64 local = 0;
        for (std::size_t w = 0; w < bk.size(); ++w) local += std::popcount(bk[w] & bj[w]);
        total += local;
    });
    return total.load();
}

}  // namespace sqfree
