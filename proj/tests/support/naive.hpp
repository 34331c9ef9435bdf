#pragma once

// Trial-division reference implementations, deliberately independent of the
// library's sieving and root-lifting paths.

#include <cstdint>

namespace naive {

using u64 = std::uint64_t;

inline bool squarefree(u64 m) {
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return false;
    }
    return true;
}

struct Counts {
    u64 singles[3] = {0, 0, 0};
    u64 pairs[3] = {0, 0, 0};  // shift pairs (1,2), (1,3), (2,3)
    u64 triple = 0;
};

inline Counts count_up_to(u64 x) {
    Counts c;
    for (u64 n = 1; n <= x; ++n) {
        bool s1 = squarefree(n * n + 1);
        bool s2 = squarefree(n * n + 2);
        bool s3 = squarefree(n * n + 3);
        c.singles[0] += s1;
        c.singles[1] += s2;
        c.singles[2] += s3;
        c.pairs[0] += s1 && s2;
        c.pairs[1] += s1 && s3;
        c.pairs[2] += s2 && s3;
        c.triple += s1 && s2 && s3;
    }
    return c;
}

}  // namespace naive
