#pragma once

// Exact rational arithmetic and closed intervals with rational endpoints.
// All rounding to decimal strings is directed (outward when printing
// interval endpoints), so printed enclosures never understate the truth.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sqfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt floor_to_int(const Rational& q) {
    BigInt quot = numerator(q) / denominator(q);  // truncates toward zero
    if (numerator(q) < 0 && quot * denominator(q) != numerator(q)) --quot;
    return quot;
}

// floor(q * 10^places) / 10^places, exact.
inline Rational decimal_floor(const Rational& q, unsigned places) {
    BigInt scale = pow(BigInt(10), places);
    BigInt num = numerator(q) * scale;
    BigInt den = denominator(q);
    BigInt quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return Rational(quot, scale);
}

inline Rational decimal_ceil(const Rational& q, unsigned places) {
    return -decimal_floor(-q, places);
}

// Decimal text with exactly `places` digits, rounding per `mode`:
// -1 floor, +1 ceil, 0 nearest (ties away from zero).
inline std::string decimal_string(const Rational& q, unsigned places, int mode) {
    BigInt scale = pow(BigInt(10), places);
    BigInt num = numerator(q) * scale;
    BigInt den = denominator(q);
    BigInt quot = num / den;
    BigInt rem = num - quot * den;  // same sign as num (or zero)
    if (rem != 0) {
        if (mode < 0 && num < 0) --quot;
        if (mode > 0 && num > 0) ++quot;
        if (mode == 0) {
            BigInt twice = 2 * abs(rem);
            if (twice >= den) quot += (num < 0) ? -1 : 1;
        }
    }
    bool neg = quot < 0;
    BigInt mag = abs(quot);
    std::string out = neg ? "-" : "";
    out += BigInt(mag / scale).str();
    if (places > 0) {
        std::string frac = BigInt(mag % scale).str();
        frac.insert(frac.begin(), places - frac.size(), '0');
        out += '.';
        out += frac;
    }
    return out;
}

struct Interval {
    Rational lower;
    Rational upper;

    Interval() = default;
    Interval(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower > upper) throw std::invalid_argument("interval endpoints out of order");
    }
    static Interval point(const Rational& q) { return Interval(q, q); }

    Rational midpoint() const { return (lower + upper) / 2; }
    Rational width() const { return upper - lower; }

    bool contains(const Rational& q) const { return lower <= q && q <= upper; }
    bool intersects(const Interval& o) const { return lower <= o.upper && o.lower <= upper; }

    Interval operator+(const Interval& o) const {
        return Interval(lower + o.lower, upper + o.upper);
    }
    Interval operator-(const Interval& o) const {
        return Interval(lower - o.upper, upper - o.lower);
    }
    Interval operator*(const Interval& o) const {
        Rational c[4] = {lower * o.lower, lower * o.upper, upper * o.lower, upper * o.upper};
        Rational lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return Interval(lo, hi);
    }
    Interval operator*(const Rational& q) const { return *this * point(q); }

    // Outward-rounded decimal endpoints: [floor(lower), ceil(upper)].
    std::string to_string(unsigned places = 6) const {
        return "[" + decimal_string(lower, places, -1) + ", " +
               decimal_string(upper, places, +1) + "]";
    }
};

}  // namespace sqfree
