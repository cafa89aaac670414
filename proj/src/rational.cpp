#include "hof/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hof {

RationalFlux reduce(long long p, long long q) {
    if (q == 0) throw std::domain_error("reduce: zero denominator");
    if (p == 0) return {0, 1};
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
}

RationalFlux fold_unit(const RationalFlux& flux) {
    long long r = flux.p % flux.q;
    if (r < 0) r += flux.q;
    return reduce(r, flux.q);
}

std::pair<long long, long long> extended_euclid(long long p, long long q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::domain_error("extended_euclid: arguments must be coprime positive integers");
    // Iterative Euclid carrying the Bezout coefficient of p.
    long long r0 = p, r1 = q;
    long long s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long quot = r0 / r1;
        long long r2 = r0 - quot * r1;
        long long s2 = s0 - quot * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 == 1, and p*s0 ≡ 1 (mod q); normalize m into [0, q).
    long long m = s0 % q;
    if (m < 0) m += q;
    long long n = (p * m - 1) / q;
    return {m, n};
}

std::vector<RationalFlux> farey_sequence(long long qmax) {
    if (qmax < 1) throw std::domain_error("farey_sequence: qmax must be >= 1");
    std::vector<RationalFlux> seq;
    // Standard next-term recurrence from two consecutive entries.
    long long a = 0, b = 1, c = 1, d = qmax;
    seq.push_back({a, b});
    while (c <= d) {
        long long k = (qmax + b) / d;
        long long a2 = k * c - a;
        long long b2 = k * d - b;
        a = c;
        b = d;
        c = a2;
        d = b2;
        seq.push_back({a, b});
    }
    return seq;
}

namespace {

// |x - p1/q1| vs |x - p2/q2| without forming the quotients; the products
// stay exact in the 64-bit mantissa of long double for q <= ~2000.
int compare_error(double x, const RationalFlux& f1, const RationalFlux& f2) {
    long double e1 = std::fabs(static_cast<long double>(x) * f1.q - f1.p) * f2.q;
    long double e2 = std::fabs(static_cast<long double>(x) * f2.q - f2.p) * f1.q;
    if (e1 < e2) return -1;
    if (e1 > e2) return 1;
    return 0;
}

}  // namespace

RationalFlux best_approximant(double x, long long qmax) {
    if (qmax < 1) throw std::domain_error("best_approximant: qmax must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("best_approximant: x outside [0, 1]");
    // Stern-Brocot descent; stops when the mediant denominator would
    // exceed the cap, leaving the two enclosing Farey neighbors.
    RationalFlux lo{0, 1}, hi{1, 1};
    for (;;) {
        RationalFlux med{lo.p + hi.p, lo.q + hi.q};
        if (med.q > qmax) break;
        double mv = med.value();
        if (x < mv) {
            hi = med;
        } else if (x > mv) {
            lo = med;
        } else {
            return med;
        }
    }
    int cmp = compare_error(x, lo, hi);
    if (cmp < 0) return lo;
    if (cmp > 0) return hi;
    if (lo.q != hi.q) return lo.q < hi.q ? lo : hi;
    return lo.p < hi.p ? lo : hi;
}

RationalFlux approximate_ratio(double x, long long den_cap) {
    if (!(x >= 0.0)) throw std::domain_error("approximate_ratio: x must be >= 0");
    double ip = std::floor(x);
    RationalFlux frac = best_approximant(x - ip, den_cap);
    long long shift = static_cast<long long>(ip);
    return {shift * frac.q + frac.p, frac.q};
}

std::string to_string(const RationalFlux& flux) {
    return std::to_string(flux.p) + "/" + std::to_string(flux.q);
}

}  // namespace hof
