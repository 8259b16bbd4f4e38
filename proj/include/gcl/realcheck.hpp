// gcl/realcheck.hpp -- certified comparisons against log2/exp expressions.
//
// Lemma bounds mix exact rationals with log2(.), sqrt(.) and exp(.). Rationals
// stay exact end to end; the transcendental leaves are evaluated as rational
// enclosures [lo,hi] with directed rounding, refined on demand. A comparison
// is reported true only when it holds against the adversarial endpoint, so a
// PASS can never be an artifact of rounding.
#pragma once

#include "gcl/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace gcl {

struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat point) : lo(point), hi(point) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("RatInterval: lo > hi");
    }

    bool is_point() const { return lo == hi; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    /// Multiplication restricted to nonnegative intervals, which is all the
    /// lemma expressions need.
    RatInterval operator*(const RatInterval& o) const {
        if (lo < 0 || o.lo < 0) throw std::logic_error("RatInterval: negative operand");
        return {lo * o.lo, hi * o.hi};
    }
    RatInterval operator*(const Rat& c) const {
        if (c >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }
    RatInterval squared() const {
        if (lo < 0) throw std::logic_error("RatInterval: squaring negative interval");
        return {lo * lo, hi * hi};
    }
};

namespace detail {

inline bool is_power_of_two(const Int& v, long& exp_out) {
    if (v <= 0) return false;
    size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    if (mpz_scan1(v.get_mpz_t(), 0) != bits - 1) return false;
    exp_out = (long)bits - 1;
    return true;
}

/// floor(q * 2^bits) / 2^bits and the ceiling counterpart.
inline Rat dyadic_floor(const Rat& q, unsigned bits) {
    Int scaled;
    Int num = q.get_num() << bits;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(scaled, pow2(bits));
    r.canonicalize();
    return r;
}
inline Rat dyadic_ceil(const Rat& q, unsigned bits) {
    Int scaled;
    Int num = q.get_num() << bits;
    mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    Rat r(scaled, pow2(bits));
    r.canonicalize();
    return r;
}

} // namespace detail

namespace detail {
/// Repeated queries hit the same handful of arguments, so the transcendental
/// enclosures are memoized per thread.
template <int Tag>
class IntervalCache {
public:
    const RatInterval* find(const Rat& x, unsigned prec) const {
        auto it = map_.find({x, prec});
        return it == map_.end() ? nullptr : &it->second;
    }
    const RatInterval& store(const Rat& x, unsigned prec, RatInterval v) {
        if (map_.size() > 4096) map_.clear();
        return map_.emplace(std::make_pair(x, prec), std::move(v)).first->second;
    }
    static IntervalCache& instance() {
        thread_local IntervalCache cache;
        return cache;
    }

private:
    std::map<std::pair<Rat, unsigned>, RatInterval> map_;
};
} // namespace detail

/// Enclosure of log2(x) for rational x > 0, width about 2^-prec.
/// Exact (point interval) when x is a power of two times a power-of-two ratio.
inline RatInterval log2_interval(const Rat& x_in, unsigned prec) {
    if (x_in <= 0) throw std::invalid_argument("log2_interval: x <= 0");
    Rat x = x_in;
    x.canonicalize(); // num/den are inspected structurally below
    auto& cache = detail::IntervalCache<0>::instance();
    if (const RatInterval* hit = cache.find(x, prec)) return *hit;
    long pe = 0, qe = 0;
    if (detail::is_power_of_two(x.get_num(), pe) && detail::is_power_of_two(x.get_den(), qe))
        return RatInterval(Rat(pe - qe));

    // Normalize: x = m * 2^e with m in [1,2).
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    long e = (long)mpz_sizeinbase(p.get_mpz_t(), 2) - (long)mpz_sizeinbase(q.get_mpz_t(), 2);
    auto ge_pow = [&](long k) { // x >= 2^k ?
        if (k >= 0) return p >= (q << k);
        return (p << (-k)) >= q;
    };
    while (!ge_pow(e)) --e;
    while (ge_pow(e + 1)) ++e;

    // Two independently-rounded mantissa tracks, F fraction bits each.
    const unsigned F = prec + 64;
    Int scale = pow2(F);
    Int twoScale = scale << 1;
    auto mantissa = [&](bool up) {
        // m * 2^F = p * 2^(F-e) / q, directed.
        Int num = p, den = q;
        long sh = (long)F - e;
        if (sh >= 0)
            num <<= sh;
        else
            den <<= -sh;
        Int m;
        if (up)
            mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        else
            mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return m;
    };

    Int mlo = mantissa(false), mhi = mantissa(true);
    if (mlo < scale) mlo = scale; // true mantissa is >= 1
    Rat sum_lo(0), sum_hi(0);
    Rat weight(1, 2);
    for (unsigned i = 0; i < prec; ++i) {
        mlo *= mlo;
        mpz_fdiv_q_2exp(mlo.get_mpz_t(), mlo.get_mpz_t(), F);
        if (mlo >= twoScale) {
            sum_lo += weight;
            mpz_fdiv_q_2exp(mlo.get_mpz_t(), mlo.get_mpz_t(), 1);
        }
        if (mlo < scale) mlo = scale;

        mhi *= mhi;
        mpz_cdiv_q_2exp(mhi.get_mpz_t(), mhi.get_mpz_t(), F);
        if (mhi >= twoScale) {
            sum_hi += weight;
            mpz_cdiv_q_2exp(mhi.get_mpz_t(), mhi.get_mpz_t(), 1);
        }
        weight /= 2;
    }
    // Residual mantissas sit in [1,2], contributing [0,1] unextracted bits.
    Rat lo = Rat(e) + sum_lo;
    Rat hi = Rat(e) + sum_hi + weight * 2;
    return cache.store(x, prec, {lo, hi});
}

/// Enclosure of sqrt(x) for rational x >= 0, width about 2^-prec.
/// Exact (point interval) when x is a perfect square of a rational.
inline RatInterval sqrt_interval(const Rat& x_in, unsigned prec) {
    if (x_in < 0) throw std::invalid_argument("sqrt_interval: x < 0");
    if (x_in == 0) return RatInterval(Rat(0));
    Rat x = x_in;
    x.canonicalize();
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(x.get_den().get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), x.get_den().get_mpz_t());
        Rat r(rn, rd);
        r.canonicalize();
        return RatInterval(r);
    }
    auto& cache = detail::IntervalCache<1>::instance();
    if (const RatInterval* hit = cache.find(x, prec)) return *hit;
    Rat scaled = x * Rat(pow2(2 * prec));
    Int sf = floor_rat(scaled), sc = ceil_rat(scaled);
    Int rlo, rhi;
    mpz_sqrt(rlo.get_mpz_t(), sf.get_mpz_t());
    mpz_sqrt(rhi.get_mpz_t(), sc.get_mpz_t());
    if (rhi * rhi < sc) ++rhi;
    Rat lo(rlo, pow2(prec)), hi(rhi, pow2(prec));
    lo.canonicalize();
    hi.canonicalize();
    return cache.store(x, prec, {lo, hi});
}

/// Enclosure of e^x for rational x (any sign).
inline RatInterval exp_interval(const Rat& x, unsigned prec) {
    if (x == 0) return RatInterval(Rat(1));
    if (x < 0) {
        RatInterval pos = exp_interval(-x, prec);
        return {Rat(1) / pos.hi, Rat(1) / pos.lo};
    }
    // Argument reduction: y = x / 2^j with y <= 1/2, then square j times.
    Rat y = x;
    unsigned j = 0;
    while (y > Rat(1, 2)) {
        y /= 2;
        ++j;
    }
    // Exact Taylor partial sum; terms decay at least geometrically (ratio 1/2).
    const unsigned terms = 24 + prec / 4;
    Rat sum(1), term(1);
    for (unsigned i = 1; i <= terms; ++i) {
        term *= y;
        term /= (long)i;
        sum += term;
    }
    Rat rem = term * y * 2; // bounds the tail by a geometric series
    const unsigned G = prec + 80;
    Rat lo = detail::dyadic_floor(sum, G);
    Rat hi = detail::dyadic_ceil(sum + rem, G);
    for (unsigned i = 0; i < j; ++i) {
        lo = detail::dyadic_floor(lo * lo, G);
        hi = detail::dyadic_ceil(hi * hi, G);
    }
    if (lo < 0) lo = 0;
    return {lo, hi};
}

/// Outcome of a certified comparison. `margin` is measured against the
/// adversarial endpoint: nonnegative iff the claim certifiably holds.
struct CertCheck {
    bool pass = false;
    Rat margin{0};
    bool ambiguous = false; // undecided at maximum precision
};

/// Certify lhs >= rhs where rhs is an enclosure refined by precision.
inline CertCheck certified_ge(const Rat& lhs,
                              const std::function<RatInterval(unsigned)>& rhs,
                              unsigned max_prec = 1024) {
    RatInterval I;
    for (unsigned prec = 64; prec <= max_prec; prec *= 2) {
        I = rhs(prec);
        if (lhs >= I.hi) return {true, lhs - I.hi, false};
        if (lhs < I.lo) return {false, lhs - I.lo, false};
        if (I.is_point()) return {false, lhs - I.lo, false};
    }
    return {false, lhs - I.hi, true};
}

/// Certify lhs <= rhs.
inline CertCheck certified_le(const Rat& lhs,
                              const std::function<RatInterval(unsigned)>& rhs,
                              unsigned max_prec = 1024) {
    RatInterval I;
    for (unsigned prec = 64; prec <= max_prec; prec *= 2) {
        I = rhs(prec);
        if (lhs <= I.lo) return {true, I.lo - lhs, false};
        if (lhs > I.hi) return {false, I.hi - lhs, false};
        if (I.is_point()) return {false, I.hi - lhs, false};
    }
    return {false, I.lo - lhs, true};
}

/// Certify expr >= 0 where expr is an enclosure refined by precision.
/// margin is the adversarial endpoint of the enclosure (lo on pass, hi on fail).
inline CertCheck certify_nonneg(const std::function<RatInterval(unsigned)>& expr,
                                unsigned max_prec = 1024) {
    RatInterval I;
    for (unsigned prec = 64; prec <= max_prec; prec *= 2) {
        I = expr(prec);
        if (I.lo >= 0) return {true, I.lo, false};
        if (I.hi < 0) return {false, I.hi, false};
        if (I.is_point()) return {false, I.hi, false};
    }
    return {false, I.lo, true};
}

} // namespace gcl
