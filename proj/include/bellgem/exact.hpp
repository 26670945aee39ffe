// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bellgem {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact amplitude addition");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact amplitude multiplication");
    }
    return r;
}

// a * 2^t with overflow detection.
inline std::int64_t checked_shift(std::int64_t a, std::uint32_t t) {
    if (a == 0) return 0;
    if (t >= 62) throw std::overflow_error("power-of-two rescale exceeds 64-bit range");
    return checked_mul(a, std::int64_t(1) << t);
}

}  // namespace detail

// Exact dyadic rational num / 2^den_pow, kept in lowest terms (num odd or zero).
// Result type of squared magnitudes and norms.
class DyadicRational {
  public:
    constexpr DyadicRational() = default;
    DyadicRational(std::int64_t num, std::uint32_t den_pow) : num_(num), den_pow_(den_pow) {
        reduce();
    }

    std::int64_t num() const { return num_; }
    std::uint32_t den_pow() const { return den_pow_; }

    bool operator==(const DyadicRational&) const = default;
    bool operator==(std::int64_t v) const { return den_pow_ == 0 && num_ == v; }

    DyadicRational operator+(const DyadicRational& o) const {
        std::uint32_t p = std::max(den_pow_, o.den_pow_);
        std::int64_t a = detail::checked_shift(num_, p - den_pow_);
        std::int64_t b = detail::checked_shift(o.num_, p - o.den_pow_);
        return DyadicRational(detail::checked_add(a, b), p);
    }

    DyadicRational operator*(const DyadicRational& o) const {
        return DyadicRational(detail::checked_mul(num_, o.num_), den_pow_ + o.den_pow_);
    }

    // Exact string, "p" for integers and "p/2^q" otherwise.
    std::string str() const {
        if (den_pow_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/2^" + std::to_string(den_pow_);
    }

    // Exact 12-digit decimal rendering via integer scaling.
    std::string decimal() const {
        bool neg = num_ < 0;
        unsigned __int128 scaled = (unsigned __int128)(neg ? -(__int128)num_ : (__int128)num_);
        for (int i = 0; i < 12; ++i) scaled *= 10;
        // round to nearest, ties away from zero
        if (den_pow_ > 0) {
            unsigned __int128 half = (unsigned __int128)1 << (den_pow_ - 1);
            scaled = (scaled + half) >> den_pow_;
        }
        unsigned __int128 ip = scaled;
        for (int i = 0; i < 12; ++i) ip /= 10;
        unsigned __int128 frac = scaled;
        std::string digits;
        for (int i = 0; i < 12; ++i) {
            digits.push_back(char('0' + int(frac % 10)));
            frac /= 10;
        }
        std::string whole;
        if (ip == 0) whole = "0";
        while (ip > 0) {
            whole.push_back(char('0' + int(ip % 10)));
            ip /= 10;
        }
        std::reverse(whole.begin(), whole.end());
        std::reverse(digits.begin(), digits.end());
        return (neg ? "-" : "") + whole + "." + digits;
    }

    double to_double() const { return std::ldexp(double(num_), -int(den_pow_)); }

  private:
    void reduce() {
        if (num_ == 0) {
            den_pow_ = 0;
            return;
        }
        while (den_pow_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --den_pow_;
        }
    }

    std::int64_t num_ = 0;
    std::uint32_t den_pow_ = 0;
};

// Exact amplitude (re + im*i) / sqrt(2)^half_pow over the Gaussian integers.
//
// Canonical form: zero is stored as (0, 0, 0); otherwise re and im are never
// both even while half_pow >= 2. Nonzero values keep a well-defined parity of
// half_pow (an odd and an even sqrt(2) power never represent the same value),
// so addition is only defined between operands of matching parity. Every
// amplitude produced by the H/CNOT/CP gate set and the gem construction stays
// within one parity class.
class ExactAmp {
  public:
    constexpr ExactAmp() = default;
    ExactAmp(std::int64_t re, std::int64_t im, std::uint32_t half_pow)
        : re_(re), im_(im), half_pow_(half_pow) {
        canonicalize();
    }

    static ExactAmp zero() { return ExactAmp(); }
    static ExactAmp one() { return ExactAmp(1, 0, 0); }
    static ExactAmp i() { return ExactAmp(0, 1, 0); }
    static ExactAmp inv_sqrt2() { return ExactAmp(1, 0, 1); }

    std::int64_t re() const { return re_; }
    std::int64_t im() const { return im_; }
    std::uint32_t half_pow() const { return half_pow_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool operator==(const ExactAmp&) const = default;

    ExactAmp operator-() const {
        ExactAmp r;
        r.re_ = -re_;
        r.im_ = -im_;
        r.half_pow_ = half_pow_;
        return r;
    }

    ExactAmp operator+(const ExactAmp& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (((half_pow_ ^ o.half_pow_) & 1u) != 0) {
            throw std::domain_error(
                "amplitude sum leaves the ring: sqrt(2) denominators differ in parity");
        }
        std::uint32_t p = std::max(half_pow_, o.half_pow_);
        std::int64_t ar = detail::checked_shift(re_, (p - half_pow_) / 2);
        std::int64_t ai = detail::checked_shift(im_, (p - half_pow_) / 2);
        std::int64_t br = detail::checked_shift(o.re_, (p - o.half_pow_) / 2);
        std::int64_t bi = detail::checked_shift(o.im_, (p - o.half_pow_) / 2);
        return ExactAmp(detail::checked_add(ar, br), detail::checked_add(ai, bi), p);
    }

    ExactAmp operator-(const ExactAmp& o) const { return *this + (-o); }

    ExactAmp operator*(const ExactAmp& o) const {
        using detail::checked_add;
        using detail::checked_mul;
        std::int64_t r = checked_add(checked_mul(re_, o.re_), -checked_mul(im_, o.im_));
        std::int64_t i = checked_add(checked_mul(re_, o.im_), checked_mul(im_, o.re_));
        return ExactAmp(r, i, half_pow_ + o.half_pow_);
    }

    std::complex<double> to_complex() const {
        double scale = std::pow(2.0, -double(half_pow_) / 2.0);
        return {double(re_) * scale, double(im_) * scale};
    }

  private:
    void canonicalize() {
        if (re_ == 0 && im_ == 0) {
            half_pow_ = 0;
            return;
        }
        while (half_pow_ >= 2 && re_ % 2 == 0 && im_ % 2 == 0) {
            re_ /= 2;
            im_ /= 2;
            half_pow_ -= 2;
        }
    }

    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
    std::uint32_t half_pow_ = 0;
};

inline ExactAmp conj(const ExactAmp& a) {
    return ExactAmp(a.re(), -a.im(), a.half_pow());
}

// |a|^2 = (re^2 + im^2) / 2^half_pow, exactly.
inline DyadicRational abs_sq(const ExactAmp& a) {
    std::int64_t s = detail::checked_add(detail::checked_mul(a.re(), a.re()),
                                         detail::checked_mul(a.im(), a.im()));
    return DyadicRational(s, a.half_pow());
}

// The unit group of the amplitude ring: the eighth roots of unity. These are
// exactly the global phases a H/CNOT/CP circuit can introduce.
inline const std::array<ExactAmp, 8>& phase_units() {
    static const std::array<ExactAmp, 8> units = {
        ExactAmp(1, 0, 0),  ExactAmp(-1, 0, 0), ExactAmp(0, 1, 0),  ExactAmp(0, -1, 0),
        ExactAmp(1, 1, 1),  ExactAmp(1, -1, 1), ExactAmp(-1, 1, 1), ExactAmp(-1, -1, 1),
    };
    return units;
}

// i^k as an exact amplitude.
inline ExactAmp i_power(std::uint32_t k) {
    switch (k % 4) {
        case 0: return ExactAmp(1, 0, 0);
        case 1: return ExactAmp(0, 1, 0);
        case 2: return ExactAmp(-1, 0, 0);
        default: return ExactAmp(0, -1, 0);
    }
}

inline std::string to_string(const ExactAmp& a) {
    std::string s = "(" + std::to_string(a.re()) + (a.im() < 0 ? "" : "+") +
                    std::to_string(a.im()) + "i)";
    if (a.half_pow() > 0) s += "/sqrt2^" + std::to_string(a.half_pow());
    return s;
}

}  // namespace bellgem
