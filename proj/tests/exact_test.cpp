// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "bellgem/exact.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

using bellgem::DyadicRational;
using bellgem::ExactAmp;

namespace {

// Random amplitudes within one sqrt(2)-parity class; sums across classes
// leave the representable ring.
ExactAmp random_amp(std::mt19937_64& rng, std::uint32_t parity) {
    std::uniform_int_distribution<std::int64_t> num(-8, 8);
    std::uniform_int_distribution<std::uint32_t> pow(0, 3);
    return ExactAmp(num(rng), num(rng), 2 * pow(rng) + parity);
}

TEST(ExactAmp, CanonicalFormExamples) {
    // Both components even but half_pow < 2 stays put.
    ExactAmp sum = ExactAmp(1, 0, 1) + ExactAmp(1, 0, 1);
    EXPECT_EQ(sum, ExactAmp(2, 0, 1));

    // (2, 0, 2) reduces to (1, 0, 0).
    EXPECT_EQ(ExactAmp(2, 0, 2), ExactAmp(1, 0, 0));

    // Zero forces half_pow = 0.
    EXPECT_EQ(ExactAmp(0, 0, 5), ExactAmp::zero());
    EXPECT_EQ(ExactAmp(0, 0, 5).half_pow(), 0u);
}

TEST(ExactAmp, AddExamples) {
    EXPECT_EQ(ExactAmp(1, 0, 0) + ExactAmp(-1, 0, 0), ExactAmp::zero());
    EXPECT_EQ(ExactAmp(1, 1, 2) + ExactAmp(1, -1, 2), ExactAmp(1, 0, 0));
}

TEST(ExactAmp, MulExamples) {
    EXPECT_EQ(ExactAmp(1, 0, 1) * ExactAmp(1, 0, 1), ExactAmp(1, 0, 2));
    EXPECT_EQ(ExactAmp(0, 1, 0) * ExactAmp(0, 1, 0), ExactAmp(-1, 0, 0));
    EXPECT_EQ(ExactAmp(1, 0, 0) * ExactAmp::zero(), ExactAmp::zero());
}

TEST(ExactAmp, ConjExamples) {
    EXPECT_EQ(conj(ExactAmp(1, 1, 2)), ExactAmp(1, -1, 2));
    EXPECT_EQ(conj(ExactAmp(1, 0, 1)), ExactAmp(1, 0, 1));
    EXPECT_EQ(conj(ExactAmp::zero()), ExactAmp::zero());
}

TEST(ExactAmp, AbsSqExamples) {
    EXPECT_EQ(abs_sq(ExactAmp(1, 0, 1)), DyadicRational(1, 1));
    EXPECT_EQ(abs_sq(ExactAmp(1, 1, 2)), DyadicRational(1, 1));
    EXPECT_EQ(abs_sq(ExactAmp::zero()), DyadicRational(0, 0));
}

TEST(ExactAmp, CanonicalizationIdempotent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-64, 64);
    std::uniform_int_distribution<std::uint32_t> pow(0, 8);
    for (int i = 0; i < 2000; ++i) {
        ExactAmp a(num(rng), num(rng), pow(rng));
        ExactAmp again(a.re(), a.im(), a.half_pow());
        EXPECT_EQ(a, again);
    }
}

TEST(ExactAmp, RingAxiomsOnRandomSamples) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::uint32_t parity = i % 2;
        ExactAmp a = random_amp(rng, parity);
        ExactAmp b = random_amp(rng, parity);
        ExactAmp c = random_amp(rng, parity);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        // Multiplication may move between parity classes; distribution holds
        // whenever the sum itself is defined.
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(ExactAmp, AbsSqIsMultiplicative) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        ExactAmp a = random_amp(rng, i % 2);
        ExactAmp b = random_amp(rng, (i / 2) % 2);
        EXPECT_EQ(abs_sq(a * b), abs_sq(a) * abs_sq(b));
    }
}

TEST(ExactAmp, FloatRoundTrip) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> num(-(1 << 20), 1 << 20);
    std::uniform_int_distribution<std::uint32_t> pow(0, 10);
    for (int i = 0; i < 2000; ++i) {
        ExactAmp a(num(rng), num(rng), pow(rng));
        auto z = a.to_complex();
        double want_re = double(a.re()) * std::pow(2.0, -double(a.half_pow()) / 2.0);
        double want_im = double(a.im()) * std::pow(2.0, -double(a.half_pow()) / 2.0);
        EXPECT_NEAR(z.real(), want_re, 1e-12);
        EXPECT_NEAR(z.imag(), want_im, 1e-12);
    }
}

TEST(ExactAmp, MixedParitySumIsRejected) {
    // 1 + 1/sqrt2 has no Gaussian-integer representation over sqrt(2)^k.
    EXPECT_THROW(ExactAmp(1, 0, 0) + ExactAmp(1, 0, 1), std::domain_error);
    // Zero is compatible with everything.
    EXPECT_EQ(ExactAmp::zero() + ExactAmp(1, 0, 1), ExactAmp(1, 0, 1));
}

TEST(ExactAmp, OverflowIsReportedNotWrapped) {
    ExactAmp big(std::int64_t(1) << 62, 0, 0);
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * big, std::overflow_error);
    EXPECT_THROW(abs_sq(big), std::overflow_error);
}

TEST(ExactAmp, PhaseUnitsAreTheEighthRoots) {
    const auto& units = bellgem::phase_units();
    for (const ExactAmp& u : units) {
        EXPECT_EQ(abs_sq(u), DyadicRational(1, 0));
        // u^8 = 1 exactly.
        ExactAmp p = ExactAmp::one();
        for (int k = 0; k < 8; ++k) p = p * u;
        EXPECT_EQ(p, ExactAmp::one());
    }
}

TEST(DyadicRational, LowestTermsAndStrings) {
    EXPECT_EQ(DyadicRational(4, 3), DyadicRational(1, 1));
    EXPECT_EQ(DyadicRational(1, 1).str(), "1/2^1");
    EXPECT_EQ(DyadicRational(1, 0).str(), "1");
    EXPECT_EQ(DyadicRational(0, 7), DyadicRational(0, 0));
    EXPECT_EQ(DyadicRational(3, 2).decimal(), "0.750000000000");
    EXPECT_EQ(DyadicRational(1, 0).decimal(), "1.000000000000");
    EXPECT_EQ(DyadicRational(-1, 1).decimal(), "-0.500000000000");
}

TEST(DyadicRational, Arithmetic) {
    EXPECT_EQ(DyadicRational(1, 1) + DyadicRational(1, 1), DyadicRational(1, 0));
    EXPECT_EQ(DyadicRational(1, 2) * DyadicRational(3, 1), DyadicRational(3, 3));
    EXPECT_TRUE(DyadicRational(1, 0) == 1);
    EXPECT_FALSE(DyadicRational(1, 1) == 1);
}

}  // namespace
