// Copyright 2026 The telroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "telroute/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "telroute/errors.hpp"
#include "telroute/generate.hpp"

namespace telroute {
namespace {

TEST(MakeChannel, PureRange) {
  EXPECT_NO_THROW(make_pure_channel(0.0));
  EXPECT_NO_THROW(make_pure_channel(kQuarterPi));
  EXPECT_THROW(make_pure_channel(-1e-9), DomainError);
  EXPECT_THROW(make_pure_channel(0.8), DomainError);
  EXPECT_TRUE(std::holds_alternative<PureSchmidtChannel>(make_pure_channel(0.3)));
}

TEST(MakeChannel, WernerRange) {
  EXPECT_THROW(make_werner_gen(1.1, 0.2), DomainError);
  EXPECT_THROW(make_werner_gen(-0.1, 0.2), DomainError);
  EXPECT_THROW(make_werner_gen(0.5, 1.0), DomainError);
}

TEST(MakeChannel, WernerLimits) {
  const DensityMatrix bell = to_density_matrix(make_werner_gen(1.0, kQuarterPi));
  EXPECT_NEAR(bell(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(bell(0, 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(negativity(make_werner_gen(1.0, kQuarterPi)), 1.0, 1e-12);

  for (double theta : {0.0, 0.3, kQuarterPi}) {
    const DensityMatrix mixed = to_density_matrix(make_werner_gen(0.0, theta));
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_NEAR(std::abs(mixed(r, c) - (r == c ? 0.25 : 0.0)), 0.0, 1e-15);
      }
    }
  }
}

TEST(MakeChannel, WernerEntrywise) {
  // 0.9 |Phi+><Phi+| + 0.1 I/4.
  const XState x = to_xstate(make_werner_gen(0.9, kQuarterPi));
  EXPECT_NEAR(x.a11, 0.475, 1e-15);
  EXPECT_NEAR(x.a44, 0.475, 1e-15);
  EXPECT_NEAR(x.a22, 0.025, 1e-15);
  EXPECT_NEAR(x.a33, 0.025, 1e-15);
  EXPECT_NEAR(x.a14.real(), 0.45, 1e-15);
  EXPECT_EQ(x.a23, cplx(0.0));
  const DensityMatrix m = to_density_matrix(make_werner_gen(0.9, kQuarterPi));
  EXPECT_NEAR(m(3, 0).real(), 0.45, 1e-15);
  EXPECT_NEAR(m(1, 1).real(), 0.025, 1e-15);
}

TEST(ToDensityMatrix, BellProjector) {
  const DensityMatrix m = to_density_matrix(make_pure_channel(kQuarterPi));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
      EXPECT_NEAR(std::abs(m(r, c) - (corner ? 0.5 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(ToDensityMatrix, ProductState) {
  const DensityMatrix m = to_density_matrix(XState{1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(m(0, 0), cplx(1.0));
  EXPECT_EQ(m(1, 1), cplx(0.0));
  EXPECT_NO_THROW(validate_density_matrix(m));
  EXPECT_NEAR(negativity(make_pure_channel(0.0)), 0.0, 1e-15);
}

TEST(ToDensityMatrix, RejectsUnphysicalXState) {
  XState bad{0.5, 0.0, 0.0, 0.5, 0.6, 0.0};
  EXPECT_THROW(to_density_matrix(ChannelState{bad}), ValidationError);
  EXPECT_THROW(make_xstate(bad), ValidationError);
}

TEST(Validate, AcceptsDiagonalMixture) {
  EXPECT_NO_THROW(validate_density_matrix(DensityMatrix(CMatrix::diagonal({0.5, 0.5, 0, 0}))));
}

TEST(Validate, NegativeEigenvalue) {
  try {
    validate_density_matrix(DensityMatrix(CMatrix::diagonal({0.6, 0.6, -0.2, 0.0})));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.property(), ValidationError::Property::kPositivity);
    EXPECT_NEAR(e.magnitude(), -0.2, 1e-15);
    EXPECT_NE(std::string(e.what()).find("negative eigenvalue"), std::string::npos);
  }
}

TEST(Validate, NamesViolatedCoherenceBlock) {
  try {
    validate_density_matrix(to_density_matrix(XState{0.5, 0.0, 0.0, 0.5, 0.6, 0.0}));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.property(), ValidationError::Property::kPositivity);
    EXPECT_NE(std::string(e.what()).find("|a14|^2 > a11*a44"), std::string::npos);
    EXPECT_NEAR(e.magnitude(), -0.1, 1e-12);
  }
}

TEST(Validate, TraceAndHermiticity) {
  EXPECT_THROW(validate_density_matrix(DensityMatrix(CMatrix::diagonal({0.5, 0.4}))),
               ValidationError);
  CMatrix m = CMatrix::diagonal({0.5, 0.5});
  m(0, 1) = 0.1;
  try {
    validate_density_matrix(DensityMatrix(m));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.property(), ValidationError::Property::kHermiticity);
  }
}

TEST(Negativity, PureIsSinTwoTheta) {
  EXPECT_NEAR(negativity(make_pure_channel(kQuarterPi)), 1.0, 1e-12);
  EXPECT_NEAR(negativity(make_pure_channel(kPi / 8)), 0.70710678118654752, 1e-12);
  for (int i = 0; i < 100; ++i) {
    const double theta = kQuarterPi * (i / 99.0);
    EXPECT_NEAR(negativity(make_pure_channel(theta)), std::sin(2 * theta), 1e-12);
  }
}

TEST(Negativity, WernerHalf) {
  // Partial transpose of 0.5 Phi+ + 0.5 I/4 has eigenvalues
  // {3/8, 3/8, 3/8, -1/8}, so N = 2 * 1/8.
  EXPECT_NEAR(negativity(make_werner_gen(0.5, kQuarterPi)), 0.25, 1e-12);
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.9, 1.0}) {
    EXPECT_NEAR(negativity(make_werner_gen(p, kQuarterPi)),
                std::max(0.0, (3 * p - 1) / 2), 1e-12);
  }
}

TEST(Negativity, GeneralPathMatchesClosedForm) {
  // A rotated Bell state is not X-shaped and exercises the Jacobi route.
  const double h = std::sqrt(0.5);
  const std::vector<cplx> ket{h * std::cos(0.3), h * std::sin(0.3), -h * std::sin(0.3),
                              h * std::cos(0.3)};
  const DensityMatrix m = DensityMatrix::from_ket(ket);
  EXPECT_FALSE(is_x_pattern(m.matrix()));
  EXPECT_NEAR(negativity(m), 1.0, 1e-12);
}

TEST(ChannelProperties, RandomStatesAreValidAndBounded) {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const ChannelState ch = (i % 2) ? ChannelState{sample_xstate(rng)}
                                    : sample_channel(rng, ChannelFamily::kWerner);
    const DensityMatrix m = to_density_matrix(ch);
    EXPECT_NO_THROW(validate_density_matrix(m));
    const double n = negativity(ch);
    EXPECT_GE(n, 0.0);
    EXPECT_LE(n, 1.0 + 1e-12);
  }
}

TEST(ChannelProperties, NegativityInvariantUnderQubitSwap) {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix m = to_density_matrix(XState(sample_xstate(rng)));
    const double via_first = -2.0 * [&] {
      double s = 0;
      for (double v : hermitian_eigenvalues(partial_transpose_first(m.matrix()))) {
        s += std::min(v, 0.0);
      }
      return s;
    }();
    EXPECT_NEAR(via_first, negativity(m), 1e-12);
  }
}

TEST(ChannelProperties, BlockConditionsEquivalentToFullPositivity) {
  // Draw X-pattern Hermitian unit-trace matrices, half of them violating a
  // block bound, and compare the block test with the full eigenvalue test.
  Rng rng(31);
  int violating = 0;
  for (int i = 0; i < 1000; ++i) {
    XState x = sample_xstate(rng);
    const double stretch = rng.uniform(0.5, 1.5);
    x.a14 *= stretch;
    x.a23 *= rng.uniform(0.5, 1.5);
    const bool blocks_ok = std::norm(x.a14) <= x.a11 * x.a44 &&
                           std::norm(x.a23) <= x.a22 * x.a33;
    const double min_eig = hermitian_eigenvalues(to_density_matrix(x).matrix()).front();
    const bool margin = std::abs(min_eig) > 1e-9;  // skip boundary cases
    if (margin) {
      EXPECT_EQ(blocks_ok, min_eig >= 0.0) << i;
    }
    if (!blocks_ok) ++violating;
  }
  EXPECT_GT(violating, 100);
}

}  // namespace
}  // namespace telroute
