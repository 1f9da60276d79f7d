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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "telroute/linalg.hpp"

namespace telroute {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kQuarterPi = kPi / 4.0;

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivitySlack = -1e-10;

/// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4].
struct PureSchmidtChannel {
  double theta = kQuarterPi;
};

/// Two-qubit density matrix with support on the diagonal and anti-diagonal
/// only. a41 = conj(a14) and a32 = conj(a23) are implied. Construction does
/// not validate; use check_xstate or to_density_matrix.
struct XState {
  double a11 = 0.0;
  double a22 = 0.0;
  double a33 = 0.0;
  double a44 = 0.0;
  cplx a14 = 0.0;
  cplx a23 = 0.0;
};

/// p_w |Phi(theta)><Phi(theta)| + (1 - p_w) I/4.
struct WernerGenChannel {
  double p_w = 1.0;
  double theta = kQuarterPi;
};

using ChannelState = std::variant<PureSchmidtChannel, XState, WernerGenChannel>;

/// A 2x2 or 4x4 complex matrix claimed to be a density matrix. Wrapping does
/// not validate; validate_density_matrix does.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  std::size_t dim() const noexcept { return m_.dim(); }
  const CMatrix& matrix() const noexcept { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  static DensityMatrix from_ket(const std::vector<cplx>& ket);

 private:
  CMatrix m_;
};

ChannelState make_pure_channel(double theta);
ChannelState make_bell_channel();
ChannelState make_werner_gen(double p_w, double theta);
/// Validates the block-positivity and trace conditions.
ChannelState make_xstate(const XState& x);

/// X-state entries of any channel variant (exact closed forms for the pure
/// and Werner-generalized families).
XState to_xstate(const ChannelState& ch);

/// Throws ValidationError if `x` is not a valid density matrix.
void check_xstate(const XState& x);

DensityMatrix to_density_matrix(const ChannelState& ch);
DensityMatrix to_density_matrix(const XState& x);

/// Outcome of the individual physicality checks, without throwing.
struct DensityCheck {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool x_pattern = false;
  /// Set when an X-pattern block fails positivity: "a14" or "a23".
  std::string failing_block;

  bool hermitian() const { return hermiticity_defect <= kHermiticityTolerance; }
  bool unit_trace() const { return trace_defect <= kTraceTolerance; }
  bool positive() const { return min_eigenvalue >= kPositivitySlack; }
  bool ok() const { return hermitian() && unit_trace() && positive(); }
};

DensityCheck check_density_matrix(const DensityMatrix& m);

/// Throws ValidationError naming the first violated property.
void validate_density_matrix(const DensityMatrix& m);

/// True when every entry off the diagonal and anti-diagonal vanishes.
bool is_x_pattern(const CMatrix& m);

/// Partial transpose over the second qubit of a 4x4 matrix.
CMatrix partial_transpose_second(const CMatrix& m);
CMatrix partial_transpose_first(const CMatrix& m);

/// N = -2 * (sum of negative eigenvalues of the partial transpose), so a
/// Bell state has N = 1.
double negativity(const DensityMatrix& m);
double negativity(const ChannelState& ch);

std::string describe(const ChannelState& ch);

}  // namespace telroute
