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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "telroute/errors.hpp"

namespace telroute {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kQuarterPi)) {
    throw DomainError("theta must lie in [0, pi/4], got " + fmt(theta));
  }
}

double negativity_from_eigenvalues(const std::vector<double>& eig) {
  double neg = 0.0;
  for (double v : eig) neg += std::min(v, 0.0);
  return -2.0 * neg;
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 2 && m_.dim() != 4) {
    throw DomainError("density matrices must be 2x2 or 4x4");
  }
}

DensityMatrix DensityMatrix::from_ket(const std::vector<cplx>& ket) {
  return DensityMatrix(CMatrix::outer(ket));
}

ChannelState make_pure_channel(double theta) {
  require_theta(theta);
  return PureSchmidtChannel{theta};
}

ChannelState make_bell_channel() { return PureSchmidtChannel{kQuarterPi}; }

ChannelState make_werner_gen(double p_w, double theta) {
  if (!(p_w >= 0.0 && p_w <= 1.0)) {
    throw DomainError("p_w must lie in [0, 1], got " + fmt(p_w));
  }
  require_theta(theta);
  return WernerGenChannel{p_w, theta};
}

ChannelState make_xstate(const XState& x) {
  check_xstate(x);
  return x;
}

XState to_xstate(const ChannelState& ch) {
  struct Visitor {
    XState operator()(const PureSchmidtChannel& p) const {
      const double c = std::cos(p.theta);
      const double s = std::sin(p.theta);
      return XState{c * c, 0.0, 0.0, s * s, c * s, 0.0};
    }
    XState operator()(const XState& x) const { return x; }
    XState operator()(const WernerGenChannel& w) const {
      const double c = std::cos(w.theta);
      const double s = std::sin(w.theta);
      const double noise = (1.0 - w.p_w) / 4.0;
      return XState{w.p_w * c * c + noise, noise,     noise,
                    w.p_w * s * s + noise, w.p_w * c * s, 0.0};
    }
  };
  return std::visit(Visitor{}, ch);
}

void check_xstate(const XState& x) {
  validate_density_matrix(to_density_matrix(x));
}

DensityMatrix to_density_matrix(const XState& x) {
  CMatrix m(4);
  m(0, 0) = x.a11;
  m(1, 1) = x.a22;
  m(2, 2) = x.a33;
  m(3, 3) = x.a44;
  m(0, 3) = x.a14;
  m(3, 0) = std::conj(x.a14);
  m(1, 2) = x.a23;
  m(2, 1) = std::conj(x.a23);
  return DensityMatrix(std::move(m));
}

DensityMatrix to_density_matrix(const ChannelState& ch) {
  if (const auto* p = std::get_if<PureSchmidtChannel>(&ch)) require_theta(p->theta);
  if (const auto* w = std::get_if<WernerGenChannel>(&ch)) {
    make_werner_gen(w->p_w, w->theta);
  }
  DensityMatrix m = to_density_matrix(to_xstate(ch));
  validate_density_matrix(m);
  return m;
}

bool is_x_pattern(const CMatrix& m) {
  if (m.dim() != 4) return false;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (r != c && r + c != 3 && m(r, c) != cplx{}) return false;
    }
  }
  return true;
}

DensityCheck check_density_matrix(const DensityMatrix& dm) {
  const CMatrix& m = dm.matrix();
  DensityCheck out;
  out.hermiticity_defect = hermiticity_defect(m);
  out.trace_defect = std::abs(m.trace() - 1.0);
  out.x_pattern = is_x_pattern(m);
  if (out.x_pattern) {
    // The outer block {|00>,|11>} and inner block {|01>,|10>} decouple.
    const auto outer =
        hermitian_eigenvalues_2x2(m(0, 0).real(), m(0, 3), m(3, 3).real());
    const auto inner =
        hermitian_eigenvalues_2x2(m(1, 1).real(), m(1, 2), m(2, 2).real());
    out.min_eigenvalue = std::min(outer.first, inner.first);
    // Name a coherence only when the block's populations are themselves
    // non-negative; otherwise the diagonal is at fault.
    const bool outer_diag_ok = m(0, 0).real() >= 0.0 && m(3, 3).real() >= 0.0;
    const bool inner_diag_ok = m(1, 1).real() >= 0.0 && m(2, 2).real() >= 0.0;
    if (outer.first < kPositivitySlack && outer_diag_ok) {
      out.failing_block = "a14";
    } else if (inner.first < kPositivitySlack && inner_diag_ok) {
      out.failing_block = "a23";
    }
  } else {
    out.min_eigenvalue = hermitian_eigenvalues(m).front();
  }
  return out;
}

void validate_density_matrix(const DensityMatrix& m) {
  using P = ValidationError::Property;
  const DensityCheck check = check_density_matrix(m);
  if (!check.hermitian()) {
    throw ValidationError(P::kHermiticity, check.hermiticity_defect,
                          "not Hermitian: max |m_ij - conj(m_ji)| = " +
                              fmt(check.hermiticity_defect));
  }
  if (!check.unit_trace()) {
    throw ValidationError(P::kTrace, check.trace_defect,
                          "trace differs from 1 by " + fmt(check.trace_defect));
  }
  if (!check.positive()) {
    std::string what = "negative eigenvalue " + fmt(check.min_eigenvalue);
    if (check.failing_block == "a14") {
      what = "PSD: |a14|^2 > a11*a44 (" + what + ")";
    } else if (check.failing_block == "a23") {
      what = "PSD: |a23|^2 > a22*a33 (" + what + ")";
    }
    throw ValidationError(P::kPositivity, check.min_eigenvalue, what);
  }
}

CMatrix partial_transpose_second(const CMatrix& m) {
  if (m.dim() != 4) throw DomainError("partial transpose needs a 4x4 matrix");
  CMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
        }
      }
    }
  }
  return out;
}

CMatrix partial_transpose_first(const CMatrix& m) {
  if (m.dim() != 4) throw DomainError("partial transpose needs a 4x4 matrix");
  CMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t ap = 0; ap < 2; ++ap) {
        for (std::size_t bp = 0; bp < 2; ++bp) {
          out(2 * a + b, 2 * ap + bp) = m(2 * ap + b, 2 * a + bp);
        }
      }
    }
  }
  return out;
}

double negativity(const DensityMatrix& dm) {
  if (dm.dim() != 4) throw DomainError("negativity needs a two-qubit state");
  const CMatrix pt = partial_transpose_second(dm.matrix());
  if (is_x_pattern(pt)) {
    const auto outer =
        hermitian_eigenvalues_2x2(pt(0, 0).real(), pt(0, 3), pt(3, 3).real());
    const auto inner =
        hermitian_eigenvalues_2x2(pt(1, 1).real(), pt(1, 2), pt(2, 2).real());
    return negativity_from_eigenvalues(
        {outer.first, outer.second, inner.first, inner.second});
  }
  return negativity_from_eigenvalues(hermitian_eigenvalues(pt));
}

double negativity(const ChannelState& ch) {
  return negativity(to_density_matrix(ch));
}

std::string describe(const ChannelState& ch) {
  struct Visitor {
    std::string operator()(const PureSchmidtChannel& p) const {
      return "pure(theta=" + fmt(p.theta) + ")";
    }
    std::string operator()(const XState& x) const {
      return "x(a11=" + fmt(x.a11) + ", a22=" + fmt(x.a22) +
             ", a33=" + fmt(x.a33) + ", a44=" + fmt(x.a44) + ")";
    }
    std::string operator()(const WernerGenChannel& w) const {
      return "werner(p_w=" + fmt(w.p_w) + ", theta=" + fmt(w.theta) + ")";
    }
  };
  return std::visit(Visitor{}, ch);
}

}  // namespace telroute
