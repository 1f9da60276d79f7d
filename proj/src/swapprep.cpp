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

#include "telroute/swapprep.hpp"

#include <algorithm>
#include <cmath>

#include "telroute/errors.hpp"

namespace telroute {

SwapFormulaResult swap_formula(double n1, double n2) {
  if (!(n1 >= 0.0 && n1 <= 1.0) || !(n2 >= 0.0 && n2 <= 1.0)) {
    throw DomainError("swap_formula negativities must lie in [0, 1]");
  }
  SwapFormulaResult r;
  r.delta1 = std::asin(n1) / 2.0;
  r.delta2 = std::asin(n2) / 2.0;
  r.gamma = 2.0 - std::cos(r.delta1 - r.delta2) - std::cos(r.delta1 + r.delta2);
  if (std::abs(r.gamma) < 1e-300 || (n1 == 0.0 && n2 == 0.0)) {
    throw DegenerateError("swap_formula: gamma vanishes for N1 = N2 = 0");
  }
  r.n_prime = 2.0 * n1 * n2 / r.gamma;
  r.p_success = (1.0 - std::sqrt(1.0 - n1) * std::sqrt(1.0 - n2)) / 2.0;
  r.physical = r.n_prime >= 0.0 && r.n_prime <= 1.0;
  return r;
}

MeasurementBasis::MeasurementBasis(std::array<Vector, 4> vectors)
    : vectors_(vectors) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < 4; ++k) dot += std::conj(vectors_[i][k]) * vectors_[j][k];
      const double defect = std::abs(dot - (i == j ? 1.0 : 0.0));
      if (defect > 1e-12) {
        throw ValidationError(ValidationError::Property::kStructure, defect,
                              "measurement basis is not orthonormal (vectors " +
                                  std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

MeasurementBasis MeasurementBasis::bell() {
  const double h = 1.0 / std::sqrt(2.0);
  return MeasurementBasis({{{h, 0.0, 0.0, h},
                            {h, 0.0, 0.0, -h},
                            {0.0, h, h, 0.0},
                            {0.0, h, -h, 0.0}}});
}

MeasurementBasis MeasurementBasis::computational() {
  return MeasurementBasis({{{1.0, 0.0, 0.0, 0.0},
                            {0.0, 1.0, 0.0, 0.0},
                            {0.0, 0.0, 1.0, 0.0},
                            {0.0, 0.0, 0.0, 1.0}}});
}

std::array<SwapBranch, 4> simulate_swap(const PureSchmidtChannel& ch1,
                                        const PureSchmidtChannel& ch2,
                                        const MeasurementBasis& basis) {
  make_pure_channel(ch1.theta);
  make_pure_channel(ch2.theta);
  // psi[x][y]: amplitude of |x y> in cos|00> + sin|11>.
  auto schmidt = [](double theta) {
    std::array<std::array<double, 2>, 2> psi{};
    psi[0][0] = std::cos(theta);
    psi[1][1] = std::sin(theta);
    return psi;
  };
  const auto left = schmidt(ch1.theta);   // (A, C1)
  const auto right = schmidt(ch2.theta);  // (C2, B)

  std::array<SwapBranch, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<cplx> post(4, 0.0);  // index 2*a + b
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        cplx acc = 0.0;
        for (std::size_t c1 = 0; c1 < 2; ++c1) {
          for (std::size_t c2 = 0; c2 < 2; ++c2) {
            acc += std::conj(basis[k][2 * c1 + c2]) * left[a][c1] * right[c2][b];
          }
        }
        post[2 * a + b] = acc;
      }
    }
    double prob = 0.0;
    for (const auto& v : post) prob += std::norm(v);
    out[k].outcome_index = static_cast<int>(k);
    out[k].probability = prob;
    if (prob >= kNullBranchProbability) {
      const double scale = 1.0 / std::sqrt(prob);
      for (auto& v : post) v *= scale;
      out[k].post_state = DensityMatrix::from_ket(post);
    }
  }
  return out;
}

PreparationPlan make_plan(const Network& net, const std::string& swap_node,
                          const std::string& link1, const std::string& link2) {
  if (!net.has_node(swap_node)) {
    throw DomainError("unknown swap node '" + swap_node + "'");
  }
  if (link1 == link2) throw DomainError("a plan needs two distinct links");
  const Link& l1 = net.link(link1);
  const Link& l2 = net.link(link2);
  if (!l1.touches(swap_node) || !l2.touches(swap_node)) {
    throw DomainError("both consumed links must touch " + swap_node);
  }
  const std::string& far1 = l1.other(swap_node);
  const std::string& far2 = l2.other(swap_node);
  if (far1 == far2) {
    throw DomainError("consumed links must reach two different nodes");
  }
  return PreparationPlan{swap_node, {link1, link2}, {far1, far2}};
}

namespace {

double pure_negativity(const Link& link) {
  const auto* pure = std::get_if<PureSchmidtChannel>(&link.channel);
  if (!pure) {
    throw DomainError("link '" + link.id +
                      "' is not a pure Schmidt channel; only pure links can be swapped");
  }
  return std::sin(2.0 * pure->theta);
}

bool route_uses(const RouteResult& r, const std::string& link_id) {
  return std::find(r.path.links.begin(), r.path.links.end(), link_id) !=
         r.path.links.end();
}

}  // namespace

PreparationAnalysis analyze_preparation(const Network& net, const std::string& src,
                                        const std::string& dst,
                                        const PreparationPlan& plan) {
  const PreparationPlan checked = make_plan(net, plan.swap_node, plan.consumed_links.first,
                                            plan.consumed_links.second);
  PreparationAnalysis out;
  out.base = exact_route(net, src, dst);
  for (const auto* id : {&checked.consumed_links.first, &checked.consumed_links.second}) {
    if (route_uses(out.base, *id)) {
      throw PlanConflictError("link '" + *id + "' lies on the optimal route " +
                              out.base.path.str());
    }
  }
  const double n1 = pure_negativity(net.link(checked.consumed_links.first));
  const double n2 = pure_negativity(net.link(checked.consumed_links.second));
  out.formula = swap_formula(n1, n2);
  if (!out.formula.physical) {
    throw UnphysicalSwapError("swap formula gives N' = " +
                              std::to_string(out.formula.n_prime) + " > 1");
  }

  const Network failed =
      net.without_links({checked.consumed_links.first, checked.consumed_links.second});
  out.failure = exact_route(failed, src, dst);

  Network succeeded = failed;
  std::string new_id = "swap:" + checked.consumed_links.first + "+" +
                       checked.consumed_links.second;
  while (succeeded.has_link(new_id)) new_id += "'";
  const double theta_prime = std::asin(out.formula.n_prime) / 2.0;
  succeeded.add_link(new_id, checked.created_endpoint_pair.first,
                     checked.created_endpoint_pair.second,
                     make_pure_channel(theta_prime));
  out.success = exact_route(succeeded, src, dst);

  const double p = out.formula.p_success;
  out.expected_fidelity =
      p * out.success.objective.fidelity + (1.0 - p) * out.failure.objective.fidelity;
  return out;
}

double preparation_expected_fidelity(const Network& net, const std::string& src,
                                     const std::string& dst,
                                     const PreparationPlan& plan) {
  return analyze_preparation(net, src, dst, plan).expected_fidelity;
}

std::vector<PreparationPlan> candidate_plans(const Network& net,
                                             const std::string& src,
                                             const std::string& dst,
                                             const std::string& swap_node) {
  const RouteResult base = exact_route(net, src, dst);
  std::vector<std::string> free_links;
  for (std::size_t pos : net.incident(swap_node)) {
    const Link& l = net.links()[pos];
    if (route_uses(base, l.id)) continue;
    if (!std::holds_alternative<PureSchmidtChannel>(l.channel)) continue;
    free_links.push_back(l.id);
  }
  std::sort(free_links.begin(), free_links.end());
  std::vector<PreparationPlan> plans;
  for (std::size_t i = 0; i < free_links.size(); ++i) {
    for (std::size_t j = i + 1; j < free_links.size(); ++j) {
      if (net.link(free_links[i]).other(swap_node) ==
          net.link(free_links[j]).other(swap_node)) {
        continue;
      }
      plans.push_back(make_plan(net, swap_node, free_links[i], free_links[j]));
    }
  }
  return plans;
}

}  // namespace telroute
