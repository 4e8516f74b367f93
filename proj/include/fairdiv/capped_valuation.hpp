// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_CAPPED_VALUATION_HPP_
#define FAIRDIV_CAPPED_VALUATION_HPP_

#include "fairdiv/instance.hpp"

namespace fairdiv {

// The k goods of `from` the agent values most, ties broken toward smaller
// ids; all of `from` when k >= |from|. Returned sorted by good id.
Bundle top_goods(const Instance& instance, int agent, const Bundle& from, int k);

// Cap-aware proxy valuation for one agent. For a bundle S it sums, per
// category h, the value of S's goods in h when the cap k_h is respected,
// and otherwise the value of the k_h goods the agent likes best there:
//
//   value(S) = sum_h top-k_h value of (S intersect C_h).
//
// Nonnegative, monotone and submodular in S; agrees with the plain additive
// valuation exactly on cap-feasible bundles. Owns copies of the instance
// and constraints, so temporaries are fine to construct from.
class CappedValuation {
 public:
  CappedValuation(const Instance& instance, const CategoryStructure& constraints,
                  int agent);

  int agent() const { return agent_; }

  Rational value(const Bundle& bundle) const;

  // Contribution of a single category: top-k_h value of (bundle & C_h).
  Rational category_value(int category, const Bundle& bundle) const;

  // value(bundle + good) - value(bundle); `good` must not be in `bundle`.
  Rational marginal_gain(const Bundle& bundle, int good) const;

 private:
  Instance instance_;
  CategoryStructure constraints_;
  int agent_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_CAPPED_VALUATION_HPP_
