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

#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

void validate_shape(const Instance& instance, const Allocation& allocation) {
  if (allocation.agent_count() != instance.agent_count()) {
    throw InputError("allocation has the wrong number of bundles");
  }
  if (!allocation.is_disjoint()) throw InputError("allocation bundles overlap");
  for (const Bundle& bundle : allocation.bundles) {
    for (int g : bundle) {
      if (g < 0 || g >= instance.good_count()) {
        throw InputError("allocated good id out of range");
      }
    }
  }
}

void validate_complete(const Instance& instance, const Allocation& allocation) {
  validate_shape(instance, allocation);
  if (allocation.assigned_count() != instance.good_count()) {
    throw InputError("allocation does not cover every good");
  }
}

// Checks one ordered pair and fills `out` when the property fails for it.
bool pair_violation(const Instance& instance, const Allocation& allocation,
                    FairnessProperty property, int envier, int envied,
                    Violation& out) {
  const Bundle& own = allocation.bundles[static_cast<size_t>(envier)];
  const Bundle& other = allocation.bundles[static_cast<size_t>(envied)];
  const Rational mine = instance.bundle_value(envier, own);
  const Rational theirs = instance.bundle_value(envier, other);

  switch (property) {
    case FairnessProperty::kEf1: {
      if (other.empty()) return false;
      // Best single removal: the good the envier values most.
      int witness = other.front();
      for (int g : other) {
        if (instance.value(envier, g) > instance.value(envier, witness)) {
          witness = g;
        }
      }
      const Rational margin = theirs - instance.value(envier, witness) - mine;
      if (margin <= 0) return false;
      out = Violation{envier, envied, witness, margin};
      return true;
    }
    case FairnessProperty::kEfx: {
      // Worst permitted removal: the least positively valued good.
      int witness = -1;
      for (int g : other) {
        const Rational& v = instance.value(envier, g);
        if (v > 0 && (witness == -1 || v < instance.value(envier, witness))) {
          witness = g;
        }
      }
      if (witness == -1) return false;  // nothing positive to resent
      const Rational margin = theirs - instance.value(envier, witness) - mine;
      if (margin <= 0) return false;
      out = Violation{envier, envied, witness, margin};
      return true;
    }
    case FairnessProperty::kEfl: {
      int positive = 0;
      for (int g : other) {
        if (instance.value(envier, g) > 0) ++positive;
      }
      if (positive <= 1) return false;
      // A good certifies the pair when it both bounds the removal envy and
      // is itself matched by the envier's bundle; the margin is the best
      // good's distance from certifying.
      int witness = other.front();
      Rational margin;
      bool first = true;
      for (int g : other) {
        const Rational& v = instance.value(envier, g);
        const Rational candidate =
            std::max(Rational(theirs - v - mine), Rational(v - mine));
        if (first || candidate < margin) {
          witness = g;
          margin = candidate;
          first = false;
        }
      }
      if (margin <= 0) return false;
      out = Violation{envier, envied, witness, margin};
      return true;
    }
  }
  throw InternalError("unknown fairness property");
}

}  // namespace

std::string property_name(FairnessProperty property) {
  switch (property) {
    case FairnessProperty::kEf1:
      return "EF1";
    case FairnessProperty::kEfx:
      return "EFX";
    case FairnessProperty::kEfl:
      return "EFL";
  }
  throw InternalError("unknown fairness property");
}

FairnessReport evaluate_property(const Instance& instance,
                                 const Allocation& allocation,
                                 FairnessProperty property) {
  validate_shape(instance, allocation);
  FairnessReport report{property, true, {}};
  for (int i = 0; i < instance.agent_count(); ++i) {
    for (int j = 0; j < instance.agent_count(); ++j) {
      if (i == j) continue;
      Violation v{};
      if (pair_violation(instance, allocation, property, i, j, v)) {
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

FairnessReport check_ef1(const Instance& instance, const Allocation& allocation) {
  validate_complete(instance, allocation);
  return evaluate_property(instance, allocation, FairnessProperty::kEf1);
}

FairnessReport check_efx(const Instance& instance, const Allocation& allocation) {
  validate_complete(instance, allocation);
  return evaluate_property(instance, allocation, FairnessProperty::kEfx);
}

FairnessReport check_efl(const Instance& instance, const Allocation& allocation) {
  validate_complete(instance, allocation);
  return evaluate_property(instance, allocation, FairnessProperty::kEfl);
}

Rational nash_welfare_product(const Instance& instance,
                              const Allocation& allocation) {
  validate_shape(instance, allocation);
  Rational product = 1;
  for (int i = 0; i < instance.agent_count(); ++i) {
    product *=
        instance.bundle_value(i, allocation.bundles[static_cast<size_t>(i)]);
  }
  return product;
}

std::optional<Allocation> find_allocation_with(
    const Instance& instance, const CategoryStructure& constraints,
    FairnessProperty property, std::uint64_t limit) {
  std::optional<Allocation> found;
  enumerate_feasible(instance, constraints, limit,
                     [&](const Allocation& candidate) {
                       if (evaluate_property(instance, candidate, property)
                               .holds) {
                         found = candidate;
                         return false;
                       }
                       return true;
                     });
  return found;
}

MmsRatioReport verify_alpha_mms(const Instance& instance,
                                const CategoryStructure& constraints,
                                const Allocation& allocation,
                                const std::vector<Rational>& shares) {
  validate_complete(instance, allocation);
  if (!is_feasible(allocation, constraints)) {
    throw InputError("allocation violates the category caps");
  }
  if (shares.size() != static_cast<size_t>(instance.agent_count())) {
    throw InputError("one share per agent required");
  }
  MmsRatioReport report;
  report.per_agent.reserve(shares.size());
  for (int i = 0; i < instance.agent_count(); ++i) {
    const Rational& share = shares[static_cast<size_t>(i)];
    if (share < 0) throw InputError("negative maximin share");
    if (share == 0) {
      // Vacuous: any bundle meets a zero share, the quotient is "infinite".
      report.per_agent.push_back(std::nullopt);
      continue;
    }
    const Rational value =
        instance.bundle_value(i, allocation.bundles[static_cast<size_t>(i)]);
    report.per_agent.push_back(value / share);
    if (!report.min_ratio || *report.per_agent.back() < *report.min_ratio) {
      report.min_ratio = report.per_agent.back();
    }
  }
  return report;
}

}  // namespace fairdiv
