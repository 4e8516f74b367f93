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

#include "fairdiv/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>

#include "fairdiv/errors.hpp"
#include "json.hpp"

namespace fairdiv {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text, const char* what) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw InputError(std::string(what) + " is not valid JSON");
  }
  return doc;
}

void reject_unknown_keys(const ordered_json& object,
                         const std::vector<std::string>& known,
                         const char* what) {
  for (const auto& [key, unused] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InputError(std::string(what) + " has unknown key \"" + key + "\"");
    }
  }
}

int positive_int_field(const ordered_json& value, const char* what) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    throw InputError(std::string(what) + " must be an integer");
  }
  const std::int64_t raw = value.get<std::int64_t>();
  if (raw < 1 || raw > std::numeric_limits<int>::max()) {
    throw InputError(std::string(what) + " is out of range");
  }
  return static_cast<int>(raw);
}

Rational value_from_json(const ordered_json& value) {
  if (value.is_number_unsigned()) {
    return Rational(value.get<std::uint64_t>());
  }
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    // Fraction strings carry non-decadic denominators; everything else is a
    // plain integer or decimal literal.
    return text.find('/') != std::string::npos ? rational_from_fraction(text)
                                               : rational_from_decimal(text);
  }
  throw InputError("values must be integers or value strings");
}

ordered_json value_to_json(const Rational& value) {
  namespace mp = boost::multiprecision;
  const mp::cpp_int num = mp::numerator(value);
  const mp::cpp_int den = mp::denominator(value);
  if (den == 1) {
    if (num <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(num);
    }
    return num.str();
  }
  mp::cpp_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return rational_to_string(value);  // no finite decimal
  const int places = std::max(twos, fives);
  const mp::cpp_int scale = mp::pow(mp::cpp_int(10), static_cast<unsigned>(places));
  const mp::cpp_int scaled = num * scale / den;
  std::string fraction = mp::cpp_int(scaled % scale).str();
  fraction.insert(fraction.begin(),
                  static_cast<size_t>(places) - fraction.size(), '0');
  return mp::cpp_int(scaled / scale).str() + "." + fraction;
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (size_t g = 0; g < names.size(); ++g) {
    index.emplace(names[g], static_cast<int>(g));
  }
  return index;
}

ordered_json bundle_to_names(const Bundle& bundle,
                             const std::vector<std::string>& good_names) {
  ordered_json out = ordered_json::array();
  for (int g : bundle) {
    if (g < 0 || static_cast<size_t>(g) >= good_names.size()) {
      throw InputError("good id " + std::to_string(g) + " has no name");
    }
    out.push_back(good_names[static_cast<size_t>(g)]);
  }
  return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  const ordered_json doc = parse_document(text, "instance document");
  if (!doc.is_object()) {
    throw InputError("instance document must be a JSON object");
  }
  reject_unknown_keys(doc, {"agents", "goods", "values", "categories"},
                      "instance document");
  for (const char* field : {"agents", "goods", "values"}) {
    if (!doc.contains(field)) {
      throw InputError(std::string("instance document is missing \"") + field +
                       "\"");
    }
  }

  const int n_agents = positive_int_field(doc["agents"], "\"agents\"");

  const ordered_json& goods = doc["goods"];
  if (!goods.is_array()) throw InputError("\"goods\" must be an array");
  std::vector<std::string> names;
  for (const ordered_json& entry : goods) {
    if (!entry.is_string()) throw InputError("good names must be strings");
    const std::string name = entry.get<std::string>();
    if (name.empty()) throw InputError("good names must be nonempty");
    names.push_back(name);
  }
  const std::map<std::string, int> index = name_index(names);
  if (index.size() != names.size()) {
    throw InputError("good names must be distinct");
  }
  const int n_goods = static_cast<int>(names.size());

  const ordered_json& values = doc["values"];
  if (!values.is_array() || static_cast<int>(values.size()) != n_agents) {
    throw InputError("\"values\" must hold one row per agent");
  }
  std::vector<std::vector<Rational>> rows;
  for (const ordered_json& row : values) {
    if (!row.is_array() || static_cast<int>(row.size()) != n_goods) {
      throw InputError("every value row must hold one entry per good");
    }
    std::vector<Rational> parsed_row;
    for (const ordered_json& entry : row) parsed_row.push_back(value_from_json(entry));
    rows.push_back(std::move(parsed_row));
  }

  Instance instance(n_agents, n_goods, std::move(rows));

  if (!doc.contains("categories")) {
    return ParsedInstance{std::move(instance),
                          CategoryStructure::unconstrained(n_goods, n_agents),
                          std::move(names)};
  }

  const ordered_json& categories = doc["categories"];
  if (!categories.is_array()) {
    throw InputError("\"categories\" must be an array");
  }
  std::vector<Bundle> members;
  std::vector<int> caps;
  for (const ordered_json& entry : categories) {
    if (!entry.is_object()) throw InputError("each category must be an object");
    reject_unknown_keys(entry, {"goods", "cap"}, "category");
    if (!entry.contains("goods") || !entry.contains("cap")) {
      throw InputError("each category needs \"goods\" and \"cap\"");
    }
    const ordered_json& member_names = entry["goods"];
    if (!member_names.is_array()) {
      throw InputError("category \"goods\" must be an array");
    }
    Bundle ids;
    for (const ordered_json& name : member_names) {
      if (!name.is_string()) throw InputError("category goods must be names");
      const auto found = index.find(name.get<std::string>());
      if (found == index.end()) {
        throw InputError("category mentions unknown good \"" +
                         name.get<std::string>() + "\"");
      }
      ids.push_back(found->second);
    }
    std::sort(ids.begin(), ids.end());
    members.push_back(std::move(ids));
    caps.push_back(positive_int_field(entry["cap"], "category \"cap\""));
  }
  CategoryStructure constraints = CategoryStructure::create(
      n_goods, n_agents, std::move(members), std::move(caps));
  return ParsedInstance{std::move(instance), std::move(constraints),
                        std::move(names)};
}

std::string emit_instance(const ParsedInstance& parsed) {
  ordered_json doc;
  doc["agents"] = parsed.instance.agent_count();
  doc["goods"] = parsed.good_names;
  ordered_json values = ordered_json::array();
  for (int i = 0; i < parsed.instance.agent_count(); ++i) {
    ordered_json row = ordered_json::array();
    for (int g = 0; g < parsed.instance.good_count(); ++g) {
      row.push_back(value_to_json(parsed.instance.value(i, g)));
    }
    values.push_back(std::move(row));
  }
  doc["values"] = std::move(values);
  ordered_json categories = ordered_json::array();
  for (int h = 0; h < parsed.constraints.category_count(); ++h) {
    ordered_json entry;
    entry["goods"] = bundle_to_names(parsed.constraints.category(h),
                                     parsed.good_names);
    entry["cap"] = parsed.constraints.cap(h);
    categories.push_back(std::move(entry));
  }
  doc["categories"] = std::move(categories);
  return doc.dump() + "\n";
}

Allocation parse_allocation(const std::string& text,
                            const std::vector<std::string>& good_names,
                            int n_agents) {
  const ordered_json doc = parse_document(text, "allocation document");
  if (!doc.is_object()) {
    throw InputError("allocation document must be a JSON object");
  }
  reject_unknown_keys(doc, {"bundles"}, "allocation document");
  if (!doc.contains("bundles") || !doc["bundles"].is_array()) {
    throw InputError("allocation document needs a \"bundles\" array");
  }
  const ordered_json& bundles = doc["bundles"];
  if (static_cast<int>(bundles.size()) != n_agents) {
    throw InputError("expected " + std::to_string(n_agents) + " bundles, got " +
                     std::to_string(bundles.size()));
  }
  const std::map<std::string, int> index = name_index(good_names);
  std::vector<bool> seen(good_names.size(), false);
  Allocation allocation = Allocation::empty(n_agents);
  for (size_t b = 0; b < bundles.size(); ++b) {
    if (!bundles[b].is_array()) throw InputError("each bundle must be an array");
    Bundle ids;
    for (const ordered_json& name : bundles[b]) {
      if (!name.is_string()) throw InputError("bundles must hold good names");
      const auto found = index.find(name.get<std::string>());
      if (found == index.end()) {
        throw InputError("unknown good \"" + name.get<std::string>() + "\"");
      }
      if (seen[static_cast<size_t>(found->second)]) {
        throw InputError("good \"" + name.get<std::string>() +
                         "\" appears twice");
      }
      seen[static_cast<size_t>(found->second)] = true;
      ids.push_back(found->second);
    }
    std::sort(ids.begin(), ids.end());
    allocation.bundles[b] = std::move(ids);
  }
  return allocation;
}

std::string allocation_to_json_line(const Allocation& allocation,
                                    const std::vector<std::string>& good_names) {
  ordered_json doc;
  ordered_json bundles = ordered_json::array();
  for (const Bundle& bundle : allocation.bundles) {
    bundles.push_back(bundle_to_names(bundle, good_names));
  }
  doc["bundles"] = std::move(bundles);
  return doc.dump();
}

std::string emit_result(const ResultParts& parts,
                        const std::vector<std::string>& good_names) {
  ordered_json doc = ordered_json::object();
  if (parts.allocation) {
    ordered_json bundles = ordered_json::array();
    for (const Bundle& bundle : parts.allocation->bundles) {
      bundles.push_back(bundle_to_names(bundle, good_names));
    }
    doc["bundles"] = std::move(bundles);
  }
  if (parts.agent_values) {
    ordered_json values = ordered_json::array();
    for (const Rational& v : *parts.agent_values) {
      values.push_back(rational_to_string(v));
    }
    doc["agent_values"] = std::move(values);
  }
  if (parts.feasible) doc["feasible"] = *parts.feasible;
  if (parts.cap_violation) {
    ordered_json violation;
    violation["agent"] = parts.cap_violation->agent;
    violation["category"] = parts.cap_violation->category;
    doc["cap_violation"] = std::move(violation);
  }
  if (parts.independent) doc["independent"] = *parts.independent;
  if (!parts.reports.empty()) {
    ordered_json checks = ordered_json::array();
    for (const FairnessReport& report : parts.reports) {
      ordered_json check;
      check["property"] = property_name(report.property);
      check["holds"] = report.holds;
      ordered_json violations = ordered_json::array();
      for (const Violation& v : report.violations) {
        ordered_json entry;
        entry["envier"] = v.envier;
        entry["envied"] = v.envied;
        if (v.witness_good) {
          const int g = *v.witness_good;
          if (g < 0 || static_cast<size_t>(g) >= good_names.size()) {
            throw InputError("good id " + std::to_string(g) + " has no name");
          }
          entry["witness_good"] = good_names[static_cast<size_t>(g)];
        } else {
          entry["witness_good"] = nullptr;
        }
        entry["margin"] = rational_to_string(v.margin);
        violations.push_back(std::move(entry));
      }
      check["violations"] = std::move(violations);
      checks.push_back(std::move(check));
    }
    doc["checks"] = std::move(checks);
  }
  if (parts.nash_welfare) {
    doc["nash_welfare"] = rational_to_string(*parts.nash_welfare);
  }
  if (parts.mms) {
    ordered_json mms;
    mms["mode"] =
        parts.mms->mode == ShareMode::kExact ? "exact" : "lower-bound";
    ordered_json shares = ordered_json::array();
    for (const Rational& s : parts.mms->shares) {
      shares.push_back(rational_to_string(s));
    }
    mms["shares"] = std::move(shares);
    ordered_json ratios = ordered_json::array();
    for (const std::optional<Rational>& r : parts.mms->ratios.per_agent) {
      if (r) {
        ratios.push_back(rational_to_string(*r));
      } else {
        ratios.push_back(nullptr);
      }
    }
    mms["ratios"] = std::move(ratios);
    if (parts.mms->ratios.min_ratio) {
      mms["min_ratio"] = rational_to_string(*parts.mms->ratios.min_ratio);
    } else {
      mms["min_ratio"] = nullptr;
    }
    doc["mms"] = std::move(mms);
  }
  return doc.dump() + "\n";
}

}  // namespace fairdiv
