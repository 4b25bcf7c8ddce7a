/*
 * Copyright 2026 Filature Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "filature/classifier.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "filature/errors.hpp"

namespace filature {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double checked_weight(const json& value, const std::string& where) {
  if (!value.is_number()) {
    throw InvalidWeight(where + ": weight must be a number");
  }
  const double w = value.get<double>();
  if (!std::isfinite(w)) throw InvalidWeight(where + ": weight not finite");
  if (w < 0) throw InvalidWeight(where + ": negative weight");
  return w;
}

CategoryModel parse_model(const json& j, const Lexicon* lexicon) {
  if (!j.is_object()) throw ParseError("model entries must be objects");
  CategoryModel model;
  bool have_label = false;
  std::string label_name;
  for (const auto& item : j.items()) {
    const auto& key = item.key();
    const auto& value = item.value();
    if (key == "label") {
      if (!value.is_string()) throw ParseError("model label must be a string");
      label_name = value.get<std::string>();
      have_label = true;
    } else if (key == "slot_weights" || key == "cue_weights") {
      if (!value.is_object()) {
        throw ParseError("model " + key + " must be an object");
      }
    } else {
      throw ParseError("unknown field \"" + key + "\" in model");
    }
  }
  if (!have_label) throw ParseError("model without label");
  const auto label = parse_support_label(label_name);
  if (!label) {
    throw InvalidReference("unknown support label \"" + label_name + "\"");
  }
  model.label = *label;
  const std::string where = "model \"" + label_name + "\"";

  if (auto it = j.find("slot_weights"); it != j.end()) {
    for (const auto& item : it->items()) {
      const auto slot = parse_slot_type(item.key());
      if (!slot) {
        throw InvalidReference(where + ": unknown slot \"" + item.key() +
                               "\"");
      }
      model.slot_weights[*slot] =
          checked_weight(item.value(), where + " slot " + item.key());
    }
  }
  if (auto it = j.find("cue_weights"); it != j.end()) {
    for (const auto& item : it->items()) {
      if (lexicon != nullptr && lexicon->find(item.key()) == nullptr) {
        throw InvalidReference(where + ": unknown rule_id \"" + item.key() +
                               "\"");
      }
      model.cue_weights[item.key()] =
          checked_weight(item.value(), where + " cue " + item.key());
    }
  }

  double total = 0;
  for (const auto& [slot, w] : model.slot_weights) total += w;
  for (const auto& [cue, w] : model.cue_weights) total += w;
  if (total <= 0) throw InvalidWeight(where + ": no positive weight");
  return model;
}

}  // namespace

void validate_taus(double tau_assign, double tau_unclassifiable) {
  if (!(tau_unclassifiable >= 0) || !(tau_assign <= 1) ||
      !(tau_unclassifiable <= tau_assign)) {
    throw InvalidThresholds(
        "need 0 <= tau_unclassifiable <= tau_assign <= 1, got "
        "tau_unclassifiable=" + std::to_string(tau_unclassifiable) +
        " tau_assign=" + std::to_string(tau_assign));
  }
}

std::vector<CategoryModel> load_models(std::string_view raw,
                                       const Lexicon* lexicon) {
  json root;
  try {
    root = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("models: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("model file root must be an object");
  for (const auto& item : root.items()) {
    if (item.key() != "models") {
      throw ParseError("unknown field \"" + item.key() + "\" in model file");
    }
  }
  auto it = root.find("models");
  if (it == root.end()) throw ParseError("model file: missing \"models\"");
  if (!it->is_array()) throw ParseError("\"models\" must be an array");

  std::vector<const CategoryModel*> by_label(kSupportLabelCount, nullptr);
  std::vector<CategoryModel> parsed;
  parsed.reserve(it->size());
  for (const json& jm : *it) parsed.push_back(parse_model(jm, lexicon));
  for (const CategoryModel& model : parsed) {
    auto& cell = by_label[static_cast<std::size_t>(model.label)];
    if (cell != nullptr) {
      throw DuplicateId("two models for label \"" +
                        std::string(to_string(model.label)) + "\"");
    }
    cell = &model;
  }
  std::vector<CategoryModel> out;
  out.reserve(kSupportLabelCount);
  for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
    if (by_label[i] == nullptr) {
      throw IncompleteModels(
          "no model for label \"" +
          std::string(to_string(static_cast<SupportLabel>(i))) + "\"");
    }
    out.push_back(*by_label[i]);
  }
  return out;
}

double score(const ThreadAnnotation& annotation, const CategoryModel& model) {
  std::set<std::string_view> fired;
  for (const SlotAnnotation& sa : annotation.slot_annotations) {
    fired.insert(sa.rule_id);
  }
  for (const ReactionAnnotation& ra : annotation.reaction_annotations) {
    fired.insert(ra.rule_id);
  }

  double hit = 0;
  double total = 0;
  for (const auto& [slot, w] : model.slot_weights) {
    total += w;
    if (annotation.presence.test(slot)) hit += w;
  }
  for (const auto& [cue, w] : model.cue_weights) {
    total += w;
    if (fired.count(cue)) hit += w;
  }
  return total > 0 ? hit / total : 0.0;
}

CategoryAssignment classify(const ThreadAnnotation& annotation,
                            const std::vector<CategoryModel>& models,
                            double tau_assign, double tau_unclassifiable) {
  validate_taus(tau_assign, tau_unclassifiable);

  CategoryAssignment out;
  out.thread_id = annotation.thread_id;
  double best = 0;
  for (const CategoryModel& model : models) {
    const double s = score(annotation, model);
    out.scores[static_cast<std::size_t>(model.label)] = s;
    if (s > best) best = s;
  }
  for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
    if (out.scores[i] >= tau_assign) {
      out.assigned.push_back(static_cast<SupportLabel>(i));
    }
  }
  out.unclassifiable = best < tau_unclassifiable;
  if (out.unclassifiable) out.assigned.clear();
  return out;
}

std::vector<std::string> exceptions(
    const std::vector<CategoryAssignment>& assignments) {
  std::vector<std::string> out;
  for (const CategoryAssignment& a : assignments) {
    if (a.unclassifiable) out.push_back(a.thread_id);
  }
  return out;
}

std::string assignments_to_json(
    const std::vector<CategoryAssignment>& assignments, double tau_assign,
    double tau_unclassifiable) {
  ordered_json root;
  root["tau_assign"] = tau_assign;
  root["tau_unclassifiable"] = tau_unclassifiable;
  ordered_json rows = ordered_json::array();
  for (const CategoryAssignment& a : assignments) {
    ordered_json row;
    row["thread_id"] = a.thread_id;
    ordered_json scores;
    for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
      scores[std::string(to_string(static_cast<SupportLabel>(i)))] =
          a.scores[i];
    }
    row["scores"] = std::move(scores);
    ordered_json assigned = ordered_json::array();
    for (SupportLabel label : a.assigned) {
      assigned.push_back(std::string(to_string(label)));
    }
    row["assigned"] = std::move(assigned);
    row["unclassifiable"] = a.unclassifiable;
    rows.push_back(std::move(row));
  }
  root["assignments"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string assignments_to_csv(
    const std::vector<CategoryAssignment>& assignments) {
  std::ostringstream out;
  out << "thread_id";
  for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
    out << ',' << to_string(static_cast<SupportLabel>(i));
  }
  out << ",assigned,unclassifiable\n";
  for (const CategoryAssignment& a : assignments) {
    out << a.thread_id;
    for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
      out << ',' << json(a.scores[i]).dump();
    }
    out << ',';
    for (std::size_t i = 0; i < a.assigned.size(); ++i) {
      if (i > 0) out << ';';
      out << to_string(a.assigned[i]);
    }
    out << ',' << (a.unclassifiable ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string exceptions_to_json(const std::vector<std::string>& thread_ids) {
  ordered_json root;
  root["exceptions"] = thread_ids;
  return root.dump(2) + "\n";
}

}  // namespace filature
