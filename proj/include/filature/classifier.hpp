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

#ifndef FILATURE_CLASSIFIER_HPP_
#define FILATURE_CLASSIFIER_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filature/annotator.hpp"
#include "filature/lexicon.hpp"
#include "filature/types.hpp"

namespace filature {

inline constexpr double kDefaultTauAssign = 0.5;
inline constexpr double kDefaultTauUnclassifiable = 0.3;

/// Feature template for one support category. Slot weights reward present
/// slots of the request; cue weights reward specific rules having fired
/// anywhere in the thread. All weights non-negative, at least one positive.
struct CategoryModel {
  SupportLabel label;
  std::map<SlotType, double> slot_weights;
  std::map<std::string, double> cue_weights;
};

struct CategoryAssignment {
  std::string thread_id;
  std::array<double, kSupportLabelCount> scores{};
  std::vector<SupportLabel> assigned;  // enum order
  bool unclassifiable = false;
};

/// Throws InvalidThresholds unless 0 <= tau_unclassifiable <= tau_assign
/// <= 1. classify runs this itself; the CLI also calls it up front.
void validate_taus(double tau_assign, double tau_unclassifiable);

/// Parses a model file and checks it: exactly one model per SupportLabel
/// (missing → IncompleteModels, repeated → DuplicateId), weights finite
/// and non-negative with a positive sum (→ InvalidWeight), slot names
/// known (→ InvalidReference). When a lexicon is supplied, cue rule_ids
/// must exist in it (→ InvalidReference). Models are returned in
/// SupportLabel order.
std::vector<CategoryModel> load_models(std::string_view raw,
                                       const Lexicon* lexicon = nullptr);

/// Normalized additive overlap between the thread's features and the
/// model: present slots and fired cues contribute their weight; the sum is
/// divided by the total weight. Always in [0,1].
double score(const ThreadAnnotation& annotation, const CategoryModel& model);

/// Multi-label assignment: every label scoring >= tau_assign is assigned;
/// the thread is unclassifiable when no label reaches tau_unclassifiable.
/// Requires 0 <= tau_unclassifiable <= tau_assign <= 1 (InvalidThresholds).
CategoryAssignment classify(const ThreadAnnotation& annotation,
                            const std::vector<CategoryModel>& models,
                            double tau_assign = kDefaultTauAssign,
                            double tau_unclassifiable = kDefaultTauUnclassifiable);

/// Thread ids of unclassifiable assignments, input order preserved.
std::vector<std::string> exceptions(
    const std::vector<CategoryAssignment>& assignments);

std::string assignments_to_json(
    const std::vector<CategoryAssignment>& assignments, double tau_assign,
    double tau_unclassifiable);

std::string assignments_to_csv(
    const std::vector<CategoryAssignment>& assignments);

std::string exceptions_to_json(const std::vector<std::string>& thread_ids);

}  // namespace filature

#endif  // FILATURE_CLASSIFIER_HPP_
