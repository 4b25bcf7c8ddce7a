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

#ifndef FILATURE_GRIDLAB_HPP_
#define FILATURE_GRIDLAB_HPP_

#include <array>
#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "filature/annotator.hpp"
#include "filature/classifier.hpp"
#include "filature/types.hpp"

namespace filature {

inline constexpr double kDefaultThetaMandatory = 0.8;
inline constexpr double kDefaultThetaOptional = 0.4;
inline constexpr double kDefaultGamma = 0.8;

/// Slot × thread presence matrix. Rows are the 18 slots in canonical
/// order; columns one per thread, input order.
struct CrossGrid {
  std::vector<std::string> thread_ids;
  std::vector<std::bitset<kSlotTypeCount>> columns;  // parallel to thread_ids

  bool cell(SlotType slot, std::size_t column) const {
    return columns[column].test(static_cast<std::size_t>(slot));
  }

  bool operator==(const CrossGrid&) const = default;
};

/// Per-category slot frequencies over the threads assigned that label.
/// When no thread carries the label the fractions are meaningless;
/// `defined` is false and `support` all zero.
struct CategorySupport {
  SupportLabel label;
  std::size_t n = 0;
  std::array<double, kSlotTypeCount> support{};
  bool defined = false;
};

/// Prototype script induced for one category: the slots a conforming
/// request is expected to realize (mandatory) or may realize (optional),
/// both in canonical slot order.
struct Script {
  SupportLabel label;
  std::vector<SlotType> mandatory;
  std::vector<SlotType> optional;
  double theta_mandatory = kDefaultThetaMandatory;
  double theta_optional = kDefaultThetaOptional;
  std::size_t n = 0;
  bool insufficient_data = false;
};

struct ThreadValidation {
  std::string thread_id;
  SupportLabel label;
  double coverage = 0;
  bool conforms = false;
};

struct LabelConformance {
  SupportLabel label;
  std::size_t evaluated = 0;
  std::size_t conforming = 0;
};

struct ValidationReport {
  double gamma = kDefaultGamma;
  std::vector<ThreadValidation> threads;      // one row per (thread, label)
  std::vector<LabelConformance> labels;       // enum order
  std::vector<std::string> skipped_unassigned;  // threads with no label
};

/// Throws InvalidThresholds unless 0 <= theta_optional <= theta_mandatory
/// <= 1. induce_scripts runs this itself.
void validate_script_thresholds(double theta_mandatory, double theta_optional);

/// Throws InvalidThresholds unless gamma lies in [0,1].
void validate_gamma(double gamma);

/// Builds the presence matrix. Presence is recomputed from the annotation
/// lists, so hand-built annotations grid identically to stored vectors.
/// Duplicate thread ids → DuplicateId.
CrossGrid build_grid(const std::vector<ThreadAnnotation>& annotations);

/// Slot support per category under multi-label counting: a thread counts
/// toward every label it is assigned. Assignments must cover the grid's
/// threads; an assignment for a thread outside the grid, a grid thread
/// without an assignment, or a duplicated assignment → UnknownThread /
/// DuplicateId. Returns one entry per SupportLabel in enum order.
std::vector<CategorySupport> aggregate(
    const CrossGrid& grid,
    const std::vector<CategoryAssignment>& assignments);

/// Thresholds the support fractions: support >= theta_mandatory is
/// mandatory, theta_optional <= support < theta_mandatory is optional.
/// Requires 0 <= theta_optional <= theta_mandatory <= 1. Categories with
/// n = 0 yield empty scripts flagged insufficient_data.
std::vector<Script> induce_scripts(
    const std::vector<CategorySupport>& supports,
    double theta_mandatory = kDefaultThetaMandatory,
    double theta_optional = kDefaultThetaOptional);

/// Checks held-out threads against the scripts of their assigned labels.
/// Coverage = fraction of the script's mandatory slots the request
/// realizes (1.0 for an empty mandatory list); a thread conforms when
/// coverage >= gamma. Threads assigned no label are skipped and listed.
/// gamma outside [0,1] → InvalidThresholds; a holdout thread without an
/// assignment → UnknownThread; an assigned label without a script →
/// MissingScript.
ValidationReport validate_scripts(
    const std::vector<Script>& scripts,
    const std::vector<ThreadAnnotation>& holdout,
    const std::vector<CategoryAssignment>& assignments,
    double gamma = kDefaultGamma);

/// Grid CSV: header "slot,<thread ids>", then 18 rows "SlotName,0,1,...";
/// LF line endings, no quoting (ids must not contain commas or newlines).
std::string grid_to_csv(const CrossGrid& grid);

/// Inverse of grid_to_csv; malformed input → ParseError with line info.
CrossGrid grid_from_csv(std::string_view csv);

std::string grid_to_json(const CrossGrid& grid);

std::string scripts_to_json(const std::vector<Script>& scripts);

/// Markdown summary of the induced scripts plus the contrasts the grid
/// exposes (slots unique to one category, shared by all, absent from all).
std::string report_markdown(const std::vector<Script>& scripts,
                            const std::vector<CategorySupport>& supports);

std::string validation_to_json(const ValidationReport& report);

std::string validation_to_markdown(const ValidationReport& report);

}  // namespace filature

#endif  // FILATURE_GRIDLAB_HPP_
