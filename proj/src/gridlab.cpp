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

#include "filature/gridlab.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "filature/errors.hpp"

namespace filature {

namespace {

using nlohmann::ordered_json;

std::string format_fraction(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

// Splits CSV lines; the format never quotes, so a plain two-level split is
// exact.
std::vector<std::vector<std::string>> split_csv(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    std::string_view line = csv.substr(pos, eol - pos);
    if (!line.empty()) {
      std::vector<std::string> cells;
      std::size_t cell_start = 0;
      while (true) {
        const std::size_t comma = line.find(',', cell_start);
        if (comma == std::string_view::npos) {
          cells.emplace_back(line.substr(cell_start));
          break;
        }
        cells.emplace_back(line.substr(cell_start, comma - cell_start));
        cell_start = comma + 1;
      }
      rows.push_back(std::move(cells));
    }
    pos = eol + 1;
  }
  return rows;
}

const Script* find_script(const std::vector<Script>& scripts,
                          SupportLabel label) {
  for (const Script& script : scripts) {
    if (script.label == label) return &script;
  }
  return nullptr;
}

}  // namespace

void validate_script_thresholds(double theta_mandatory, double theta_optional) {
  if (!(theta_optional >= 0) || !(theta_mandatory <= 1) ||
      !(theta_optional <= theta_mandatory)) {
    throw InvalidThresholds(
        "need 0 <= theta_optional <= theta_mandatory <= 1, got "
        "theta_optional=" + std::to_string(theta_optional) +
        " theta_mandatory=" + std::to_string(theta_mandatory));
  }
}

void validate_gamma(double gamma) {
  if (!(gamma >= 0) || !(gamma <= 1)) {
    throw InvalidThresholds("need 0 <= gamma <= 1, got gamma=" +
                            std::to_string(gamma));
  }
}

CrossGrid build_grid(const std::vector<ThreadAnnotation>& annotations) {
  CrossGrid grid;
  grid.thread_ids.reserve(annotations.size());
  grid.columns.reserve(annotations.size());
  std::map<std::string_view, std::size_t> seen;
  for (const ThreadAnnotation& ann : annotations) {
    if (!seen.emplace(ann.thread_id, grid.thread_ids.size()).second) {
      throw DuplicateId("duplicate thread_id \"" + ann.thread_id +
                        "\" in grid input");
    }
    grid.thread_ids.push_back(ann.thread_id);
    grid.columns.push_back(presence_of(ann).bits);
  }
  return grid;
}

std::vector<CategorySupport> aggregate(
    const CrossGrid& grid,
    const std::vector<CategoryAssignment>& assignments) {
  std::map<std::string_view, std::size_t> column_of;
  for (std::size_t i = 0; i < grid.thread_ids.size(); ++i) {
    column_of.emplace(grid.thread_ids[i], i);
  }

  std::map<std::string_view, const CategoryAssignment*> by_thread;
  for (const CategoryAssignment& a : assignments) {
    auto col = column_of.find(a.thread_id);
    if (col == column_of.end()) {
      throw UnknownThread("assignment for thread \"" + a.thread_id +
                          "\" absent from the grid");
    }
    if (!by_thread.emplace(a.thread_id, &a).second) {
      throw DuplicateId("two assignments for thread \"" + a.thread_id + "\"");
    }
  }

  std::array<std::size_t, kSupportLabelCount> n{};
  std::array<std::array<std::size_t, kSlotTypeCount>, kSupportLabelCount>
      counts{};
  for (std::size_t col = 0; col < grid.thread_ids.size(); ++col) {
    auto it = by_thread.find(grid.thread_ids[col]);
    if (it == by_thread.end()) {
      throw UnknownThread("no assignment for thread \"" +
                          grid.thread_ids[col] + "\"");
    }
    for (SupportLabel label : it->second->assigned) {
      const auto li = static_cast<std::size_t>(label);
      ++n[li];
      for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
        if (grid.columns[col].test(s)) ++counts[li][s];
      }
    }
  }

  std::vector<CategorySupport> out(kSupportLabelCount);
  for (std::size_t li = 0; li < kSupportLabelCount; ++li) {
    out[li].label = static_cast<SupportLabel>(li);
    out[li].n = n[li];
    out[li].defined = n[li] > 0;
    if (out[li].defined) {
      for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
        out[li].support[s] =
            static_cast<double>(counts[li][s]) / static_cast<double>(n[li]);
      }
    }
  }
  return out;
}

std::vector<Script> induce_scripts(const std::vector<CategorySupport>& supports,
                                   double theta_mandatory,
                                   double theta_optional) {
  validate_script_thresholds(theta_mandatory, theta_optional);
  std::vector<Script> out;
  out.reserve(supports.size());
  for (const CategorySupport& cs : supports) {
    Script script;
    script.label = cs.label;
    script.theta_mandatory = theta_mandatory;
    script.theta_optional = theta_optional;
    script.n = cs.n;
    if (!cs.defined) {
      script.insufficient_data = true;
      out.push_back(std::move(script));
      continue;
    }
    for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
      const auto slot = static_cast<SlotType>(s);
      if (cs.support[s] >= theta_mandatory) {
        script.mandatory.push_back(slot);
      } else if (cs.support[s] >= theta_optional) {
        script.optional.push_back(slot);
      }
    }
    out.push_back(std::move(script));
  }
  return out;
}

ValidationReport validate_scripts(
    const std::vector<Script>& scripts,
    const std::vector<ThreadAnnotation>& holdout,
    const std::vector<CategoryAssignment>& assignments, double gamma) {
  validate_gamma(gamma);

  std::map<std::string_view, const CategoryAssignment*> by_thread;
  for (const CategoryAssignment& a : assignments) by_thread[a.thread_id] = &a;

  ValidationReport report;
  report.gamma = gamma;
  std::array<LabelConformance, kSupportLabelCount> tally;
  for (std::size_t i = 0; i < kSupportLabelCount; ++i) {
    tally[i].label = static_cast<SupportLabel>(i);
  }

  for (const ThreadAnnotation& ann : holdout) {
    auto it = by_thread.find(ann.thread_id);
    if (it == by_thread.end()) {
      throw UnknownThread("no assignment for holdout thread \"" +
                          ann.thread_id + "\"");
    }
    const CategoryAssignment& assignment = *it->second;
    if (assignment.assigned.empty()) {
      report.skipped_unassigned.push_back(ann.thread_id);
      continue;
    }
    const PresenceVector presence = presence_of(ann);
    for (SupportLabel label : assignment.assigned) {
      const Script* script = find_script(scripts, label);
      if (script == nullptr) {
        throw MissingScript("no script for label \"" +
                            std::string(to_string(label)) + "\"");
      }
      ThreadValidation tv;
      tv.thread_id = ann.thread_id;
      tv.label = label;
      if (script->mandatory.empty()) {
        tv.coverage = 1.0;  // vacuous: nothing is required
      } else {
        std::size_t present = 0;
        for (SlotType slot : script->mandatory) {
          if (presence.test(slot)) ++present;
        }
        tv.coverage = static_cast<double>(present) /
                      static_cast<double>(script->mandatory.size());
      }
      tv.conforms = tv.coverage >= gamma;
      auto& row = tally[static_cast<std::size_t>(label)];
      ++row.evaluated;
      if (tv.conforms) ++row.conforming;
      report.threads.push_back(std::move(tv));
    }
  }
  report.labels.assign(tally.begin(), tally.end());
  return report;
}

std::string grid_to_csv(const CrossGrid& grid) {
  std::ostringstream out;
  out << "slot";
  for (const std::string& id : grid.thread_ids) out << ',' << id;
  out << '\n';
  for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
    out << to_string(static_cast<SlotType>(s));
    for (const auto& column : grid.columns) {
      out << ',' << (column.test(s) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

CrossGrid grid_from_csv(std::string_view csv) {
  const auto rows = split_csv(csv);
  if (rows.size() != kSlotTypeCount + 1) {
    throw ParseError("grid CSV needs " + std::to_string(kSlotTypeCount + 1) +
                     " rows, found " + std::to_string(rows.size()));
  }
  if (rows[0].empty() || rows[0][0] != "slot") {
    throw ParseError("grid CSV header must start with \"slot\"", 1);
  }
  CrossGrid grid;
  grid.thread_ids.assign(rows[0].begin() + 1, rows[0].end());
  grid.columns.assign(grid.thread_ids.size(), {});
  for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
    const auto& row = rows[s + 1];
    const std::size_t line = s + 2;
    const auto expected = to_string(static_cast<SlotType>(s));
    if (row.empty() || row[0] != expected) {
      throw ParseError("grid CSV row " + std::to_string(line) +
                       " must start with \"" + std::string(expected) + "\"",
                       line);
    }
    if (row.size() != grid.thread_ids.size() + 1) {
      throw ParseError("grid CSV row " + std::to_string(line) +
                       " has the wrong cell count", line);
    }
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c] == "1") {
        grid.columns[c - 1].set(s);
      } else if (row[c] != "0") {
        throw ParseError("grid CSV cells must be 0 or 1, found \"" + row[c] +
                         "\"", line);
      }
    }
  }
  return grid;
}

std::string grid_to_json(const CrossGrid& grid) {
  ordered_json root;
  root["thread_ids"] = grid.thread_ids;
  ordered_json rows = ordered_json::array();
  for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
    ordered_json row;
    row["slot"] = std::string(to_string(static_cast<SlotType>(s)));
    ordered_json cells = ordered_json::array();
    for (const auto& column : grid.columns) {
      cells.push_back(column.test(s) ? 1 : 0);
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string scripts_to_json(const std::vector<Script>& scripts) {
  ordered_json root;
  if (!scripts.empty()) {
    root["theta_mandatory"] = scripts.front().theta_mandatory;
    root["theta_optional"] = scripts.front().theta_optional;
  }
  ordered_json rows = ordered_json::array();
  for (const Script& script : scripts) {
    ordered_json row;
    row["label"] = std::string(to_string(script.label));
    row["n"] = script.n;
    row["insufficient_data"] = script.insufficient_data;
    ordered_json mandatory = ordered_json::array();
    for (SlotType slot : script.mandatory) {
      mandatory.push_back(std::string(to_string(slot)));
    }
    ordered_json optional = ordered_json::array();
    for (SlotType slot : script.optional) {
      optional.push_back(std::string(to_string(slot)));
    }
    row["mandatory"] = std::move(mandatory);
    row["optional"] = std::move(optional);
    rows.push_back(std::move(row));
  }
  root["scripts"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string report_markdown(const std::vector<Script>& scripts,
                            const std::vector<CategorySupport>& supports) {
  std::map<SupportLabel, const CategorySupport*> support_of;
  for (const CategorySupport& cs : supports) support_of[cs.label] = &cs;

  std::ostringstream out;
  out << "# Prototype request scripts\n";

  for (const Script& script : scripts) {
    out << "\n## " << to_string(script.label) << " (n=" << script.n << ")\n\n";
    if (script.insufficient_data) {
      out << "No thread carries this label; no script can be induced.\n";
      continue;
    }
    const CategorySupport* cs = nullptr;
    if (auto it = support_of.find(script.label); it != support_of.end()) {
      cs = it->second;
    }
    auto list = [&](const std::vector<SlotType>& slots, const char* title) {
      out << title;
      if (slots.empty()) {
        out << " none\n";
        return;
      }
      out << "\n";
      for (SlotType slot : slots) {
        out << "- " << to_string(slot);
        if (cs != nullptr) {
          out << " (support "
              << format_fraction(cs->support[static_cast<std::size_t>(slot)])
              << ")";
        }
        out << "\n";
      }
    };
    list(script.mandatory, "Mandatory slots:");
    out << "\n";
    list(script.optional, "Optional slots:");
  }

  // Contrasts across categories, computed over scripts with data.
  std::vector<const Script*> defined;
  for (const Script& script : scripts) {
    if (!script.insufficient_data) defined.push_back(&script);
  }
  out << "\n## Contrasts\n\n";
  if (defined.empty()) {
    out << "No category has data; no contrasts to report.\n";
    return out.str();
  }
  std::array<std::vector<const Script*>, kSlotTypeCount> carriers;
  for (const Script* script : defined) {
    for (SlotType slot : script->mandatory) {
      carriers[static_cast<std::size_t>(slot)].push_back(script);
    }
    for (SlotType slot : script->optional) {
      carriers[static_cast<std::size_t>(slot)].push_back(script);
    }
  }
  bool any_unique = false;
  for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
    if (carriers[s].size() == 1) {
      const Script* only = carriers[s].front();
      const bool mandatory =
          std::find(only->mandatory.begin(), only->mandatory.end(),
                    static_cast<SlotType>(s)) != only->mandatory.end();
      out << "- " << to_string(static_cast<SlotType>(s))
          << " appears in the " << to_string(only->label)
          << " script only (" << (mandatory ? "mandatory" : "optional")
          << ").\n";
      any_unique = true;
    }
  }
  if (!any_unique) out << "- No slot is specific to a single category.\n";

  std::vector<std::string_view> everywhere;
  std::vector<std::string_view> nowhere;
  for (std::size_t s = 0; s < kSlotTypeCount; ++s) {
    if (carriers[s].size() == defined.size()) {
      everywhere.push_back(to_string(static_cast<SlotType>(s)));
    } else if (carriers[s].empty()) {
      nowhere.push_back(to_string(static_cast<SlotType>(s)));
    }
  }
  auto join = [](const std::vector<std::string_view>& names) {
    std::string text;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) text += ", ";
      text += names[i];
    }
    return text;
  };
  if (!everywhere.empty()) {
    out << "- Present in every category script: " << join(everywhere)
        << ".\n";
  }
  if (!nowhere.empty()) {
    out << "- Present in no script: " << join(nowhere) << ".\n";
  }
  return out.str();
}

std::string validation_to_json(const ValidationReport& report) {
  ordered_json root;
  root["gamma"] = report.gamma;
  ordered_json threads = ordered_json::array();
  for (const ThreadValidation& tv : report.threads) {
    ordered_json row;
    row["thread_id"] = tv.thread_id;
    row["label"] = std::string(to_string(tv.label));
    row["coverage"] = tv.coverage;
    row["conforms"] = tv.conforms;
    threads.push_back(std::move(row));
  }
  root["threads"] = std::move(threads);
  ordered_json labels = ordered_json::array();
  for (const LabelConformance& lc : report.labels) {
    ordered_json row;
    row["label"] = std::string(to_string(lc.label));
    row["evaluated"] = lc.evaluated;
    row["conforming"] = lc.conforming;
    row["conformance_rate"] =
        lc.evaluated > 0
            ? static_cast<double>(lc.conforming) /
                  static_cast<double>(lc.evaluated)
            : 0.0;
    labels.push_back(std::move(row));
  }
  root["labels"] = std::move(labels);
  root["skipped_unassigned"] = report.skipped_unassigned;
  return root.dump(2) + "\n";
}

std::string validation_to_markdown(const ValidationReport& report) {
  std::ostringstream out;
  out << "# Script validation\n\n";
  out << "Conformance threshold gamma = " << format_fraction(report.gamma)
      << ".\n\n";
  out << "| thread | label | coverage | conforms |\n";
  out << "|---|---|---|---|\n";
  for (const ThreadValidation& tv : report.threads) {
    out << "| " << tv.thread_id << " | " << to_string(tv.label) << " | "
        << format_fraction(tv.coverage) << " | "
        << (tv.conforms ? "yes" : "no") << " |\n";
  }
  out << "\n## Per-category conformance\n\n";
  for (const LabelConformance& lc : report.labels) {
    out << "- " << to_string(lc.label) << ": " << lc.conforming << "/"
        << lc.evaluated << " conforming\n";
  }
  if (!report.skipped_unassigned.empty()) {
    out << "\n## Skipped (no label assigned)\n\n";
    for (const std::string& id : report.skipped_unassigned) {
      out << "- " << id << "\n";
    }
  }
  return out.str();
}

}  // namespace filature
