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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "filature/annotator.hpp"
#include "filature/classifier.hpp"
#include "filature/corpus.hpp"
#include "filature/errors.hpp"
#include "filature/gridlab.hpp"
#include "filature/lexicon.hpp"
#include "filature/types.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;   // malformed or inconsistent file content
constexpr int kExitConfigError = 2;  // bad flags, thresholds, unusable paths

// Raised for unreadable/unwritable paths and other configuration problems
// that are not about file content.
struct ConfigError {
  std::string message;
};

struct Options {
  std::string corpus_path;
  std::string lexicon_path;
  std::string models_path;
  std::string holdout_path;
  std::string out_dir = ".";
  std::string format;
  double tau_assign = filature::kDefaultTauAssign;
  double tau_unclassifiable = filature::kDefaultTauUnclassifiable;
  double theta_mandatory = filature::kDefaultThetaMandatory;
  double theta_optional = filature::kDefaultThetaOptional;
  double gamma = filature::kDefaultGamma;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError{"cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ConfigError{"cannot read " + path};
  return buffer.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError{"cannot write " + path.string()};
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw ConfigError{"cannot write " + path.string()};
  std::cout << "wrote " << path.string() << "\n";
}

fs::path ensure_out_dir(const Options& opt) {
  fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError{"cannot create output directory " + dir.string()};
  return dir;
}

// Load helpers prefix errors with the file they come from; ParseError keeps
// its line/column when known.
template <typename F>
auto load_with_context(const std::string& path, F&& parse)
    -> decltype(parse(std::string_view{})) {
  const std::string raw = read_file(path);
  try {
    return parse(std::string_view(raw));
  } catch (const filature::ParseError& e) {
    std::string where = path;
    if (e.line() > 0) {
      where += ":" + std::to_string(e.line()) + ":" +
               std::to_string(e.column());
    }
    throw filature::ParseError(where + ": " + e.what(), e.line(), e.column());
  } catch (const filature::Error& e) {
    throw filature::Error(path + ": " + e.what());
  }
}

filature::Corpus load_corpus(const std::string& path) {
  return load_with_context(
      path, [](std::string_view raw) { return filature::parse_corpus(raw); });
}

filature::Lexicon load_lexicon_file(const std::string& path) {
  return load_with_context(
      path, [](std::string_view raw) { return filature::load_lexicon(raw); });
}

std::vector<filature::CategoryModel> load_models_file(
    const std::string& path, const filature::Lexicon& lexicon) {
  return load_with_context(path, [&](std::string_view raw) {
    return filature::load_models(raw, &lexicon);
  });
}

std::vector<filature::CategoryAssignment> classify_all(
    const std::vector<filature::ThreadAnnotation>& annotations,
    const std::vector<filature::CategoryModel>& models, const Options& opt) {
  std::vector<filature::CategoryAssignment> out;
  out.reserve(annotations.size());
  for (const auto& ann : annotations) {
    out.push_back(filature::classify(ann, models, opt.tau_assign,
                                     opt.tau_unclassifiable));
  }
  return out;
}

int run_ingest(const Options& opt) {
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  std::size_t messages = 0;
  for (const auto& thread : corpus.threads) messages += thread.size();
  std::cout << "corpus " << corpus.corpus_id << " (language "
            << corpus.language << "): " << corpus.threads.size()
            << " thread(s), " << messages << " message(s)\n";
  return kExitOk;
}

int run_annotate(const Options& opt) {
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const fs::path dir = ensure_out_dir(opt);
  write_file(dir / "annotated.json",
             filature::serialize_annotated(corpus, annotations));
  return kExitOk;
}

int run_classify(const Options& opt) {
  filature::validate_taus(opt.tau_assign, opt.tau_unclassifiable);
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto models = load_models_file(opt.models_path, lexicon);
  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const auto assignments = classify_all(annotations, models, opt);
  const fs::path dir = ensure_out_dir(opt);
  if (opt.format == "csv") {
    write_file(dir / "assignments.csv",
               filature::assignments_to_csv(assignments));
  } else {
    write_file(dir / "assignments.json",
               filature::assignments_to_json(assignments, opt.tau_assign,
                                             opt.tau_unclassifiable));
  }
  write_file(dir / "exceptions.json",
             filature::exceptions_to_json(filature::exceptions(assignments)));
  return kExitOk;
}

int run_grid(const Options& opt) {
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const filature::CrossGrid grid = filature::build_grid(annotations);
  const fs::path dir = ensure_out_dir(opt);
  if (opt.format == "json") {
    write_file(dir / "grid.json", filature::grid_to_json(grid));
  } else {
    write_file(dir / "grid.csv", filature::grid_to_csv(grid));
  }
  return kExitOk;
}

int run_induce(const Options& opt) {
  filature::validate_taus(opt.tau_assign, opt.tau_unclassifiable);
  filature::validate_script_thresholds(opt.theta_mandatory,
                                       opt.theta_optional);
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto models = load_models_file(opt.models_path, lexicon);
  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const auto assignments = classify_all(annotations, models, opt);
  const filature::CrossGrid grid = filature::build_grid(annotations);
  const auto supports = filature::aggregate(grid, assignments);
  const auto scripts = filature::induce_scripts(supports, opt.theta_mandatory,
                                                opt.theta_optional);
  const fs::path dir = ensure_out_dir(opt);
  write_file(dir / "scripts.json", filature::scripts_to_json(scripts));
  write_file(dir / "report.md", filature::report_markdown(scripts, supports));
  return kExitOk;
}

int run_validate(const Options& opt) {
  filature::validate_taus(opt.tau_assign, opt.tau_unclassifiable);
  filature::validate_script_thresholds(opt.theta_mandatory,
                                       opt.theta_optional);
  filature::validate_gamma(opt.gamma);
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto models = load_models_file(opt.models_path, lexicon);

  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const auto assignments = classify_all(annotations, models, opt);
  const filature::CrossGrid grid = filature::build_grid(annotations);
  const auto supports = filature::aggregate(grid, assignments);
  const auto scripts = filature::induce_scripts(supports, opt.theta_mandatory,
                                                opt.theta_optional);

  // Without a holdout corpus the scripts are checked against the threads
  // they were induced from.
  std::vector<filature::ThreadAnnotation> holdout_annotations;
  std::vector<filature::CategoryAssignment> holdout_assignments;
  if (opt.holdout_path.empty()) {
    holdout_annotations = annotations;
    holdout_assignments = assignments;
  } else {
    const filature::Corpus holdout = load_corpus(opt.holdout_path);
    holdout_annotations = filature::annotate_corpus(holdout, lexicon);
    holdout_assignments = classify_all(holdout_annotations, models, opt);
  }
  const auto report = filature::validate_scripts(
      scripts, holdout_annotations, holdout_assignments, opt.gamma);
  const fs::path dir = ensure_out_dir(opt);
  if (opt.format == "md") {
    write_file(dir / "validation.md", filature::validation_to_markdown(report));
  } else {
    write_file(dir / "validation.json", filature::validation_to_json(report));
  }
  return kExitOk;
}

int run_pipeline(const Options& opt) {
  filature::validate_taus(opt.tau_assign, opt.tau_unclassifiable);
  filature::validate_script_thresholds(opt.theta_mandatory,
                                       opt.theta_optional);
  filature::validate_gamma(opt.gamma);
  const filature::Corpus corpus = load_corpus(opt.corpus_path);
  const filature::Lexicon lexicon = load_lexicon_file(opt.lexicon_path);
  const auto models = load_models_file(opt.models_path, lexicon);

  std::size_t messages = 0;
  for (const auto& thread : corpus.threads) messages += thread.size();
  std::cout << "corpus " << corpus.corpus_id << " (language "
            << corpus.language << "): " << corpus.threads.size()
            << " thread(s), " << messages << " message(s)\n";

  const auto annotations = filature::annotate_corpus(corpus, lexicon);
  const auto assignments = classify_all(annotations, models, opt);
  const filature::CrossGrid grid = filature::build_grid(annotations);
  const auto supports = filature::aggregate(grid, assignments);
  const auto scripts = filature::induce_scripts(supports, opt.theta_mandatory,
                                                opt.theta_optional);

  std::vector<filature::ThreadAnnotation> holdout_annotations;
  std::vector<filature::CategoryAssignment> holdout_assignments;
  if (opt.holdout_path.empty()) {
    holdout_annotations = annotations;
    holdout_assignments = assignments;
  } else {
    const filature::Corpus holdout = load_corpus(opt.holdout_path);
    holdout_annotations = filature::annotate_corpus(holdout, lexicon);
    holdout_assignments = classify_all(holdout_annotations, models, opt);
  }
  const auto report = filature::validate_scripts(
      scripts, holdout_annotations, holdout_assignments, opt.gamma);

  const fs::path dir = ensure_out_dir(opt);
  write_file(dir / "annotated.json",
             filature::serialize_annotated(corpus, annotations));
  write_file(dir / "assignments.json",
             filature::assignments_to_json(assignments, opt.tau_assign,
                                           opt.tau_unclassifiable));
  write_file(dir / "exceptions.json",
             filature::exceptions_to_json(filature::exceptions(assignments)));
  write_file(dir / "grid.csv", filature::grid_to_csv(grid));
  write_file(dir / "scripts.json", filature::scripts_to_json(scripts));
  write_file(dir / "report.md", filature::report_markdown(scripts, supports));
  write_file(dir / "validation.json", filature::validation_to_json(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "filature: scripts and support categories of help-forum threads"};
  app.require_subcommand(1);
  Options opt;
  int command = 0;

  auto add_corpus = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", opt.corpus_path, "corpus file")->required();
  };
  auto add_lexicon = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", opt.lexicon_path, "lexicon file")->required();
  };
  auto add_models = [&](CLI::App* cmd) {
    cmd->add_option("--models", opt.models_path, "category model file")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_dir, "output directory");
  };
  auto add_taus = [&](CLI::App* cmd) {
    cmd->add_option("--tau-assign", opt.tau_assign,
                    "score needed to assign a label");
    cmd->add_option("--tau-unclassifiable", opt.tau_unclassifiable,
                    "best score below this marks the thread unclassifiable");
  };
  auto add_thetas = [&](CLI::App* cmd) {
    cmd->add_option("--theta-mandatory", opt.theta_mandatory,
                    "support needed for a mandatory slot");
    cmd->add_option("--theta-optional", opt.theta_optional,
                    "support needed for an optional slot");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "validate a corpus file");
  add_corpus(ingest);
  ingest->callback([&] { command = 1; });

  CLI::App* annotate =
      app.add_subcommand("annotate", "emit the annotated corpus");
  add_corpus(annotate);
  add_lexicon(annotate);
  add_out(annotate);
  annotate->callback([&] { command = 2; });

  CLI::App* classify =
      app.add_subcommand("classify", "assign support categories");
  add_corpus(classify);
  add_lexicon(classify);
  add_models(classify);
  add_out(classify);
  add_taus(classify);
  classify->add_option("--format", opt.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  classify->callback([&] { command = 3; });

  CLI::App* grid = app.add_subcommand("grid", "emit the slot presence grid");
  add_corpus(grid);
  add_lexicon(grid);
  add_out(grid);
  grid->add_option("--format", opt.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  grid->callback([&] { command = 4; });

  CLI::App* induce =
      app.add_subcommand("induce", "induce per-category prototype scripts");
  add_corpus(induce);
  add_lexicon(induce);
  add_models(induce);
  add_out(induce);
  add_taus(induce);
  add_thetas(induce);
  induce->callback([&] { command = 5; });

  CLI::App* validate =
      app.add_subcommand("validate", "validate scripts on held-out threads");
  add_corpus(validate);
  add_lexicon(validate);
  add_models(validate);
  add_out(validate);
  add_taus(validate);
  add_thetas(validate);
  validate->add_option("--holdout", opt.holdout_path,
                       "corpus to validate on (default: the training corpus)");
  validate->add_option("--gamma", opt.gamma,
                       "mandatory-slot coverage needed to conform");
  validate->add_option("--format", opt.format, "json (default) or md")
      ->check(CLI::IsMember({"json", "md"}));
  validate->callback([&] { command = 6; });

  CLI::App* pipeline =
      app.add_subcommand("pipeline", "run every stage and emit all artifacts");
  add_corpus(pipeline);
  add_lexicon(pipeline);
  add_models(pipeline);
  add_out(pipeline);
  add_taus(pipeline);
  add_thetas(pipeline);
  pipeline->add_option("--holdout", opt.holdout_path,
                       "corpus to validate on (default: the training corpus)");
  pipeline->add_option("--gamma", opt.gamma,
                       "mandatory-slot coverage needed to conform");
  pipeline->callback([&] { command = 7; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    switch (command) {
      case 1: return run_ingest(opt);
      case 2: return run_annotate(opt);
      case 3: return run_classify(opt);
      case 4: return run_grid(opt);
      case 5: return run_induce(opt);
      case 6: return run_validate(opt);
      case 7: return run_pipeline(opt);
      default: return kExitConfigError;
    }
  } catch (const ConfigError& e) {
    std::cerr << "filature: " << e.message << "\n";
    return kExitConfigError;
  } catch (const filature::InvalidThresholds& e) {
    std::cerr << "filature: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const filature::Error& e) {
    std::cerr << "filature: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "filature: " << e.what() << "\n";
    return kExitInputError;
  }
}
