// Copyright 2026 The CodeAlike Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "codealike/corpus.hpp"
#include "codealike/error.hpp"
#include "codealike/language_config.hpp"
#include "codealike/matcher.hpp"
#include "codealike/normalize.hpp"
#include "codealike/report.hpp"

namespace codealike::cli {

namespace {

namespace fs = std::filesystem;

struct ParamFlags {
  Params values;
  CLI::Option* k = nullptr;
  CLI::Option* t = nullptr;
  CLI::Option* q = nullptr;
  CLI::Option* b = nullptr;

  void Attach(CLI::App* app) {
    k = app->add_option("-k", values.k, "noise threshold (k-gram length)");
    t = app->add_option("-t", values.t, "guarantee threshold");
    q = app->add_option("-q", values.q, "hash modulus");
    b = app->add_option("--base", values.b, "rolling hash base");
  }

  bool AnyGiven() const {
    return k->count() + t->count() + q->count() + b->count() > 0;
  }

  // Store params with any explicit flag checked against them.
  Params ReconcileWith(const Params& store) const {
    Params wanted = store;
    if (k->count()) wanted.k = values.k;
    if (t->count()) wanted.t = values.t;
    if (q->count()) wanted.q = values.q;
    if (b->count()) wanted.b = values.b;
    if (wanted != store) {
      throw Error(ErrorCode::kParamsMismatch,
                  "store uses " + FormatParams(store) + ", requested " +
                      FormatParams(wanted));
    }
    return store;
  }
};

struct OutputFlags {
  std::string format = "text";
  std::string out_path;
  bool no_timestamps = false;

  void Attach(CLI::App* app) {
    app->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "html"}));
    app->add_option("--out", out_path, "write the report to FILE");
    app->add_flag("--no-timestamps", no_timestamps,
                  "omit the generation time (reproducible output)");
  }
};

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string ReadSource(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::error_code ec;
  if (!in || !fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kSourceUnreadable, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<std::string> LanguageForExtension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".java") return "java";
  if (ext == ".c" || ext == ".h" || ext == ".cc" || ext == ".cpp" ||
      ext == ".cxx" || ext == ".hpp" || ext == ".hh") {
    return "c";
  }
  if (ext == ".py") return "python";
  if (ext == ".txt" || ext == ".md") return "plaintext";
  return std::nullopt;
}

void Emit(const ComparisonReport& report, const OutputFlags& flags,
          std::ostream& out) {
  std::string rendered;
  if (flags.format == "json") {
    rendered = RenderJson(report);
  } else if (flags.format == "html") {
    rendered = RenderHtml(report);
  } else {
    rendered = RenderText(report);
  }
  if (flags.out_path.empty()) {
    out << rendered;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary | std::ios::trunc);
  file << rendered;
  if (!file) {
    throw Error(ErrorCode::kStoreWriteFailed, "cannot write " + flags.out_path);
  }
}

void PrintRecord(const DocumentRecord& r, std::ostream& out) {
  out << r.doc_id << '\t' << r.language << '\t' << r.sketch_path << '\t'
      << r.source_digest << '\t' << r.indexed_at << '\n';
}

int RunParams(const ParamFlags& flags, std::ostream& out) {
  const Params& p = flags.values;
  ValidateParams(p);
  auto origin = [](const CLI::Option* opt) {
    return opt->count() ? "override" : "default";
  };
  out << "k = " << p.k << " (" << origin(flags.k) << ")\n";
  out << "t = " << p.t << " (" << origin(flags.t) << ")\n";
  out << "q = " << p.q << " (" << origin(flags.q) << ")\n";
  out << "b = " << p.b << " (" << origin(flags.b) << ")\n";
  out << "w = " << p.window() << " (derived: t - k + 1)\n";
  return kExitOk;
}

int RunIndex(const std::vector<std::string>& paths, const std::string& class_id,
             const std::string& assignment_id, const std::string& language,
             const fs::path& store, const ParamFlags& flags, std::ostream& out) {
  Params params = flags.values;
  if (StoreInitialized(store)) {
    params = flags.ReconcileWith(ReadStoreParams(store));
  }
  ValidateParams(params);
  for (const std::string& path : paths) {
    PrintRecord(IndexDocument(path, class_id, assignment_id, language, params,
                              store),
                out);
  }
  return kExitOk;
}

int RunList(const fs::path& store, const std::string& class_id,
            const std::string& assignment_id, std::ostream& out) {
  std::optional<std::string> cls;
  std::optional<std::string> asg;
  if (!class_id.empty()) cls = class_id;
  if (!assignment_id.empty()) asg = assignment_id;
  for (const DocumentRecord& r : ListCorpus(store, cls, asg)) PrintRecord(r, out);
  return kExitOk;
}

int RunCheck(const fs::path& primary_path, const std::string& class_id,
             const std::string& assignment_id, std::string language,
             const fs::path& store, const ParamFlags& params_flags,
             const OutputFlags& output, std::ostream& out) {
  Params params = params_flags.values;
  if (StoreInitialized(store)) {
    params = params_flags.ReconcileWith(ReadStoreParams(store));
  }
  ValidateParams(params);

  const std::string doc_id =
      class_id + "/" + assignment_id + "/" + DefaultDocName(primary_path);
  if (language.empty() && StoreInitialized(store)) {
    if (auto existing = FindRecord(store, doc_id)) language = existing->language;
  }
  if (language.empty()) {
    auto guessed = LanguageForExtension(primary_path);
    if (!guessed) {
      throw Error(ErrorCode::kUnknownLanguage,
                  "cannot infer a language for " + primary_path.string() +
                      "; pass --lang");
    }
    language = *guessed;
  }

  const DocumentRecord primary_record = IndexDocument(
      primary_path, class_id, assignment_id, language, params, store);
  const Sketch primary = LoadRecordSketch(primary_record, store);

  std::vector<DocumentRecord> records =
      ListCorpus(store, class_id, assignment_id);
  std::vector<Sketch> candidates;
  candidates.reserve(records.size());
  for (const DocumentRecord& r : records) {
    if (r.doc_id == primary_record.doc_id) continue;
    candidates.push_back(LoadRecordSketch(r, store));
  }

  ComparisonReport report = CheckPrimary(primary, candidates);
  if (!output.no_timestamps) report.generated_at = UtcNow();
  report.primary_source_lines =
      SplitLines(LoadRecordSource(primary_record, store));
  for (const MatchResult& result : report.results) {
    if (result.spans.empty()) continue;
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const DocumentRecord& r) {
                             return r.doc_id == result.candidate_id;
                           });
    report.candidate_source_lines[result.candidate_id] =
        SplitLines(LoadRecordSource(*it, store));
  }
  Emit(report, output, out);
  return kExitOk;
}

int RunCompare(const std::string& first, const std::string& second,
               const std::string& language, const ParamFlags& params_flags,
               const OutputFlags& output, std::ostream& out) {
  const Params& params = params_flags.values;
  ValidateParams(params);
  const std::string first_text = ReadSource(first);
  const std::string second_text = ReadSource(second);
  const LanguageConfig config = ResolveLanguage(language);

  const Sketch a = FingerprintDocument(NormalizeFor(first_text, config, first), params);
  const Sketch b =
      FingerprintDocument(NormalizeFor(second_text, config, second), params);

  ComparisonReport report;
  report.primary_id = first;
  report.params = params;
  report.results.push_back(Compare(a, b));
  if (!output.no_timestamps) report.generated_at = UtcNow();
  report.primary_source_lines = SplitLines(first_text);
  if (!report.results.front().spans.empty()) {
    report.candidate_source_lines[second] = SplitLines(second_text);
  }
  Emit(report, output, out);
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParamsMismatch:
      return kExitParamsMismatch;
    case ErrorCode::kInvalidParams:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fingerprint-based plagiarism detection for code and essays",
               "codealike"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string store_dir = "codealike-store";
  std::string class_id;
  std::string assignment_id;
  std::string language;

  CLI::App* index = app.add_subcommand("index", "fingerprint files into the store");
  std::vector<std::string> index_paths;
  ParamFlags index_params;
  index->add_option("paths", index_paths, "source files")->required();
  index->add_option("--class", class_id, "class id")->required();
  index->add_option("--assignment", assignment_id, "assignment id")->required();
  index->add_option("--lang", language, "language config name")->required();
  index->add_option("--store", store_dir, "sketch store directory")
      ->envname(std::string(kStoreEnvVar));
  index_params.Attach(index);

  CLI::App* check = app.add_subcommand(
      "check", "check a primary submission against its assignment");
  std::string primary_path;
  ParamFlags check_params;
  OutputFlags check_output;
  check->add_option("--primary", primary_path, "primary submission")->required();
  check->add_option("--class", class_id, "class id")->required();
  check->add_option("--assignment", assignment_id, "assignment id")->required();
  check->add_option("--lang", language,
                    "language config name (default: stored or by extension)");
  check->add_option("--store", store_dir, "sketch store directory")
      ->envname(std::string(kStoreEnvVar));
  check_params.Attach(check);
  check_output.Attach(check);

  CLI::App* compare = app.add_subcommand("compare", "compare two files directly");
  std::string first;
  std::string second;
  ParamFlags compare_params;
  OutputFlags compare_output;
  compare->add_option("file1", first, "primary file")->required();
  compare->add_option("file2", second, "candidate file")->required();
  compare->add_option("--lang", language, "language config name")->required();
  compare_params.Attach(compare);
  compare_output.Attach(compare);

  CLI::App* params = app.add_subcommand("params", "show effective parameters");
  ParamFlags params_flags;
  params_flags.Attach(params);

  CLI::App* list = app.add_subcommand("list", "list indexed documents");
  list->add_option("--class", class_id, "filter by class");
  list->add_option("--assignment", assignment_id, "filter by assignment");
  list->add_option("--store", store_dir, "sketch store directory")
      ->envname(std::string(kStoreEnvVar));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "codealike: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*index) {
      return RunIndex(index_paths, class_id, assignment_id, language, store_dir,
                      index_params, out);
    }
    if (*check) {
      return RunCheck(primary_path, class_id, assignment_id, language,
                      store_dir, check_params, check_output, out);
    }
    if (*compare) {
      return RunCompare(first, second, language, compare_params,
                        compare_output, out);
    }
    if (*params) return RunParams(params_flags, out);
    if (*list) return RunList(store_dir, class_id, assignment_id, out);
  } catch (const Error& e) {
    err << "codealike: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::invalid_argument& e) {
    err << "codealike: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "codealike: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace codealike::cli
