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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "cli.hpp"
#include "codealike/corpus.hpp"
#include "codealike/error.hpp"
#include "codealike/language_config.hpp"
#include "codealike/matcher.hpp"
#include "codealike/normalize.hpp"
#include "codealike/report.hpp"

namespace py = pybind11;
using namespace codealike;

namespace {

Params MakeParams(std::uint32_t k, std::uint32_t t, std::uint64_t q,
                  std::uint64_t b) {
  Params p{k, t, q, b};
  ValidateParams(p);
  return p;
}

Sketch FingerprintSource(std::string_view source, const std::string& language,
                         const Params& params, const std::string& source_id) {
  return FingerprintDocument(
      NormalizeFor(source, ResolveLanguage(language), source_id), params);
}

py::tuple RangeTuple(const LineRange& r) { return py::make_tuple(r.start, r.end); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fingerprint-based plagiarism detection (native core)";

  // Kept alive for the interpreter's lifetime; the translator needs it.
  static PyObject* error_type =
      py::exception<Error>(m, "CodeAlikeError").inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Params>(m, "Params")
      .def(py::init(&MakeParams), py::arg("k") = 5, py::arg("t") = 8,
           py::arg("q") = 10001, py::arg("b") = 256)
      .def_readonly("k", &Params::k)
      .def_readonly("t", &Params::t)
      .def_readonly("q", &Params::q)
      .def_readonly("b", &Params::b)
      .def_property_readonly("window", &Params::window)
      .def("__eq__", [](const Params& a, const Params& b) { return a == b; })
      .def("__repr__",
           [](const Params& p) { return "Params(" + FormatParams(p) + ")"; })
      .def("__str__", &FormatParams);

  py::class_<NormalizedText>(m, "NormalizedText")
      .def_property_readonly(
          "bytes", [](const NormalizedText& t) { return py::bytes(t.bytes); })
      .def_readonly("line_of", &NormalizedText::line_of)
      .def_readonly("source_id", &NormalizedText::source_id)
      .def_readonly("diagnostics", &NormalizedText::diagnostics)
      .def("__len__", &NormalizedText::size);

  py::class_<HashedGram>(m, "HashedGram")
      .def_readonly("hash", &HashedGram::hash)
      .def_readonly("offset", &HashedGram::offset)
      .def_readonly("line_start", &HashedGram::line_start)
      .def_readonly("line_end", &HashedGram::line_end)
      .def("__repr__", [](const HashedGram& g) {
        return "HashedGram(hash=" + std::to_string(g.hash) +
               ", offset=" + std::to_string(g.offset) + ", lines=" +
               std::to_string(g.line_start) + "-" + std::to_string(g.line_end) +
               ")";
      });

  py::class_<Sketch>(m, "Sketch")
      .def_readonly("source_id", &Sketch::source_id)
      .def_readonly("params", &Sketch::params)
      .def_readonly("format_version", &Sketch::format_version)
      .def_readonly("fingerprints", &Sketch::fingerprints)
      .def_readonly("normalized_length", &Sketch::normalized_length)
      .def_readonly("source_digest", &Sketch::source_digest)
      .def("hashes",
           [](const Sketch& s) {
             std::vector<std::uint64_t> out;
             for (const HashedGram& g : s.fingerprints) out.push_back(g.hash);
             return out;
           })
      .def("serialize", &SerializeSketch)
      .def_static("parse",
                  [](std::string_view text) { return ParseSketch(text, "<python>"); })
      .def("__eq__", [](const Sketch& a, const Sketch& b) { return a == b; })
      .def("__len__", [](const Sketch& s) { return s.fingerprints.size(); });

  py::class_<MatchSpan>(m, "MatchSpan")
      .def_property_readonly("primary_lines",
                             [](const MatchSpan& s) { return RangeTuple(s.primary_lines); })
      .def_property_readonly(
          "candidate_lines",
          [](const MatchSpan& s) { return RangeTuple(s.candidate_lines); })
      .def_readonly("shared_count", &MatchSpan::shared_count);

  py::class_<MatchResult>(m, "MatchResult")
      .def_readonly("primary_id", &MatchResult::primary_id)
      .def_readonly("candidate_id", &MatchResult::candidate_id)
      .def_readonly("shared_fingerprints", &MatchResult::shared_fingerprints)
      .def_readonly("containment", &MatchResult::containment)
      .def_readonly("jaccard", &MatchResult::jaccard)
      .def_readonly("spans", &MatchResult::spans);

  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("primary_id", &ComparisonReport::primary_id)
      .def_readonly("generated_at", &ComparisonReport::generated_at)
      .def_readonly("params", &ComparisonReport::params)
      .def_readonly("results", &ComparisonReport::results)
      .def("render_text", &RenderText)
      .def("render_json", &RenderJson)
      .def("render_html", &RenderHtml);

  py::class_<DocumentRecord>(m, "DocumentRecord")
      .def_readonly("doc_id", &DocumentRecord::doc_id)
      .def_readonly("class_id", &DocumentRecord::class_id)
      .def_readonly("assignment_id", &DocumentRecord::assignment_id)
      .def_readonly("language", &DocumentRecord::language)
      .def_readonly("sketch_path", &DocumentRecord::sketch_path)
      .def_readonly("source_digest", &DocumentRecord::source_digest)
      .def_readonly("indexed_at", &DocumentRecord::indexed_at)
      .def_readonly("source_path", &DocumentRecord::source_path);

  m.def("languages", &BuiltinLanguageNames, "Names of the built-in language configs.");
  m.def(
      "normalize",
      [](std::string_view source, const std::string& language,
         const std::string& source_id) {
        return NormalizeFor(source, ResolveLanguage(language), source_id);
      },
      py::arg("source"), py::arg("language"), py::arg("source_id") = "");
  m.def("hash_one", &HashOne, py::arg("gram"), py::arg("params") = Params{});
  m.def(
      "kgram_hashes",
      [](std::string_view normalized, const Params& params) {
        NormalizedText text;
        text.bytes = std::string(normalized);
        text.line_of.assign(text.bytes.size(), 1);
        return KgramHashes(text, params);
      },
      py::arg("normalized"), py::arg("params") = Params{});
  m.def("fingerprint", &FingerprintSource, py::arg("source"), py::arg("language"),
        py::arg("params") = Params{}, py::arg("source_id") = "");
  m.def(
      "compare",
      [](const Sketch& primary, const Sketch& candidate, std::uint32_t gap) {
        return Compare(primary, candidate, gap);
      },
      py::arg("primary"), py::arg("candidate"), py::arg("gap") = kDefaultMergeGap);
  m.def(
      "check_primary",
      [](const Sketch& primary, const std::vector<Sketch>& candidates,
         std::uint32_t gap) { return CheckPrimary(primary, candidates, gap); },
      py::arg("primary"), py::arg("candidates"), py::arg("gap") = kDefaultMergeGap);

  m.def(
      "index_document",
      [](const std::filesystem::path& source, const std::string& class_id,
         const std::string& assignment_id, const std::string& language,
         const std::filesystem::path& store, const Params& params) {
        return IndexDocument(source, class_id, assignment_id, language, params,
                             store);
      },
      py::arg("source"), py::arg("class_id"), py::arg("assignment_id"),
      py::arg("language"), py::arg("store"), py::arg("params") = Params{});
  m.def("list_corpus", &ListCorpus, py::arg("store"),
        py::arg("class_id") = std::nullopt, py::arg("assignment_id") = std::nullopt);
  m.def("load_sketch", &LoadRecordSketch, py::arg("record"), py::arg("store"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::Run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
