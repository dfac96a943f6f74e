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

#include "codealike/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace codealike {

namespace {

using nlohmann::json;

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

template <typename T>
void AppendNumber(std::string& out, T value) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

void AppendRange(std::string& out, const LineRange& r) {
  AppendNumber(out, r.start);
  out += "–";
  AppendNumber(out, r.end);
}

void AppendSpanLine(std::string& out, const MatchSpan& span) {
  out += "candidate lines ";
  AppendRange(out, span.candidate_lines);
  out += " ↔ primary lines ";
  AppendRange(out, span.primary_lines);
  out += " (";
  AppendNumber(out, span.shared_count);
  out += span.shared_count == 1 ? " fingerprint)" : " fingerprints)";
}

std::string SpanLine(const MatchSpan& span) {
  std::string out;
  AppendSpanLine(out, span);
  return out;
}

std::string ContainmentPhrase(double containment) {
  return Fixed(containment * 100.0, 1) + "% of primary's fingerprints found";
}

bool AnySpans(const ComparisonReport& report) {
  for (const MatchResult& r : report.results) {
    if (!r.spans.empty()) return true;
  }
  return false;
}

// ---- JSON -----------------------------------------------------------------

json RangeToJson(const LineRange& r) { return json::array({r.start, r.end}); }

LineRange RangeFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("line range must be [start, end]");
  }
  return {j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>()};
}

// nlohmann's dump() prints doubles in shortest form; scores must always
// carry four decimals, so the tree is written out by hand.
void WriteCanonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted
        if (!first) out.push_back(',');
        first = false;
        out += json(it.key()).dump();
        out.push_back(':');
        WriteCanonical(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case json::value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out.push_back(',');
        WriteCanonical(j[i], out);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::number_float:
      out += Fixed(j.get<double>(), 4);
      break;
    default:
      out += j.dump(-1, ' ', false, json::error_handler_t::replace);
  }
}

double Rounded4(double v) { return std::round(v * 10000.0) / 10000.0; }

// ---- HTML -----------------------------------------------------------------

constexpr std::string_view kStyle = R"css(
body{font-family:system-ui,sans-serif;margin:1.5em;color:#222;background:#fafafa}
h1{font-size:1.3em;margin:0 0 .3em}
h2{font-size:1.05em;margin:.2em 0}
h3{font-size:.95em;margin:.6em 0 .3em;color:#8a1c1c}
.meta{color:#555;font-size:.9em;margin:0 0 1em}
.columns{display:flex;gap:1.5em;align-items:flex-start}
.columns>section{flex:1;min-width:0}
.panel{background:#fff;border:1px solid #ccc;border-radius:4px;padding:.6em .8em;margin-bottom:1em}
table.src{border-collapse:collapse;font-family:ui-monospace,monospace;font-size:.85em;width:100%}
table.src td{padding:0 .4em;vertical-align:top}
td.ln{color:#888;text-align:right;user-select:none;width:3.5em}
td.code{white-space:pre;overflow-wrap:anywhere}
tr.hit td.code{background:#ffe3e3}
tr.context td{color:#999}
tr.gap td{color:#999;text-align:center}
.score{font-size:.9em;color:#333;margin:.2em 0}
ul.spans{font-size:.85em;color:#444;margin:.4em 0 0;padding-left:1.2em}
.none{color:#1d6b2f;font-weight:bold}
)css";

void SourceRow(std::string& out, std::size_t line_no, std::string_view text,
               const char* row_class) {
  out += "<tr";
  if (row_class != nullptr) {
    out += " class=\"";
    out += row_class;
    out += '"';
  }
  out += "><td class=\"ln\">" + std::to_string(line_no) +
         ".</td><td class=\"code\">" + HtmlEscape(text) + "</td></tr>\n";
}

}  // namespace

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::string RenderText(const ComparisonReport& report) {
  std::string out = "CodeAlike comparison report\n";
  out += "primary: " + report.primary_id + "\n";
  if (report.generated_at) out += "generated_at: " + *report.generated_at + "\n";
  out += "params: " + FormatParams(report.params) + "\n";
  out += "candidates: " + std::to_string(report.results.size()) + "\n";
  if (!AnySpans(report)) out += "no matches\n";

  std::size_t rank = 0;
  for (const MatchResult& r : report.results) {
    out += "\n#" + std::to_string(++rank) + " " + r.candidate_id + "\n";
    out += "  containment: " + Fixed(r.containment, 4) + " (" +
           ContainmentPhrase(r.containment) + ")\n";
    out += "  jaccard: " + Fixed(r.jaccard, 4) + "\n";
    out += "  shared fingerprints: " + std::to_string(r.shared_fingerprints) +
           "\n";
    if (r.spans.empty()) out += "  no matching lines\n";
    for (const MatchSpan& span : r.spans) {
      out += "  ";
      AppendSpanLine(out, span);
      out += '\n';
    }
  }
  return out;
}

std::string RenderJson(const ComparisonReport& report) {
  json doc = json::object();
  doc["schema"] = "codealike-report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["primary_id"] = report.primary_id;
  doc["generated_at"] =
      report.generated_at ? json(*report.generated_at) : json(nullptr);
  doc["params"] = {{"k", report.params.k},
                   {"t", report.params.t},
                   {"q", report.params.q},
                   {"b", report.params.b}};
  json results = json::array();
  for (const MatchResult& r : report.results) {
    json spans = json::array();
    for (const MatchSpan& s : r.spans) {
      spans.push_back({{"candidate_lines", RangeToJson(s.candidate_lines)},
                       {"primary_lines", RangeToJson(s.primary_lines)},
                       {"shared_count", s.shared_count}});
    }
    results.push_back({{"candidate_id", r.candidate_id},
                       {"containment", r.containment},
                       {"jaccard", r.jaccard},
                       {"shared_fingerprints", r.shared_fingerprints},
                       {"spans", std::move(spans)}});
  }
  doc["results"] = std::move(results);
  doc["primary_source_lines"] = report.primary_source_lines;
  json candidates = json::object();
  for (const auto& [id, lines] : report.candidate_source_lines) {
    candidates[id] = lines;
  }
  doc["candidate_source_lines"] = std::move(candidates);

  std::string out;
  WriteCanonical(doc, out);
  out.push_back('\n');
  return out;
}

ComparisonReport ParseReportJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  try {
    if (doc.at("schema") != "codealike-report" ||
        doc.at("schema_version") != kReportSchemaVersion) {
      throw std::invalid_argument("report JSON: unsupported schema");
    }
    ComparisonReport report;
    report.primary_id = doc.at("primary_id").get<std::string>();
    if (!doc.at("generated_at").is_null()) {
      report.generated_at = doc["generated_at"].get<std::string>();
    }
    const json& p = doc.at("params");
    report.params = {p.at("k").get<std::uint32_t>(),
                     p.at("t").get<std::uint32_t>(),
                     p.at("q").get<std::uint64_t>(),
                     p.at("b").get<std::uint64_t>()};
    for (const json& jr : doc.at("results")) {
      MatchResult r;
      r.primary_id = report.primary_id;
      r.candidate_id = jr.at("candidate_id").get<std::string>();
      r.containment = Rounded4(jr.at("containment").get<double>());
      r.jaccard = Rounded4(jr.at("jaccard").get<double>());
      r.shared_fingerprints = jr.at("shared_fingerprints").get<std::size_t>();
      for (const json& js : jr.at("spans")) {
        r.spans.push_back({RangeFromJson(js.at("primary_lines")),
                           RangeFromJson(js.at("candidate_lines")),
                           js.at("shared_count").get<std::size_t>()});
      }
      report.results.push_back(std::move(r));
    }
    report.primary_source_lines =
        doc.at("primary_source_lines").get<std::vector<std::string>>();
    for (auto it = doc.at("candidate_source_lines").begin();
         it != doc.at("candidate_source_lines").end(); ++it) {
      report.candidate_source_lines[it.key()] =
          it.value().get<std::vector<std::string>>();
    }
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
}

std::string HtmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string RenderHtml(const ComparisonReport& report) {
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>CodeAlike report: " + HtmlEscape(report.primary_id) +
         "</title>\n<style>";
  out += kStyle;
  out += "</style>\n</head>\n<body>\n";
  out += "<h1>Plagiarism report</h1>\n<p class=\"meta\">primary: " +
         HtmlEscape(report.primary_id) + " &middot; " +
         HtmlEscape(FormatParams(report.params)) + " &middot; " +
         std::to_string(report.results.size()) + " candidate(s)";
  if (report.generated_at) {
    out += " &middot; generated " + HtmlEscape(*report.generated_at);
  }
  out += "</p>\n<div class=\"columns\">\n";

  // Left column: the primary, with every line that takes part in a match
  // highlighted.
  std::set<std::uint32_t> primary_hits;
  for (const MatchResult& r : report.results) {
    for (const MatchSpan& s : r.spans) {
      for (std::uint32_t l = s.primary_lines.start; l <= s.primary_lines.end; ++l) {
        primary_hits.insert(l);
      }
    }
  }
  out += "<section class=\"primary\">\n<div class=\"panel\">\n<h2>File: " +
         HtmlEscape(report.primary_id) + "</h2>\n<table class=\"src\">\n";
  for (std::size_t i = 0; i < report.primary_source_lines.size(); ++i) {
    const auto line_no = static_cast<std::uint32_t>(i + 1);
    SourceRow(out, line_no, report.primary_source_lines[i],
              primary_hits.count(line_no) ? "hit" : nullptr);
  }
  out += "</table>\n</div>\n</section>\n";

  // Right column: suspects stacked in rank order.
  out += "<section class=\"suspects\">\n";
  if (!AnySpans(report)) {
    out += "<div class=\"panel\"><p class=\"none\">No plagiarism instances "
           "found.</p></div>\n";
  }
  for (const MatchResult& r : report.results) {
    if (r.spans.empty()) continue;
    out += "<div class=\"panel suspect\">\n<h2>File: " +
           HtmlEscape(r.candidate_id) + "</h2>\n<p class=\"score\">" +
           HtmlEscape(ContainmentPhrase(r.containment)) + " &middot; jaccard " +
           Fixed(r.jaccard, 4) + " &middot; " +
           std::to_string(r.shared_fingerprints) +
           " shared fingerprint(s)</p>\n";
    out += "<h3>Lines which Appeared to be Plagiarised :</h3>\n";

    auto lines_it = report.candidate_source_lines.find(r.candidate_id);
    if (lines_it != report.candidate_source_lines.end()) {
      const std::vector<std::string>& lines = lines_it->second;
      const auto count = static_cast<std::uint32_t>(lines.size());
      std::set<std::uint32_t> matched;
      std::set<std::uint32_t> shown;
      for (const MatchSpan& s : r.spans) {
        for (std::uint32_t l = s.candidate_lines.start;
             l <= s.candidate_lines.end && l <= count; ++l) {
          matched.insert(l);
        }
        const std::uint32_t from =
            s.candidate_lines.start > 1 ? s.candidate_lines.start - 1 : 1;
        const std::uint32_t to = std::min(count, s.candidate_lines.end + 1);
        for (std::uint32_t l = from; l <= to; ++l) shown.insert(l);
      }
      out += "<table class=\"src\">\n";
      std::uint32_t previous = 0;
      for (std::uint32_t l : shown) {
        if (previous != 0 && l != previous + 1) {
          out += "<tr class=\"gap\"><td></td><td>&hellip;</td></tr>\n";
        }
        SourceRow(out, l, lines[l - 1], matched.count(l) ? "hit" : "context");
        previous = l;
      }
      out += "</table>\n";
    }
    out += "<ul class=\"spans\">\n";
    for (const MatchSpan& s : r.spans) {
      out += "<li>" + HtmlEscape(SpanLine(s)) + "</li>\n";
    }
    out += "</ul>\n</div>\n";
  }
  out += "</section>\n</div>\n</body>\n</html>\n";
  return out;
}

}  // namespace codealike
