// Copyright 2026 The circulant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circulant/records.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace circulant {

namespace detail {
std::string_view records_text();  // generated from data/records.txt
}

namespace {

constexpr std::string_view kChecksumPrefix = "# checksum fnv1a64 ";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int parse_small(std::string_view field, const std::string& where) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || v < 1) {
    throw records_error(where + ": bad integer '" + std::string(field) + "'");
  }
  return v;
}

std::vector<integer> parse_generators(std::string_view field, const std::string& where) {
  std::vector<integer> out;
  if (field == "-") return out;
  for (std::string_view g : split(field, ',')) {
    try {
      out.push_back(parse_integer(g));
    } catch (const std::exception&) {
      throw records_error(where + ": bad generator '" + std::string(g) + "'");
    }
    if (out.back() < 1) throw records_error(where + ": generator must be positive");
  }
  return out;
}

RecordEntry parse_row(std::string_view line, int line_no) {
  const std::string where = "records line " + std::to_string(line_no);
  std::istringstream in{std::string(line)};
  std::string source, d, k, n, gens, flags, extra;
  if (!(in >> source >> d >> k >> n >> gens >> flags) || (in >> extra)) {
    throw records_error(where + ": expected 6 fields");
  }
  RecordEntry e;
  if (source == "table2") {
    e.source = RecordSource::largest_known;
    e.source_citation = "largest known circulant graphs, d <= 16, k <= 10";
  } else if (source == "table3") {
    e.source = RecordSource::search;
    e.source_citation = "computer search";
  } else {
    throw records_error(where + ": unknown source '" + source + "'");
  }
  e.degree = parse_small(d, where);
  e.diameter = parse_small(k, where);
  try {
    e.order = parse_integer(n);
  } catch (const std::exception&) {
    throw records_error(where + ": bad order '" + n + "'");
  }
  if (e.order < 2) throw records_error(where + ": order must be at least 2");

  bool derived = false;
  if (flags != "-") {
    for (std::string_view f : split(flags, ',')) {
      if (f == "new") {
        e.new_record = true;
      } else if (f == "extremal") {
        e.proven_extremal = true;
      } else if (f == "corrected") {
        e.corrected = true;
      } else if (f == "derived") {
        derived = true;
      } else {
        throw records_error(where + ": unknown flag '" + std::string(f) + "'");
      }
    }
  }
  (derived ? e.derived_generators : e.reduced_generators) = parse_generators(gens, where);
  if (derived && e.derived_generators.empty()) throw records_error(where + ": derived row without generators");
  if (e.has_generators() && static_cast<int>(e.expand().degree()) != e.degree) {
    throw records_error(where + ": generators expand to degree " + std::to_string(e.expand().degree()) +
                        ", expected " + std::to_string(e.degree));
  }
  return e;
}

}  // namespace

ConnectionSet RecordEntry::expand() const {
  std::vector<integer> raw = generators();
  if (degree % 2 == 1) {
    if (order % 2 != 0) throw std::invalid_argument("odd degree needs an even order");
    raw.push_back(order / 2);
  }
  return normalize(order, raw, directed);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view embedded_records_text() { return detail::records_text(); }

std::vector<RecordEntry> parse_records(std::string_view text) {
  while (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  const auto cut = text.rfind('\n');
  const std::string_view last = cut == std::string_view::npos ? text : text.substr(cut + 1);
  if (!last.starts_with(kChecksumPrefix)) throw records_error("records: missing checksum line");
  const std::string_view body = cut == std::string_view::npos ? std::string_view{} : text.substr(0, cut + 1);
  std::uint64_t expected = 0;
  const std::string_view hex = last.substr(kChecksumPrefix.size());
  const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), expected, 16);
  if (ec != std::errc() || ptr != hex.data() + hex.size()) throw records_error("records: unreadable checksum");
  if (fnv1a64(body) != expected) throw records_error("records: checksum mismatch");

  std::vector<RecordEntry> out;
  int line_no = 0;
  for (std::string_view line : split(body, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_row(line, line_no));
  }
  return out;
}

const std::vector<RecordEntry>& load_records() {
  static const std::vector<RecordEntry> records = parse_records(embedded_records_text());
  return records;
}

std::optional<RecordEntry> find_record(int degree, int diameter, RecordSource source) {
  for (const RecordEntry& e : load_records()) {
    if (e.degree == degree && e.diameter == diameter && e.source == source) return e;
  }
  return std::nullopt;
}

RecordReport verify_record(const RecordEntry& entry, const BfsOptions& options) {
  if (!entry.has_generators()) throw std::invalid_argument("record has no generators to verify");
  RecordReport out;
  const ConnectionSet s = entry.expand();
  out.degree = s.degree();
  if (static_cast<int>(s.degree()) != entry.degree) {
    out.report.add("degree: expanded " + std::to_string(s.degree()) + ", expected " + std::to_string(entry.degree));
  }
  // The registry fixes n for (d, k): the largest-known cell, or the search
  // row where the cell grid ends.
  auto reference = find_record(entry.degree, entry.diameter, RecordSource::largest_known);
  if (!reference) reference = find_record(entry.degree, entry.diameter, RecordSource::search);
  if (reference && reference->order != entry.order) {
    out.report.add("order: " + to_string(entry.order) + ", expected " + to_string(reference->order));
  }
  const CirculantGraph g(s);
  try {
    out.diameter = diameter(g, options);
    if (static_cast<int>(*out.diameter) != entry.diameter) {
      out.report.add("diameter: " + std::to_string(*out.diameter) + ", expected " + std::to_string(entry.diameter));
    }
  } catch (const disconnected_graph&) {
    out.report.add("diameter: graph is disconnected");
  }
  return out;
}

ValidationReport cross_table_check(const std::vector<RecordEntry>& entries) {
  std::map<std::pair<int, int>, integer> cells;
  for (const RecordEntry& e : entries) {
    if (e.source == RecordSource::largest_known) cells[{e.degree, e.diameter}] = e.order;
  }
  ValidationReport report;
  for (const RecordEntry& e : entries) {
    if (e.source != RecordSource::search) continue;
    const auto it = cells.find({e.degree, e.diameter});
    if (it == cells.end()) continue;
    if (it->second != e.order) {
      report.add("(" + std::to_string(e.degree) + "," + std::to_string(e.diameter) + "): search row n=" +
                 to_string(e.order) + ", table cell n=" + to_string(it->second));
    }
  }
  return report;
}

}  // namespace circulant
