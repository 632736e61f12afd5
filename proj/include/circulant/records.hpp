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

#pragma once

/**
 * @file records.hpp
 * @brief Registry of largest known undirected circulants of small degree
 *        and diameter.
 *
 * The registry is data/records.txt, compiled into the library. Each line is
 * `source d k n generators flags`; see the file header for the format.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/cyclic.hpp"
#include "circulant/metrics.hpp"
#include "circulant/torus.hpp"

namespace circulant {

class records_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RecordSource {
  largest_known,  // "table2": order only, d <= 16, k <= 10
  search,         // "table3": reduced generators from computer search
};

struct RecordEntry {
  RecordSource source = RecordSource::largest_known;
  int degree = 0;
  int diameter = 0;
  integer order = 0;
  /// Transcribed generators, present for search rows only.
  std::vector<integer> reduced_generators;
  /// Generators reconstructed for rows that the tables leave bare.
  std::vector<integer> derived_generators;
  bool directed = false;
  bool proven_extremal = false;
  bool new_record = false;
  /// One printed generator was replaced to fix an evident misprint.
  bool corrected = false;
  std::string source_citation;

  /// Transcribed generators if any, else derived ones (may be empty).
  const std::vector<integer>& generators() const {
    return reduced_generators.empty() ? derived_generators : reduced_generators;
  }
  bool has_generators() const { return !generators().empty(); }

  /// +-g for every generator, plus n/2 when d is odd.
  ConnectionSet expand() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// The compiled-in data file, byte for byte.
std::string_view embedded_records_text();

/// Parses the data format; throws records_error on a checksum mismatch,
/// a missing checksum line or a malformed row (naming the line number).
std::vector<RecordEntry> parse_records(std::string_view text);

/// Parsed embedded registry, cached after the first call.
const std::vector<RecordEntry>& load_records();

std::optional<RecordEntry> find_record(int degree, int diameter, RecordSource source);

struct RecordReport {
  ValidationReport report;  // each violation starts with the failing field
  std::optional<std::size_t> degree;
  std::optional<std::uint32_t> diameter;

  bool ok() const { return report.ok(); }
};

/// Expanded degree = d, BFS diameter exactly k, and n equal to the
/// registry's order for (d, k) (when the registry has one). Throws
/// std::invalid_argument for an entry without generators and
/// work_cap_exceeded when the BFS would exceed the cap.
RecordReport verify_record(const RecordEntry& entry, const BfsOptions& options = {});

/// Every search row agrees with the largest-known cell for the same (d, k).
ValidationReport cross_table_check(const std::vector<RecordEntry>& entries);

}  // namespace circulant
