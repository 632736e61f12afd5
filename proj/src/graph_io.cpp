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

#include "circulant/graph_io.hpp"

#include <optional>

#include "json.hpp"

namespace circulant {

namespace {

using json = nlohmann::json;

// SAX consumer so that integers wider than 64 bits keep their exact text
// (the DOM parser would turn them into doubles).
class GraphLineReader {
 public:
  bool null() { return fail("unexpected null"); }
  bool boolean(bool v) {
    if (depth_ != 1 || key_ != "directed" || directed_) return fail("unexpected boolean");
    directed_ = v;
    return true;
  }
  bool number_integer(json::number_integer_t v) { return number(integer{v}); }
  bool number_unsigned(json::number_unsigned_t v) { return number(static_cast<integer>(v)); }
  bool number_float(json::number_float_t, const std::string& raw) {
    if (raw.find_first_of(".eE") != std::string::npos) return fail("non-integral number " + raw);
    try {
      return number(parse_integer(raw));
    } catch (const std::exception&) {
      return fail("integer out of range: " + raw);
    }
  }
  bool string(std::string&) { return fail("unexpected string"); }
  bool binary(json::binary_t&) { return fail("unexpected binary value"); }
  bool start_object(std::size_t) {
    if (depth_ != 0) return fail("nested object");
    ++depth_;
    return true;
  }
  bool key(std::string& k) {
    if (k != "n" && k != "directed" && k != "generators") return fail("unknown field \"" + k + "\"");
    key_ = k;
    return true;
  }
  bool end_object() {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) {
    if (depth_ != 1 || key_ != "generators" || generators_) return fail("unexpected array");
    generators_.emplace();
    ++depth_;
    return true;
  }
  bool end_array() {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    return fail("JSON syntax error at byte " + std::to_string(position) + ": " + ex.what());
  }

  ConnectionSet finish() const {
    if (!error_.empty()) throw invalid_connection_set(error_);
    if (!n_) throw invalid_connection_set("missing field \"n\"");
    if (!directed_) throw invalid_connection_set("missing field \"directed\"");
    if (!generators_) throw invalid_connection_set("missing field \"generators\"");
    return ConnectionSet::from_expanded(*n_, *generators_, *directed_);
  }

 private:
  bool number(integer v) {
    if (depth_ == 1 && key_ == "n" && !n_) {
      n_ = v;
      return true;
    }
    if (depth_ == 2 && key_ == "generators") {
      generators_->push_back(v);
      return true;
    }
    return fail("unexpected number");
  }

  bool fail(std::string message) {
    if (error_.empty()) error_ = std::move(message);
    return false;
  }

  int depth_ = 0;
  std::string key_;
  std::optional<integer> n_;
  std::optional<bool> directed_;
  std::optional<std::vector<integer>> generators_;
  std::string error_;
};

}  // namespace

std::string to_json_line(const ConnectionSet& s) {
  std::string out = "{\"n\":" + to_string(s.modulus()) + ",\"directed\":" + (s.directed() ? "true" : "false") +
                    ",\"generators\":[";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out.push_back(',');
    out += to_string(s.elements()[i]);
  }
  out += "]}";
  return out;
}

ConnectionSet parse_graph_line(std::string_view line) {
  GraphLineReader reader;
  json::sax_parse(line.begin(), line.end(), &reader);
  return reader.finish();
}

}  // namespace circulant
