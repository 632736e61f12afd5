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

#include "circulant/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "circulant/bounds.hpp"
#include "circulant/builders.hpp"
#include "circulant/graph_io.hpp"
#include "circulant/metrics.hpp"
#include "circulant/records.hpp"
#include "circulant/search.hpp"
#include "circulant/stitching.hpp"
#include "circulant/sumsets.hpp"
#include "circulant/torus.hpp"

namespace circulant::cli {

namespace {

using json = nlohmann::ordered_json;

/// Integers wider than 64 bits become decimal strings.
json exact(integer v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

json exact_list(const std::vector<integer>& vs) {
  json out = json::array();
  for (integer v : vs) out.push_back(exact(v));
  return out;
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

  void operator()(const json& j) {
    if (!tsv_) {
      out_ << j.dump() << '\n';
      return;
    }
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it != j.begin()) {
        header += '\t';
        row += '\t';
      }
      header += it.key();
      row += cell(it.value());
    }
    if (header != last_header_) {
      out_ << header << '\n';
      last_header_ = header;
    }
    out_ << row << '\n';
  }

  // Raw line (graph interchange), identical in both formats.
  void raw(const std::string& line) { out_ << line << '\n'; }

 private:
  static std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += cell(v[i]);
      }
      return s;
    }
    if (v.is_null()) return "-";
    return v.dump();
  }

  std::ostream& out_;
  bool tsv_;
  std::string last_header_;
};

std::vector<integer> parse_list(const std::string& text) {
  std::vector<integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_integer(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

std::string read_graph_arg(const std::string& arg) {
  if (!arg.starts_with("@")) return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
  std::string line;
  std::getline(in, line);
  return line;
}

std::uint64_t default_work_cap() {
  if (const char* env = std::getenv("CIRCULANT_WORK_CAP")) {
    try {
      const integer v = parse_integer(env);
      if (v > 0 && fits_int64(v)) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("CIRCULANT_WORK_CAP is not a positive integer: ") + env);
  }
  return kDefaultWorkCap;
}

struct Globals {
  std::uint64_t work_cap = kDefaultWorkCap;
  unsigned jobs = 1;
  std::string format = "json";
  BfsOptions bfs() const { return BfsOptions{work_cap}; }
};

json certificate_json(const std::string& family, integer q, const Construction& c) {
  const auto& cert = c.certificate;
  json j;
  if (!family.empty()) j["family"] = family;
  if (q > 0) j["q"] = exact(q);
  j["order"] = exact(cert.order);
  j["degree"] = cert.degree;
  j["degree_bound"] = exact(cert.degree_bound);
  j["generators_before_dedup"] = cert.generator_count;
  j["claimed_diameter"] = cert.claimed_diameter;
  j["radii"] = exact_list(c.ladder.radii);
  j["c_o"] = exact(c.ladder.c_o);
  j["c_u"] = exact(c.ladder.c_u);
  j["ladder_ok"] = cert.ladder.ok();
  j["base_cover_ok"] = cert.base_cover.ok();
  if (!cert.ladder.ok()) j["ladder_violations"] = cert.ladder.violations;
  if (!cert.base_cover.ok()) j["base_cover_violations"] = cert.base_cover.violations;
  j["valid"] = cert.valid();
  return j;
}

// ---------------------------------------------------------------------------

int run_diameter(const Globals& g, Emitter& emit, integer n, const std::string& gens, bool directed,
                 std::optional<int> expect) {
  const CirculantGraph graph = make_graph(n, parse_list(gens), directed);
  json j;
  j["order"] = exact(n);
  j["degree"] = graph.degree();
  try {
    const auto d = diameter(graph, g.bfs());
    j["diameter"] = d;
    emit(j);
    return expect && static_cast<int>(d) != *expect ? kExitFailure : kExitOk;
  } catch (const disconnected_graph& e) {
    j["diameter"] = nullptr;
    j["connected"] = false;
    j["reachable"] = exact(e.reachable);
    emit(j);
    return kExitFailure;
  }
}

int run_decompose(Emitter& emit, const TorusParams& p, integer x, integer y) {
  const ValidationReport report = validate_torus(p);
  if (!report.ok()) throw std::invalid_argument(report.summary());
  const DecompWitness w = decompose_pair(p, x, y);
  json j;
  j["x"] = exact(x);
  j["y"] = exact(y);
  j["h"] = exact(w.h);
  j["ell"] = exact(w.ell);
  j["h_bound"] = exact(p.h_bound());
  j["ell_bound"] = exact(p.ell_bound());
  j["r"] = exact(p.r());
  j["v"] = exact(p.v());
  emit(j);
  return kExitOk;
}

int run_construct(const Globals& g, Emitter& emit, bool list, const std::string& family_name, integer q,
                  bool emit_graph, bool bfs) {
  if (list) {
    for (const FamilySpec& f : published_families()) {
      json j;
      j["name"] = f.name;
      j["directed"] = f.directed;
      j["k"] = f.k;
      j["w"] = exact(f.w);
      j["base"] = exact_list(f.base);
      j["offsets"] = exact_list(f.offsets);
      j["predicate"] = f.predicate();
      j["q_min"] = exact(f.q_min);
      j["degree"] = to_string(f.degree_slope) + "q" + (f.degree_intercept < 0 ? "" : "+") +
                    to_string(f.degree_intercept);
      j["order_coefficient"] = f.order_coefficient.str();
      emit(j);
    }
    return kExitOk;
  }
  if (family_name.empty()) throw std::invalid_argument("construct needs --family (or --list-families)");
  const FamilySpec& family = find_family(family_name);
  const Construction c = family_instantiate(family, q);
  json j = certificate_json(family.name, q, c);
  j["predicted_order"] = exact(family_predicted_order(family, static_cast<integer>(c.certificate.degree)));
  int code = c.certificate.valid() ? kExitOk : kExitFailure;
  if (bfs) {
    try {
      const auto d = diameter(c.graph, g.bfs());
      j["bfs_diameter"] = d;
      if (static_cast<int>(d) > family.k) code = kExitFailure;
    } catch (const work_cap_exceeded&) {
      j["bfs_diameter"] = nullptr;
      j["bfs_skipped"] = "work cap";
    }
  }
  emit(j);
  if (emit_graph) emit.raw(to_json_line(c.graph.connection()));
  return code;
}

int run_stitch(const Globals& g, Emitter& emit, const std::string& a, const std::string& b, int k1, int k2,
               bool no_swap) {
  const CirculantGraph g1(parse_graph_line(read_graph_arg(a)));
  const CirculantGraph g2(parse_graph_line(read_graph_arg(b)));
  StitchOptions options;
  options.auto_swap = !no_swap;
  options.bfs = g.bfs();
  const StitchResult r = stitch(g1, g2, static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k2), options);
  emit.raw(to_json_line(r.graph.connection()));
  json j;
  j["order"] = exact(r.graph.order());
  j["degree"] = r.graph.degree();
  j["degree_bound"] = r.degree_bound;
  j["diameter_bound"] = r.diameter_bound;
  j["delta"] = r.delta;
  j["swapped"] = r.swapped;
  if (r.verified_diameter) {
    j["verified_diameter"] = *r.verified_diameter;
  } else {
    j["verified_diameter"] = nullptr;
  }
  emit(j);
  return kExitOk;
}

int run_search(const Globals& g, Emitter& emit, SearchSpec spec, const std::string& range,
               const std::string& mode) {
  const auto colon = range.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--range must be A:B");
  const integer lo = parse_integer(range.substr(0, colon)), hi = parse_integer(range.substr(colon + 1));
  if (!fits_int64(lo) || !fits_int64(hi)) throw std::invalid_argument("--range out of bounds");
  spec.n_lo = static_cast<std::int64_t>(lo);
  spec.n_hi = static_cast<std::int64_t>(hi);
  if (mode == "exhaustive") {
    spec.mode = SearchMode::exhaustive;
  } else if (mode == "heuristic") {
    spec.mode = SearchMode::heuristic;
  } else {
    throw std::invalid_argument("--mode must be exhaustive or heuristic");
  }
  if (spec.jobs == 0) spec.jobs = g.jobs;
  const SearchResult r = find_max_order(spec, [&](const SearchProgress& p) {
    json j;
    j["event"] = "progress";
    j["n"] = p.n;
    j["status"] = to_string(p.status);
    j["nodes"] = p.nodes;
    emit(j);
  });
  json j;
  j["event"] = "result";
  j["d"] = spec.d;
  j["k"] = spec.k;
  j["directed"] = spec.directed;
  if (r.n_best) {
    j["n_best"] = *r.n_best;
    j["generators"] = exact_list(r.witness->reduced());
  } else {
    j["n_best"] = nullptr;
    j["generators"] = nullptr;
  }
  j["definitive"] = r.definitive;
  j["budget_exhausted"] = r.budget_exhausted;
  j["nodes"] = r.nodes;
  emit(j);
  return kExitOk;
}

int run_verify_records(const Globals& g, Emitter& emit, std::optional<integer> max_n) {
  const auto& records = load_records();
  struct Row {
    std::string status;
    RecordReport report;
    std::string error;
  };
  std::vector<Row> rows(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      const RecordEntry& e = records[i];
      Row& row = rows[i];
      if (!e.has_generators() || (max_n && e.order > *max_n)) {
        row.status = "skipped";
        continue;
      }
      try {
        row.report = verify_record(e, g.bfs());
        row.status = row.report.ok() ? "pass" : "fail";
      } catch (const std::exception& ex) {
        row.status = "skipped";
        row.error = ex.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(g.jobs, static_cast<unsigned>(records.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RecordEntry& e = records[i];
    const Row& row = rows[i];
    json j;
    j["source"] = e.source == RecordSource::search ? "search" : "largest-known";
    j["d"] = e.degree;
    j["k"] = e.diameter;
    j["n"] = exact(e.order);
    j["status"] = row.status;
    if (!row.report.ok()) j["failures"] = row.report.report.violations;
    if (!row.error.empty()) j["reason"] = row.error;
    emit(j);
    if (row.status == "pass") ++passed;
    if (row.status == "fail") ++failed;
    if (row.status == "skipped") ++skipped;
  }
  const ValidationReport cross = cross_table_check(records);
  json s;
  s["summary"] = true;
  s["passed"] = passed;
  s["failed"] = failed;
  s["skipped"] = skipped;
  s["cross_table_ok"] = cross.ok();
  if (!cross.ok()) s["cross_table_violations"] = cross.violations;
  emit(s);
  return failed == 0 && cross.ok() ? kExitOk : kExitFailure;
}

int run_sumset(Emitter& emit, integer n, const std::string& set, int k, bool minimum) {
  if (!fits_int64(n) || n < 1) throw std::invalid_argument("--n must be a positive 64-bit integer");
  if (minimum) {
    const CoveringMinimum m = ss_minimum(static_cast<int>(n), k);
    json j;
    j["n"] = exact(n);
    j["k"] = k;
    j["ss"] = m.size;
    j["witness"] = m.witness;
    emit(j);
    return kExitOk;
  }
  if (set.empty()) throw std::invalid_argument("sumset needs --set (or --minimum)");
  std::vector<std::int64_t> elems;
  for (integer v : parse_list(set)) {
    if (!fits_int64(v)) throw std::invalid_argument("set element out of range");
    elems.push_back(static_cast<std::int64_t>(v));
  }
  const ResidueSet a = ResidueSet::from(static_cast<std::int64_t>(n), elems);
  const ResidueSet ka = sumset_power(a, k);
  json j;
  j["covers"] = ka.is_full();
  j["size"] = ka.size();
  emit(j);
  return kExitOk;
}

int run_bounds(Emitter& emit, bool table, std::optional<int> ceiling, std::optional<int> rmax) {
  if (!table && !ceiling && !rmax) throw std::invalid_argument("bounds needs --table, --ceiling K or --rmax K");
  if (rmax) {
    json j;
    j["k"] = *rmax;
    j["rmax"] = r_max(*rmax);
    emit(j);
  }
  if (ceiling) {
    const Ceiling c = direct_product_ceiling(*ceiling);
    json j;
    j["k"] = *ceiling;
    if (c.l) {
      j["l"] = c.l->str();
    } else {
      j["l"] = nullptr;
    }
    j["l_value"] = c.l_value;
    j["r"] = c.r;
    emit(j);
  }
  if (!table) return kExitOk;
  const ReferenceTable& ref = reference_table();
  bool all_match = true;
  for (int k = 2; k <= 9; ++k) {
    json j;
    j["row"] = "rmax";
    j["k"] = k;
    j["r"] = r_max(k);
    j["reference"] = ref.r_max[static_cast<std::size_t>(k - 2)];
    j["match"] = matches5(r_max(k), ref.r_max[static_cast<std::size_t>(k - 2)]);
    all_match = all_match && j["match"].get<bool>();
    emit(j);
  }
  for (BoundRow row : {BoundRow::undirected_limsup, BoundRow::undirected_liminf, BoundRow::directed_liminf}) {
    const BoundsRow values = best_bounds(row, 9);
    for (int k = 2; k <= 9; ++k) {
      const BoundValue& v = values.at(k);
      const double reference = ref.row(row)[static_cast<std::size_t>(k - 2)];
      json j;
      j["row"] = row_name(row);
      j["k"] = k;
      j["r"] = v.r;
      if (v.l) {
        j["l"] = v.l->str();
      } else {
        j["l"] = nullptr;
      }
      j["provenance"] = v.provenance;
      j["external"] = v.external;
      j["reference"] = reference;
      j["match"] = matches5(v.r, reference);
      all_match = all_match && j["match"].get<bool>();
      emit(j);
    }
  }
  return all_match ? kExitOk : kExitFailure;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and search circulant graphs of given degree and diameter", "circulant"};
  app.require_subcommand(1, 1);

  Globals g;
  g.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::optional<std::uint64_t> work_cap;
  std::optional<unsigned> jobs;
  app.add_option("--work-cap", work_cap, "BFS edge-traversal limit (default 1e9 or $CIRCULANT_WORK_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker threads (default: logical cores)")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv"}));

  // diameter
  auto* diam = app.add_subcommand("diameter", "BFS diameter of a circulant");
  std::string n_text, gens;
  bool directed = false;
  std::optional<int> expect;
  diam->add_option("--n", n_text, "order")->required();
  diam->add_option("--gens", gens, "generators a,b,c")->required();
  diam->add_flag("--directed", directed);
  diam->add_option("--expect", expect, "exit 1 unless the diameter equals this");

  // decompose
  auto* dec = app.add_subcommand("decompose", "torus decomposition witness (h, ell)");
  std::string u_t, d_t, s_t, m_t, x_t, y_t;
  dec->add_option("--u", u_t)->required();
  dec->add_option("--d", d_t)->required();
  dec->add_option("--s", s_t)->required();
  dec->add_option("--m", m_t)->required();
  dec->add_option("--x", x_t)->required();
  dec->add_option("--y", y_t)->required();

  // construct
  auto* con = app.add_subcommand("construct", "instantiate a published family");
  std::string family;
  std::string q_text = "0";
  bool list = false, emit_graph = false, bfs = false;
  con->add_option("--family", family);
  con->add_option("--q", q_text);
  con->add_flag("--list-families", list);
  con->add_flag("--emit-graph", emit_graph, "also print the graph line");
  con->add_flag("--bfs", bfs, "BFS-check the diameter when within the work cap");

  // stitch
  auto* st = app.add_subcommand("stitch", "stitch two circulants (graph lines or @file)");
  std::string a_line, b_line;
  int k1 = 0, k2 = 0;
  bool no_swap = false;
  st->add_option("--a", a_line)->required();
  st->add_option("--b", b_line)->required();
  st->add_option("--k1", k1)->required()->check(CLI::PositiveNumber);
  st->add_option("--k2", k2)->required()->check(CLI::PositiveNumber);
  st->add_flag("--no-swap", no_swap, "keep argument order for mixed-parity degrees");

  // search
  auto* se = app.add_subcommand("search", "largest order for degree d and diameter k");
  SearchSpec spec;
  spec.jobs = 0;
  std::string range, mode = "exhaustive";
  std::uint64_t seed = 0;
  se->add_option("--d", spec.d)->required()->check(CLI::PositiveNumber);
  se->add_option("--k", spec.k)->required()->check(CLI::PositiveNumber);
  se->add_flag("--directed", spec.directed);
  se->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "heuristic"}));
  se->add_option("--range", range, "A:B")->required();
  se->add_option("--budget", spec.budget, "node expansions")->check(CLI::PositiveNumber);
  auto* seed_opt = se->add_option("--seed", seed);
  se->add_option("--jobs", spec.jobs)->check(CLI::PositiveNumber);

  // verify-records
  auto* vr = app.add_subcommand("verify-records", "verify the embedded record tables");
  std::string max_n_text;
  vr->add_option("--max-n", max_n_text, "skip rows with larger order");

  // sumset
  auto* su = app.add_subcommand("sumset", "k-fold sumset of a subset of Z_n");
  std::string sum_n, set;
  int sum_k = 0;
  bool minimum = false;
  su->add_option("--n", sum_n)->required();
  su->add_option("--set", set, "a,b,c");
  su->add_option("--k", sum_k)->required()->check(CLI::PositiveNumber);
  su->add_flag("--minimum", minimum, "exhaustive SS(n, k), n <= 64");

  // bounds
  auto* bo = app.add_subcommand("bounds", "asymptotic order constants");
  bool table = false;
  std::optional<int> ceiling, rmax;
  bo->add_flag("--table", table);
  bo->add_option("--ceiling", ceiling)->check(CLI::PositiveNumber);
  bo->add_option("--rmax", rmax)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"circulant"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    g.work_cap = work_cap ? *work_cap : default_work_cap();
    if (jobs) g.jobs = *jobs;
    Emitter emit(out, g.format == "tsv");
    if (*diam) return run_diameter(g, emit, parse_integer(n_text), gens, directed, expect);
    if (*dec) {
      TorusParams p{parse_integer(u_t), parse_integer(d_t), parse_integer(s_t), parse_integer(m_t)};
      return run_decompose(emit, p, parse_integer(x_t), parse_integer(y_t));
    }
    if (*con) return run_construct(g, emit, list, family, parse_integer(q_text), emit_graph, bfs);
    if (*st) return run_stitch(g, emit, a_line, b_line, k1, k2, no_swap);
    if (*se) {
      if (*seed_opt) spec.seed = seed;
      return run_search(g, emit, spec, range, mode);
    }
    if (*vr) {
      std::optional<integer> max_n;
      if (!max_n_text.empty()) max_n = parse_integer(max_n_text);
      return run_verify_records(g, emit, max_n);
    }
    if (*su) return run_sumset(emit, parse_integer(sum_n), set, sum_k, minimum);
    if (*bo) return run_bounds(emit, table, ceiling, rmax);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace circulant::cli
