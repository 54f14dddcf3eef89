// Copyright 2026 The orbiforest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lab/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace orbi::lab {
namespace {

using nlohmann::json;

// Walks one object, remembering which keys were read; finish() rejects the rest.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(ErrorCode::kConfig, fmt::format("{} must be an object", where()));
  }

  const json* get(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!seen_.count(key)) fail(ErrorCode::kConfig, fmt::format("unknown key '{}'", key_path(key)));
    }
  }

 private:
  std::string where() const { return path_.empty() ? std::string("config") : path_; }

  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  fail(ErrorCode::kConfig, fmt::format("{}: {}", key, what));
}

std::int64_t as_int(const json& v, const std::string& key, std::int64_t lo, std::int64_t hi) {
  if (!v.is_number_integer()) bad(key, "expected an integer");
  const std::int64_t x = v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)
                             ? hi + 1
                             : v.get<std::int64_t>();
  if (x < lo || x > hi) bad(key, fmt::format("{} outside [{}, {}]", v.dump(), lo, hi));
  return x;
}

double as_real(const json& v, const std::string& key, double lo, double hi, bool open_lo = false,
               bool open_hi = false) {
  if (!v.is_number()) bad(key, "expected a number");
  const double x = v.get<double>();
  const bool low_ok = open_lo ? x > lo : x >= lo;
  const bool high_ok = open_hi ? x < hi : x <= hi;
  if (!std::isfinite(x) || !low_ok || !high_ok) {
    bad(key, fmt::format("{} outside {}{}, {}{}", x, open_lo ? "(" : "[", lo, hi, open_hi ? ")" : "]"));
  }
  return x;
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) bad(key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> as_strings(const json& v, const std::string& key) {
  if (!v.is_array()) bad(key, "expected a list of strings");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_string(x, key));
  return out;
}

std::uint64_t as_seed(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  bad(key, "expected a non-negative 64-bit integer");
}

double round12(double x) { return std::round(x * 1e12) / 1e12; }

GroupSpec parse_group(const json& doc, const std::string& path) {
  Fields f(doc, path);
  const json* kind = f.get("kind");
  if (!kind) bad(f.key_path("kind"), "missing");
  const std::string k = as_string(*kind, f.key_path("kind"));
  GroupSpec spec;
  const json* rank = f.get("rank");
  const json* orders = f.get("orders");
  const json* inner = f.get("inner");
  const json* letters = f.get("letters");

  auto forbid = [&](const json* v, const char* key) {
    if (v) bad(f.key_path(key), fmt::format("not used by kind '{}'", k));
  };
  if (k == "free" || k == "free_abelian") {
    if (!rank) bad(f.key_path("rank"), "missing");
    const int r = static_cast<int>(as_int(*rank, f.key_path("rank"), 1, 64));
    spec = k == "free" ? GroupSpec::free(r) : GroupSpec::free_abelian(r);
    forbid(orders, "orders");
    forbid(inner, "inner");
  } else if (k == "free_product_cyclic") {
    if (!orders || !orders->is_array() || orders->empty()) bad(f.key_path("orders"), "expected a nonempty list");
    std::vector<std::int64_t> ms;
    for (const auto& m : *orders) {
      if (m.is_string() && m.get<std::string>() == "inf") {
        ms.push_back(kInfiniteOrder);
      } else {
        ms.push_back(as_int(m, f.key_path("orders"), 2, 1'000'000));
      }
    }
    spec = GroupSpec::free_product_cyclic(std::move(ms));
    forbid(rank, "rank");
    forbid(inner, "inner");
  } else if (k == "product_with_z") {
    if (!inner) bad(f.key_path("inner"), "missing");
    spec = GroupSpec::product_with_z(parse_group(*inner, f.key_path("inner")));
    forbid(rank, "rank");
    forbid(orders, "orders");
  } else {
    bad(f.key_path("kind"), fmt::format("unknown kind '{}'", k));
  }
  if (letters) spec = spec.with_letters(as_strings(*letters, f.key_path("letters")));
  f.finish();
  return spec;
}

std::vector<double> parse_grid(const json& v, const std::string& key) {
  std::vector<double> grid;
  if (v.is_array()) {
    for (const auto& x : v) grid.push_back(as_real(x, key, 0.0, 1.0));
  } else if (v.is_object()) {
    Fields f(v, key);
    const json* start = f.get("start");
    const json* stop = f.get("stop");
    const json* step = f.get("step");
    f.finish();
    if (!start || !stop || !step) bad(key, "range needs start, stop and step");
    const double a = as_real(*start, f.key_path("start"), 0.0, 1.0);
    const double b = as_real(*stop, f.key_path("stop"), 0.0, 1.0);
    const double s = as_real(*step, f.key_path("step"), 0.0, 1.0, true);
    for (std::size_t i = 0;; ++i) {
      const double x = round12(a + static_cast<double>(i) * s);
      if (x > b + 1e-12) break;
      grid.push_back(std::min(x, 1.0));
    }
  } else {
    bad(key, "expected a list or {start, stop, step}");
  }
  if (grid.empty()) bad(key, "empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) bad(key, "grid must be strictly increasing");
  }
  return grid;
}

}  // namespace

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(static_cast<double>(2 * i) / 100.0);
  return grid;
}

nlohmann::json group_to_json(const GroupSpec& spec) {
  json out;
  switch (spec.kind) {
    case GroupKind::kFree:
      out = {{"kind", "free"}, {"rank", spec.rank}};
      break;
    case GroupKind::kFreeAbelian:
      out = {{"kind", "free_abelian"}, {"rank", spec.rank}};
      break;
    case GroupKind::kFreeProductCyclic: {
      json orders = json::array();
      for (std::int64_t m : spec.orders) {
        if (m == kInfiniteOrder) {
          orders.push_back("inf");
        } else {
          orders.push_back(m);
        }
      }
      out = {{"kind", "free_product_cyclic"}, {"orders", orders}};
      break;
    }
    case GroupKind::kProductWithZ:
      out = {{"kind", "product_with_z"}, {"inner", group_to_json(*spec.inner)}};
      break;
  }
  if (!spec.letters.empty()) out["letters"] = spec.letters;
  return out;
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
  ExperimentConfig c;
  Fields top(doc, "");
  if (const json* v = top.get("group")) c.group = parse_group(*v, "group");
  if (const json* v = top.get("generators")) {
    c.generators = as_strings(*v, "generators");  // empty: one per basis letter
  }
  if (const json* v = top.get("radius")) c.radius = static_cast<int>(as_int(*v, "radius", 0, 10'000));
  if (const json* v = top.get("radii")) {
    if (!v->is_array()) bad("radii", "expected a list");
    for (const auto& r : *v) c.radii.push_back(static_cast<int>(as_int(r, "radii", 0, 10'000)));
  }
  if (const json* v = top.get("seed")) c.seed = as_seed(*v, "seed");
  if (const json* v = top.get("trials")) c.trials = static_cast<std::size_t>(as_int(*v, "trials", 1, 1'000'000'000));
  if (const json* v = top.get("workers")) c.workers = static_cast<unsigned>(as_int(*v, "workers", 0, 1024));

  if (const json* v = top.get("percolation")) {
    Fields f(*v, "percolation");
    if (const json* x = f.get("p")) c.percolation.p = as_real(*x, "percolation.p", 0.0, 1.0);
    if (const json* x = f.get("p_grid"); x && !(x->is_array() && x->empty())) {
      c.percolation.p_grid = parse_grid(*x, "percolation.p_grid");
    }
    if (const json* x = f.get("delta_c")) c.percolation.delta_c = as_real(*x, "percolation.delta_c", 0.0, 1.0, true, true);
    if (const json* x = f.get("delta_u")) c.percolation.delta_u = as_real(*x, "percolation.delta_u", 0.0, 1.0, true, true);
    f.finish();
  }
  if (const json* v = top.get("forest")) {
    Fields f(*v, "forest");
    if (const json* x = f.get("epsilon")) c.forest.epsilon = as_real(*x, "forest.epsilon", 0.0, 1.0);
    if (const json* x = f.get("builder")) {
      const std::string b = as_string(*x, "forest.builder");
      if (b == "lerw") {
        c.forest.builder = ForestBuilder::kLoopErasedWalk;
      } else if (b == "stacks") {
        c.forest.builder = ForestBuilder::kStacks;
      } else {
        bad("forest.builder", fmt::format("expected 'lerw' or 'stacks', got '{}'", b));
      }
    }
    if (const json* x = f.get("ends_radii")) {
      if (!x->is_array() || x->empty()) bad("forest.ends_radii", "expected a nonempty list");
      c.forest.ends_radii.clear();
      for (const auto& r : *x) {
        c.forest.ends_radii.push_back(static_cast<std::uint32_t>(as_int(r, "forest.ends_radii", 0, 10'000)));
        const auto& rs = c.forest.ends_radii;
        if (rs.size() > 1 && rs[rs.size() - 1] <= rs[rs.size() - 2]) {
          bad("forest.ends_radii", "radii must be strictly increasing");
        }
      }
    }
    f.finish();
  }
  if (const json* v = top.get("indist")) {
    Fields f(*v, "indist");
    if (const json* x = f.get("alpha")) c.indist.alpha = as_real(*x, "indist.alpha", 0.0, 1.0, true, true);
    if (const json* x = f.get("observable")) {
      try {
        c.indist.observable = parse_observable(as_string(*x, "indist.observable"));
      } catch (const Error& e) {
        bad("indist.observable", e.what());
      }
    }
    if (const json* x = f.get("resample")) {
      c.indist.resample = static_cast<std::size_t>(as_int(*x, "indist.resample", 1, 1'000'000));
    }
    if (const json* x = f.get("min_configurations")) {
      c.indist.min_configurations = static_cast<std::size_t>(as_int(*x, "indist.min_configurations", 2, 1'000'000'000));
    }
    f.finish();
  }
  if (const json* v = top.get("caps")) {
    Fields f(*v, "caps");
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    if (const json* x = f.get("vertex_cap")) c.caps.vertex_cap = static_cast<std::size_t>(as_int(*x, "caps.vertex_cap", 1, 1'000'000'000));
    if (const json* x = f.get("pop_cap")) c.caps.pop_cap = static_cast<std::uint64_t>(as_int(*x, "caps.pop_cap", 1, big));
    if (const json* x = f.get("path_cap")) c.caps.path_cap = static_cast<std::uint64_t>(as_int(*x, "caps.path_cap", 1, big));
    f.finish();
  }
  if (const json* v = top.get("paths")) {
    if (!v->is_array()) bad("paths", "expected a list of {from, to, max_len}");
    for (const auto& item : *v) {
      Fields f(item, "paths[]");
      PathQuery q;
      const json* from = f.get("from");
      const json* to = f.get("to");
      if (!from || !to) bad("paths[]", "needs from and to");
      q.from = as_string(*from, "paths[].from");
      q.to = as_string(*to, "paths[].to");
      if (const json* x = f.get("max_len")) q.max_len = static_cast<std::uint32_t>(as_int(*x, "paths[].max_len", 1, 64));
      f.finish();
      c.paths.push_back(q);
    }
  }
  if (const json* v = top.get("output")) {
    Fields f(*v, "output");
    if (const json* x = f.get("dir")) c.output_dir = as_string(*x, "output.dir");
    f.finish();
  }
  top.finish();

  // Letter validity is checked by constructing the group once.
  try {
    Group check(c.group);
  } catch (const Error& e) {
    bad("group", e.what());
  }
  return c;
}

nlohmann::json ExperimentConfig::canonical() const {
  json paths_json = json::array();
  for (const PathQuery& q : paths) paths_json.push_back({{"from", q.from}, {"to", q.to}, {"max_len", q.max_len}});
  return {
      {"group", group_to_json(group)},
      {"generators", generators},
      {"radius", radius},
      {"radii", radii},
      {"seed", seed},
      {"trials", trials},
      {"percolation",
       {{"p", percolation.p},
        {"p_grid", percolation.p_grid},
        {"delta_c", percolation.delta_c},
        {"delta_u", percolation.delta_u}}},
      {"forest",
       {{"epsilon", forest.epsilon},
        {"builder", forest.builder == ForestBuilder::kStacks ? "stacks" : "lerw"},
        {"ends_radii", forest.ends_radii}}},
      {"indist",
       {{"alpha", indist.alpha},
        {"observable", observable_name(indist.observable)},
        {"resample", indist.resample},
        {"min_configurations", indist.min_configurations}}},
      {"caps", {{"vertex_cap", caps.vertex_cap}, {"pop_cap", caps.pop_cap}, {"path_cap", caps.path_cap}}},
      {"paths", paths_json},
  };
}

std::string ExperimentConfig::hash() const {
  return fmt::format("{:016x}", fnv1a64(canonical().dump()));
}

nlohmann::json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, fmt::format("cannot open config '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kConfig, fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
  }
}

void apply_override(nlohmann::json& doc, std::string_view dotted_key, std::string_view value) {
  if (dotted_key.empty()) fail(ErrorCode::kConfig, "empty override key");
  if (doc.is_null()) doc = json::object();
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = dotted_key.find('.', start);
    const std::string part(dotted_key.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (part.empty()) fail(ErrorCode::kConfig, fmt::format("malformed override key '{}'", dotted_key));
    if (!node->is_object()) {
      fail(ErrorCode::kConfig, fmt::format("override '{}' descends into a non-object", dotted_key));
    }
    if (dot == std::string_view::npos) {
      json parsed = json::parse(value.begin(), value.end(), nullptr, false);
      (*node)[part] = parsed.is_discarded() ? json(std::string(value)) : parsed;
      return;
    }
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    node = &child;
    start = dot + 1;
  }
}

}  // namespace orbi::lab
