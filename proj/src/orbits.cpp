#include "orbitlab/orbits.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace orbitlab {

namespace {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_targets(const SelfMap& f, const std::vector<Subscheme>& targets) {
  for (const Subscheme& Y : targets) {
    if (Y.generators.empty() || Y.generators[0].num_vars() != f.dim() + 1) {
      throw DimensionMismatch("target '" + Y.label + "' does not live in the map's space");
    }
  }
}

}  // namespace

std::string orbit_cache_key(const SelfMap& f, const ProjPoint& x) {
  return fnv1a_hex(f.str() + "|" + x.str());
}

std::string targets_fingerprint(const std::vector<Subscheme>& targets) {
  std::string acc;
  for (const Subscheme& Y : targets) {
    acc += Y.label;
    acc += ':';
    for (const Form& g : Y.generators) {
      acc += g.str();
      acc += ',';
    }
    acc += ';';
  }
  return fnv1a_hex(acc);
}

OrbitCache::OrbitCache(std::string path, std::string key, std::string targets_fp)
    : path_(std::move(path)), key_(std::move(key)), targets_fp_(std::move(targets_fp)) {
  if (path_.empty()) return;  // in-memory only
  std::ifstream in(path_);
  if (!in) return;  // nothing cached yet; the file appears on first append
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      if (j.at("key").get<std::string>() != key_) continue;
      unsigned n = j.at("n").get<unsigned>();
      std::vector<Int> coords;
      for (const auto& c : j.at("coords")) coords.push_back(parse_bigint(c.get<std::string>()));
      Line parsed{ProjPoint::normalize(std::move(coords)), false, {}};
      if (j.at("targets_fp").get<std::string>() == targets_fp_) {
        parsed.heights_usable = true;
        for (const auto& t : j.at("targets")) {
          if (t.contains("infinite") && t.at("infinite").get<bool>()) {
            parsed.heights.push_back(std::nullopt);
          } else {
            GlobalHeight h{{t.at("arch").get<double>()},
                           parse_bigint(t.at("finite_mult").get<std::string>())};
            parsed.heights.push_back(h);
          }
        }
      }
      lines_.emplace(n, std::move(parsed));
    } catch (...) {
      // Foreign or damaged line: not ours to interpret.
      continue;
    }
  }
}

std::optional<ProjPoint> OrbitCache::cached_point(unsigned n) const {
  auto it = lines_.find(n);
  if (it == lines_.end()) return std::nullopt;
  return it->second.point;
}

std::optional<std::vector<std::optional<GlobalHeight>>> OrbitCache::cached_heights(
    unsigned n, std::size_t expected_targets) const {
  auto it = lines_.find(n);
  if (it == lines_.end() || !it->second.heights_usable) return std::nullopt;
  if (it->second.heights.size() != expected_targets) return std::nullopt;
  return it->second.heights;
}

bool OrbitCache::has_line(unsigned n) const { return lines_.find(n) != lines_.end(); }

void OrbitCache::append(const OrbitRecord& rec, const std::vector<std::string>& target_labels) {
  if (lines_.count(rec.n)) return;  // append-only: never rewrite a row
  json j;
  j["key"] = key_;
  j["n"] = rec.n;
  json coords = json::array();
  for (const Int& c : rec.point.coords()) coords.push_back(c.str());
  j["coords"] = std::move(coords);
  j["targets_fp"] = targets_fp_;
  json targets = json::array();
  for (std::size_t i = 0; i < rec.target_heights.size(); ++i) {
    json t;
    t["label"] = i < target_labels.size() ? target_labels[i] : std::string();
    if (rec.target_heights[i]) {
      t["arch"] = rec.target_heights[i]->arch.value;
      t["finite_mult"] = rec.target_heights[i]->finite_mult.str();
    } else {
      t["infinite"] = true;
    }
    targets.push_back(std::move(t));
  }
  j["targets"] = std::move(targets);
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
    out.flush();
  }
  lines_.emplace(rec.n, Line{rec.point, true, rec.target_heights});
}

std::vector<OrbitRecord> orbit_table(const SelfMap& f, const ProjPoint& x,
                                     const std::vector<Subscheme>& targets, unsigned n_max,
                                     OrbitCache* cache) {
  if (x.dim() != f.dim()) throw DimensionMismatch("point/map dimension mismatch");
  check_targets(f, targets);
  std::vector<std::string> labels;
  labels.reserve(targets.size());
  for (const Subscheme& Y : targets) labels.push_back(Y.label);

  std::vector<OrbitRecord> out;
  out.reserve(n_max + 1);
  ProjPoint cur = x;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      std::optional<ProjPoint> cp = cache ? cache->cached_point(n) : std::nullopt;
      if (cp) {
        cur = std::move(*cp);
      } else {
        try {
          cur = apply(f, cur);
        } catch (const IndeterminatePoint&) {
          throw IndeterminatePoint(
              "orbit hits the indeterminacy locus at step " + std::to_string(n),
              static_cast<int>(n));
        }
      }
    }
    OrbitRecord rec{n, cur, naive_height(cur), {}};
    bool reused = false;
    if (cache) {
      if (auto cached = cache->cached_heights(n, targets.size())) {
        rec.target_heights = std::move(*cached);
        reused = true;
      }
    }
    if (!reused) {
      rec.target_heights.reserve(targets.size());
      for (const Subscheme& Y : targets) {
        try {
          rec.target_heights.push_back(subscheme_global_height(Y, cur));
        } catch (const InfiniteHeight&) {
          rec.target_heights.push_back(std::nullopt);
        }
      }
    }
    if (cache) cache->append(rec, labels);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<AlphaEstimate> alpha_series(const SelfMap& f, const ProjPoint& x, unsigned n_max,
                                        OrbitCache* cache) {
  // One extra step feeds the consecutive-ratio estimator.
  std::vector<OrbitRecord> rows = orbit_table(f, x, {}, n_max + 1, cache);
  std::vector<AlphaEstimate> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    AlphaEstimate e;
    e.n = n;
    double h = rows[n].h_naive.value;
    e.root_estimate = std::pow(std::max(1.0, h), 1.0 / n);
    if (h > 0.0) e.ratio_estimate = rows[n + 1].h_naive.value / h;
    out.push_back(e);
  }
  return out;
}

std::vector<RatioPoint> ratio_series(const SelfMap& f, const ProjPoint& x, const Subscheme& Y,
                                     unsigned n_max) {
  std::vector<OrbitRecord> rows = orbit_table(f, x, {Y}, n_max);
  std::vector<RatioPoint> out;
  out.reserve(rows.size());
  for (const OrbitRecord& r : rows) {
    RatioPoint pt;
    pt.n = r.n;
    if (!r.target_heights[0]) {
      pt.infinite = true;
    } else if (r.h_naive.value > 0.0) {
      pt.ratio = r.target_heights[0]->total().value / r.h_naive.value;
    }
    out.push_back(pt);
  }
  return out;
}

std::vector<DmlRow> dml_probe(const SelfMap& f, const ProjPoint& x, const Form& phi0,
                              const Form& phi1, unsigned n_max) {
  if (f.dim() != 2 || x.dim() != 2) throw DimensionMismatch("the probe runs on maps of P^2");
  if (phi0.num_vars() != 3 || phi1.num_vars() != 3) {
    throw DimensionMismatch("probe forms must be in three variables");
  }
  if (phi0.degree() != phi1.degree()) {
    throw DimensionMismatch("probe forms must share one degree");
  }
  const double e = static_cast<double>(phi0.degree());
  Subscheme I = Subscheme::make("I", {phi0, phi1});

  std::vector<DmlRow> out;
  out.reserve(n_max + 1);
  ProjPoint cur = x;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) cur = apply(f, cur);
    Int v0 = eval_form(phi0, cur);
    Int v1 = eval_form(phi1, cur);
    if (v0 == 0 && v1 == 0) {
      throw OnIndeterminacy("orbit meets the common zero locus at step " + std::to_string(n));
    }
    DmlRow row{n, ProjPoint::normalize({v0, v1}), {}, std::nullopt};
    row.h_image = naive_height(row.image);
    double h_naive = naive_height(cur).value;
    double h_i = subscheme_global_height(I, cur).total().value;
    double drift = std::abs(e * h_naive - h_i - row.h_image.value);
    if (drift > 1e-9 * std::max(1.0, e * h_naive)) {
      throw Error("height identity drifted by " + std::to_string(drift) + " at step " +
                  std::to_string(n));
    }
    if (h_naive > 0.0) row.ratio = h_i / h_naive;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace orbitlab
