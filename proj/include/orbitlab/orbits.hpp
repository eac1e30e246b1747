#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/heights.hpp"

namespace orbitlab {

/// One orbit row: the (normalized) point f^n(x), its naive height, and one
/// height per requested target. A missing optional marks a point lying on
/// that target (infinite height) — recorded, not raised, so tables keep
/// going past such rows.
struct OrbitRecord {
  unsigned n = 0;
  ProjPoint point;
  LogReal h_naive;
  std::vector<std::optional<GlobalHeight>> target_heights;  // parallel to targets
};

/// Fingerprints used to key cache lines.
std::string orbit_cache_key(const SelfMap& f, const ProjPoint& x);
std::string targets_fingerprint(const std::vector<Subscheme>& targets);

/// Append-only JSON-lines cache of orbit rows, keyed by a hash of the map
/// and starting point. Points are reusable across runs with any targets;
/// per-target heights are reused only when the targets fingerprint matches.
class OrbitCache {
 public:
  /// Opens (and reads) path; lines with other keys are left alone. An empty
  /// path keeps the cache purely in memory: nothing is read or written.
  OrbitCache(std::string path, std::string key, std::string targets_fp);

  std::optional<ProjPoint> cached_point(unsigned n) const;
  std::optional<std::vector<std::optional<GlobalHeight>>> cached_heights(
      unsigned n, std::size_t expected_targets) const;
  bool has_line(unsigned n) const;

  /// Append one computed row (no-op if a line for this n already exists).
  void append(const OrbitRecord& rec, const std::vector<std::string>& target_labels);

 private:
  struct Line {
    ProjPoint point;
    bool heights_usable = false;
    std::vector<std::optional<GlobalHeight>> heights;
  };
  std::string path_;
  std::string key_;
  std::string targets_fp_;
  std::map<unsigned, Line> lines_;
};

/// Rows n = 0..n_max. Orbit generation is inherently sequential; with a
/// cache, stored points seed the recursion and stored heights are reused
/// when the targets match. Throws IndeterminatePoint (with the step) if the
/// orbit hits the indeterminacy locus.
std::vector<OrbitRecord> orbit_table(const SelfMap& f, const ProjPoint& x,
                                     const std::vector<Subscheme>& targets, unsigned n_max,
                                     OrbitCache* cache = nullptr);

/// Growth-rate estimators at step n: root = max(1, h(f^n x))^(1/n) and
/// ratio = h(f^{n+1} x)/h(f^n x), the latter undefined while the height is 0.
struct AlphaEstimate {
  unsigned n = 0;
  double root_estimate = 1.0;
  std::optional<double> ratio_estimate;
};
std::vector<AlphaEstimate> alpha_series(const SelfMap& f, const ProjPoint& x, unsigned n_max,
                                        OrbitCache* cache = nullptr);

/// h_Y(f^n x) / h_naive(f^n x) for n = 0..n_max. `infinite` marks orbit
/// points on Y; the ratio is empty when h_naive = 0 (degenerate, recorded
/// rather than raised).
struct RatioPoint {
  unsigned n = 0;
  bool infinite = false;
  std::optional<double> ratio;
};
std::vector<RatioPoint> ratio_series(const SelfMap& f, const ProjPoint& x, const Subscheme& Y,
                                     unsigned n_max);

/// Push the orbit of a P^2 map through a pair of degree-e forms (a rational
/// map to P^1) and report the image point, its naive height, and the ratio
/// h_I(f^n x)/h_naive(f^n x) against the pair's common-zero locus I.
/// Internally cross-checks the exact identity
///   e * h_naive(z) = h_I(z) + h_P1(phi(z))
/// and throws Error if it drifts beyond 1e-9. OnIndeterminacy when the orbit
/// meets I itself.
struct DmlRow {
  unsigned n = 0;
  ProjPoint image;
  LogReal h_image;
  std::optional<double> ratio;
};
std::vector<DmlRow> dml_probe(const SelfMap& f, const ProjPoint& x, const Form& phi0,
                              const Form& phi1, unsigned n_max);

}  // namespace orbitlab
