#include "orbitlab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "orbitlab/heights.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/ppd.hpp"

namespace orbitlab {

namespace {

using json = nlohmann::ordered_json;

std::string integer_text(const json& el) {
  if (el.is_string()) return el.get<std::string>();
  if (el.is_number_unsigned()) return std::to_string(el.get<unsigned long long>());
  if (el.is_number_integer()) return std::to_string(el.get<long long>());
  throw ParseError("integers must be decimal strings or plain JSON integers");
}

std::string fmt_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void report(const std::exception& e) { std::cerr << "orbitlab: " << e.what() << '\n'; }

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    if (!j.contains("map") || !j.contains("point")) {
      throw ParseError("config needs both 'map' and 'point'");
    }
    for (const auto& el : j.at("map")) cfg.map.push_back(el.get<std::string>());
    for (const auto& el : j.at("point")) cfg.point.push_back(integer_text(el));
    if (j.contains("targets")) {
      for (const auto& t : j.at("targets")) {
        TargetSpec spec;
        spec.label = t.value("label", std::string());
        for (const auto& g : t.at("generators")) spec.generators.push_back(g.get<std::string>());
        cfg.targets.push_back(std::move(spec));
      }
    }
    if (j.contains("S")) {
      for (const auto& el : j.at("S")) cfg.S.push_back(integer_text(el));
    }
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<unsigned>();
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      cfg.budget.trial_bound = b.value("trial_bound", cfg.budget.trial_bound);
      cfg.budget.rho_cap = b.value("rho_cap", cfg.budget.rho_cap);
      cfg.budget.degree_cap = b.value("degree_cap", cfg.budget.degree_cap);
    }
    cfg.output = j.value("output", std::string());
    cfg.cache = j.value("cache", std::string());
    if (j.contains("l")) cfg.window = j.at("l").get<unsigned>();
    if (j.contains("factor")) cfg.factor = j.at("factor").get<bool>();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  json j;
  j["map"] = map;
  j["point"] = point;
  json targets_json = json::array();
  for (const TargetSpec& t : targets) {
    json tj;
    tj["label"] = t.label;
    tj["generators"] = t.generators;
    targets_json.push_back(std::move(tj));
  }
  j["targets"] = std::move(targets_json);
  j["S"] = S;
  j["n_max"] = n_max;
  j["budget"] = {{"trial_bound", budget.trial_bound},
                 {"rho_cap", budget.rho_cap},
                 {"degree_cap", budget.degree_cap}};
  j["output"] = output;
  j["cache"] = cache;
  j["l"] = window;
  j["factor"] = factor;
  return j.dump(2) + "\n";
}

Experiment Experiment::build(const ExperimentConfig& cfg) {
  if (cfg.map.empty()) throw ParseError("config has an empty map");
  if (cfg.point.empty()) throw ParseError("config has an empty point");
  SelfMap f = SelfMap::parse(cfg.map);
  std::vector<Int> coords;
  coords.reserve(cfg.point.size());
  for (const std::string& s : cfg.point) coords.push_back(parse_bigint(s));
  std::optional<ProjPoint> x;
  try {
    x = ProjPoint::normalize(std::move(coords));
  } catch (const Error& e) {  // all-zero or too-short tuples are config errors
    throw ParseError(std::string("bad point: ") + e.what());
  }
  if (x->dim() != f.dim()) throw DimensionMismatch("point dimension differs from map dimension");
  std::vector<Subscheme> targets;
  for (const TargetSpec& spec : cfg.targets) {
    if (spec.generators.empty()) {
      throw ParseError("target '" + spec.label + "' has no generators");
    }
    std::vector<Form> gens;
    gens.reserve(spec.generators.size());
    for (const std::string& g : spec.generators) gens.push_back(Form::parse(g, f.dim() + 1));
    targets.push_back(Subscheme::make(spec.label, std::move(gens)));
  }
  std::vector<Int> S;
  for (const std::string& s : cfg.S) {
    Int p = parse_bigint(s);
    if (p < 2) throw ParseError("excluded primes must be >= 2, got " + s);
    S.push_back(std::move(p));
  }
  return Experiment{std::move(f), std::move(*x), std::move(targets), std::move(S)};
}

namespace {

void emit(std::ostream& out, const std::string& line) { out << line << '\n' << std::flush; }

// Wrap a per-row loop so that everything already emitted stays flushed and
// the exception class picks the exit code.
template <typename Body>
int rows(Body&& body) {
  try {
    body();
  } catch (const IterateOverflow& e) {
    report(e);
    return 3;
  } catch (const BudgetExceeded& e) {
    report(e);
    return 3;
  } catch (const Error& e) {
    report(e);
    return 2;
  }
  return 0;
}

int run_orbit(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  OrbitCache cache(cfg.cache, orbit_cache_key(ex.f, ex.x), targets_fingerprint({}));
  std::string header = "n";
  for (unsigned i = 0; i <= ex.f.dim(); ++i) header += ",coord" + std::to_string(i);
  emit(out, header + ",h_naive");
  return rows([&] {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
      const OrbitRecord r = orbit_table(ex.f, ex.x, {}, n, &cache).back();
      std::string line = std::to_string(n);
      for (const Int& c : r.point.coords()) line += "," + c.str();
      emit(out, line + "," + fmt_g(r.h_naive.value));
    }
  });
}

int run_height_table(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out,
                     bool first_target_only) {
  std::vector<Subscheme> targets = ex.targets;
  if (first_target_only) targets.resize(1);
  OrbitCache cache(cfg.cache, orbit_cache_key(ex.f, ex.x), targets_fingerprint(targets));
  emit(out, "n,label,arch,finite_mult,total,ratio");
  return rows([&] {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
      const OrbitRecord r = orbit_table(ex.f, ex.x, targets, n, &cache).back();
      for (std::size_t i = 0; i < targets.size(); ++i) {
        std::string line = std::to_string(n) + "," + targets[i].label + ",";
        if (!r.target_heights[i]) {
          line += "inf,inf,inf,inf";
        } else {
          const GlobalHeight& h = *r.target_heights[i];
          line += fmt_g(h.arch.value) + "," + h.finite_mult.str() + "," +
                  fmt_g(h.total().value) + ",";
          line += r.h_naive.value > 0.0 ? fmt_g(h.total().value / r.h_naive.value) : "nan";
        }
        emit(out, line);
      }
    }
  });
}

int run_alpha(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  OrbitCache cache(cfg.cache, orbit_cache_key(ex.f, ex.x), targets_fingerprint({}));
  emit(out, "n,root,ratio");
  return rows([&] {
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      const AlphaEstimate e = alpha_series(ex.f, ex.x, n, &cache).back();
      emit(out, std::to_string(n) + "," + fmt_g(e.root_estimate) + "," +
                    (e.ratio_estimate ? fmt_g(*e.ratio_estimate) : "nan"));
    }
  });
}

std::string primes_cell(const PpdReport& r) {
  if (!r.primitive_primes) return r.exists ? "unknown" : "";
  std::string cell;
  for (const PpdPrime& pp : *r.primitive_primes) {
    if (!cell.empty()) cell += ';';
    cell += pp.p.str() + "^" + std::to_string(pp.weight);
  }
  return cell;
}

int run_ppd(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  const Form& F = ex.targets[0].generators[0];
  emit(out, "n,exists,primes,b_value,method");
  return rows([&] {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
      PpdReport r;
      if (cfg.factor) {
        r = ppd_primes(ex.f, ex.x, F, ex.S, n, cfg.budget.factor_budget()).back();
      } else {
        r.n = n;
        r.exists = ppd_exists(ex.f, ex.x, F, ex.S, n).back().second;
        r.b_value = b_sum_series(ex.f, ex.x, F, ex.S, n, 0).back().second;
      }
      emit(out, std::to_string(n) + "," + (r.exists ? "true" : "false") + "," +
                    primes_cell(r) + "," + fmt_g(r.b_value.value) + "," +
                    (r.method == PpdMethod::factorization ? "factorization" : "coprime-part"));
    }
  });
}

int run_bsum(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  const Form& F = ex.targets[0].generators[0];
  emit(out, "n,exists,primes,b_value,method");
  return rows([&] {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
      LogReal b = b_sum_series(ex.f, ex.x, F, ex.S, n, cfg.window).back().second;
      emit(out, std::to_string(n) + "," + (b.value > 0.0 ? "true" : "false") + ",," +
                    fmt_g(b.value) + ",coprime-part");
    }
  });
}

int run_mult(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  emit(out, "n,sup_mult,nth_root");
  return rows([&] {
    for (unsigned n = 1; n <= cfg.n_max; ++n) {
      unsigned m = backward_sup_mult(ex.f, ex.x, n, cfg.budget.degree_cap);
      emit(out, std::to_string(n) + "," + std::to_string(m) + "," +
                    fmt_g(std::pow(static_cast<double>(m), 1.0 / n)));
    }
  });
}

int run_dml_probe(const Experiment& ex, const ExperimentConfig& cfg, std::ostream& out) {
  const Form& phi0 = ex.targets[0].generators[0];
  const Form& phi1 = ex.targets[0].generators[1];
  emit(out, "n,img0,img1,h_img,ratio");
  return rows([&] {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
      const DmlRow r = dml_probe(ex.f, ex.x, phi0, phi1, n).back();
      emit(out, std::to_string(n) + "," + r.image[0].str() + "," + r.image[1].str() + "," +
                    fmt_g(r.h_image.value) + "," + (r.ratio ? fmt_g(*r.ratio) : "nan"));
    }
  });
}

void validate_shape(const std::string& command, const Experiment& ex) {
  if (command == "heights" || command == "ratio" || command == "ppd" || command == "bsum" ||
      command == "dml-probe") {
    if (ex.targets.empty()) throw ParseError("'" + command + "' needs at least one target");
  }
  if (command == "mult" && ex.f.dim() != 1) {
    throw DimensionMismatch("'mult' needs a self-map of P^1");
  }
  if (command == "dml-probe") {
    if (ex.f.dim() != 2) throw DimensionMismatch("'dml-probe' needs a self-map of P^2");
    if (ex.targets[0].generators.size() < 2) {
      throw ParseError("'dml-probe' reads two forms from the first target");
    }
    if (ex.targets[0].generators[0].degree() != ex.targets[0].generators[1].degree()) {
      throw DimensionMismatch("'dml-probe' needs two forms of one common degree");
    }
  }
}

}  // namespace

int run_command(const std::string& command, const ExperimentConfig& cfg) {
  try {
    Experiment ex = Experiment::build(cfg);
    validate_shape(command, ex);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
      file.open(cfg.output, std::ios::binary);
      if (!file) throw ParseError("cannot open output file: " + cfg.output);
      out = &file;
    }

    if (command == "orbit") return run_orbit(ex, cfg, *out);
    if (command == "heights") return run_height_table(ex, cfg, *out, false);
    if (command == "ratio") return run_height_table(ex, cfg, *out, true);
    if (command == "alpha") return run_alpha(ex, cfg, *out);
    if (command == "ppd") return run_ppd(ex, cfg, *out);
    if (command == "bsum") return run_bsum(ex, cfg, *out);
    if (command == "mult") return run_mult(ex, cfg, *out);
    if (command == "dml-probe") return run_dml_probe(ex, cfg, *out);
    throw ParseError("unknown command: " + command);
  } catch (const ParseError& e) {
    report(e);
    return 1;
  } catch (const DimensionMismatch& e) {
    report(e);
    return 1;
  } catch (const Error& e) {
    report(e);
    return 2;
  } catch (const std::exception& e) {
    report(e);
    return 1;
  }
}

}  // namespace orbitlab
