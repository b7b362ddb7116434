#include "affcrystal/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "affcrystal/report.hpp"

namespace affcrystal {

namespace {

using nlohmann::ordered_json;

struct JobConfig {
  std::string command;
  int n = 0;
  std::string shapes;
  std::optional<int> level;
  std::string lambda;
  std::string Lambda;
  std::string LambdaPrime;
  std::string b0;
  std::string format = "json";
  std::string cache_dir;
  bool widen_check = false;
  int jobs = 0;
  std::string cache_action;
  std::string alpha;
  std::vector<std::string> tokens;
};

std::vector<RectShape> parse_shapes(const std::string& text) {
  std::vector<RectShape> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(RectShape::parse(item));
  }
  return out;
}

CrystalSpec build_spec(const JobConfig& cfg) {
  if (cfg.n < 2) throw SpecError("--n must be at least 2");
  CrystalSpec spec;
  spec.n = cfg.n;
  spec.shapes = parse_shapes(cfg.shapes);
  spec.level = cfg.level;
  if (!cfg.Lambda.empty()) spec.Lambda = LevelWeight::parse_selector(cfg.Lambda, cfg.n);
  if (!cfg.LambdaPrime.empty()) spec.LambdaPrime = LevelWeight::parse_selector(cfg.LambdaPrime, cfg.n);
  if (!cfg.b0.empty()) spec.b0 = RectShape::parse(cfg.b0);
  if (!spec.level && spec.Lambda) spec.level = spec.Lambda->level;
  if (!spec.level && spec.LambdaPrime) spec.level = spec.LambdaPrime->level;
  return spec;
}

RMatrixRegistry make_registry(const JobConfig& cfg) {
  if (cfg.cache_dir.empty()) return RMatrixRegistry();
  return RMatrixRegistry(std::filesystem::path(cfg.cache_dir));
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

void warn_all(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// Plain two-column rendering for --format table.
void emit_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

void emit_poly_table(std::ostream& out, const LaurentPoly& p) {
  out << std::right << std::setw(10) << "exponent" << std::setw(14) << "coefficient" << "\n";
  for (const auto& [e, c] : p.pairs()) out << std::setw(10) << e << std::setw(14) << c << "\n";
}

std::string shapes_text(const CrystalSpec& spec) {
  std::string s;
  for (const auto& sh : spec.shapes) s += (s.empty() ? "" : ",") + sh.to_string();
  return s.empty() ? "(empty)" : s;
}

int cmd_kostka(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const CrystalSpec spec = build_spec(cfg);
  RMatrixRegistry reg = make_registry(cfg);
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "kostka";
  j["spec"] = spec_json(spec);
  KostkaResult res;
  std::vector<std::pair<std::string, std::string>> rows{{"n", std::to_string(spec.n)}, {"shapes", shapes_text(spec)}};
  if (!cfg.lambda.empty()) {
    const FiniteWeight lambda = FiniteWeight::parse(cfg.lambda);
    spec.validate(false);
    res = kostka_classical(spec, lambda, reg);
    j["lambda"] = lambda.coords();
    rows.emplace_back("lambda", lambda.to_string());
  } else {
    if (!spec.level) throw SpecError("kostka needs --lambda, or --level / --Lambda for restricted paths");
    spec.validate(true);
    res = kostka_level(spec, reg);
    j["Lambda"] = spec.Lambda_or_vacuum().to_selector();
    j["LambdaPrime"] = spec.LambdaPrime_or_vacuum().to_selector();
    rows.emplace_back("level", std::to_string(*spec.level));
    rows.emplace_back("Lambda", spec.Lambda_or_vacuum().to_selector());
    rows.emplace_back("LambdaPrime", spec.LambdaPrime_or_vacuum().to_selector());
  }
  j["polynomial"] = poly_json(res.poly);
  j["path_count"] = res.path_count;
  warn_all(err, reg.warnings());
  if (cfg.format == "table") {
    rows.emplace_back("path_count", std::to_string(res.path_count));
    rows.emplace_back("polynomial", res.poly.is_zero() ? "0" : res.poly.to_string());
    emit_table(out, rows);
    emit_poly_table(out, res.poly);
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const CrystalSpec spec = build_spec(cfg);
  if (!spec.level) throw SpecError("verify needs --level or --Lambda");
  if (*spec.level < 1) throw SpecError("verify needs level >= 1; use verify-zero for level 0");
  spec.validate(true);
  RMatrixRegistry reg = make_registry(cfg);

  const auto fermionic = kostka_level(spec, reg);
  const auto bosonic = bosonic_K(spec, reg);
  bool ok = fermionic.poly == bosonic.poly;

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["spec"] = spec_json(spec);
  j["Lambda"] = spec.Lambda_or_vacuum().to_selector();
  j["LambdaPrime"] = spec.LambdaPrime_or_vacuum().to_selector();
  j["lhs_polynomial"] = poly_json(bosonic.poly);
  j["rhs_polynomial"] = poly_json(fermionic.poly);
  j["equal"] = fermionic.poly == bosonic.poly;
  j["summand_count"] = bosonic.summand_count;
  j["path_count"] = fermionic.path_count;
  j["truncation_bound"] = box_json(bosonic.box);

  std::vector<std::string> warnings;
  if (spec.uses_ground()) {
    const auto hyp = check_ground_hypothesis(spec, reg);
    j["e0_hypothesis"] = {{"holds", hyp.holds}, {"violations", hyp.violations}};
    if (!hyp.holds) warnings.push_back("extra e_0 hypothesis fails for B0 = " + spec.ground_shape().to_string());
  }
  if (spec.Lambda_or_vacuum().is_vacuum() && spec.LambdaPrime_or_vacuum().is_vacuum() && !spec.b0) {
    const auto vac = bosonic_K_vacuum(spec, reg);
    j["vacuum_form_equal"] = vac.poly == bosonic.poly;
    ok = ok && vac.poly == bosonic.poly;
  }
  bool single_columns = true;
  for (const auto& s : spec.shapes) single_columns = single_columns && s.cols == 1;
  if (*spec.level == 1 && single_columns) {
    const auto rep = identity_level1(spec, reg);
    j["level1_identity"] = identity_json(rep);
    if (rep.applicable) ok = ok && rep.equal;
  }
  if (cfg.widen_check) {
    const auto wide = bosonic_K(spec, reg, BosonicOptions{2, Exec::parallel});
    const bool same = wide.poly == bosonic.poly;
    j["widen_check"] = {{"widened_bound", box_json(wide.box)}, {"unchanged", same}};
    ok = ok && same;
  }
  for (const auto& w : reg.warnings()) warnings.push_back(w);
  j["warnings"] = warnings;
  warn_all(err, warnings);

  if (cfg.format == "table") {
    emit_table(out, {{"n", std::to_string(spec.n)},
                     {"shapes", shapes_text(spec)},
                     {"level", std::to_string(*spec.level)},
                     {"Lambda", spec.Lambda_or_vacuum().to_selector()},
                     {"LambdaPrime", spec.LambdaPrime_or_vacuum().to_selector()},
                     {"bosonic", bosonic.poly.is_zero() ? "0" : bosonic.poly.to_string()},
                     {"fermionic", fermionic.poly.is_zero() ? "0" : fermionic.poly.to_string()},
                     {"equal", ok ? "true" : "false"}});
  } else {
    emit(out, j);
  }
  return ok ? kExitOk : kExitUnequal;
}

int cmd_verify_zero(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  CrystalSpec spec = build_spec(cfg);
  spec.level = 0;
  spec.validate(false);
  RMatrixRegistry reg = make_registry(cfg);
  const auto rep = identity_level0(spec, reg);
  bool ok = rep.equal;
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "verify-zero";
  j["spec"] = spec_json(spec);
  j["identity"] = identity_json(rep);
  std::optional<PairingCertificate> cert;
  if (!spec.shapes.empty()) {
    cert = involution_level0(spec, reg);
    j["pairing_certificate"] = certificate_json(*cert);
    ok = ok && cert->valid();
  }
  if (cfg.widen_check) {
    const auto wide = identity_level0(spec, reg, BosonicOptions{2, Exec::parallel});
    const bool same = wide.lhs == rep.lhs;
    j["widen_check"] = {{"widened_bound", box_json(wide.box)}, {"unchanged", same}};
    ok = ok && same;
  }
  warn_all(err, reg.warnings());
  if (cfg.format == "table") {
    std::vector<std::pair<std::string, std::string>> rows{{"n", std::to_string(spec.n)},
                                                          {"shapes", shapes_text(spec)},
                                                          {"lhs", rep.lhs.is_zero() ? "0" : rep.lhs.to_string()},
                                                          {"rhs", rep.rhs.is_zero() ? "0" : rep.rhs.to_string()},
                                                          {"summands", std::to_string(rep.summand_count)}};
    if (cert) rows.emplace_back("pairs", std::to_string(cert->pair_count) + (cert->valid() ? " (valid)" : " (INVALID)"));
    emit_table(out, rows);
  } else {
    emit(out, j);
  }
  return ok ? kExitOk : kExitUnequal;
}

int cmd_cache(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.cache_dir.empty()) throw SpecError("cache needs --cache-dir or CRYSTAL_CACHE_DIR");
  const std::filesystem::path dir(cfg.cache_dir);
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "cache " + cfg.cache_action;
  if (cfg.cache_action == "list") {
    ordered_json entries = ordered_json::array();
    for (const auto& e : list_cache(dir)) {
      ordered_json item;
      item["file"] = e.file_name;
      item["valid"] = e.valid;
      if (e.valid) item["checksum"] = e.checksum;
      else item["error"] = e.error;
      entries.push_back(item);
    }
    j["entries"] = entries;
  } else if (cfg.cache_action == "build") {
    const CrystalSpec spec = build_spec(cfg);
    spec.validate(false);
    std::vector<RectShape> distinct;
    for (const auto& s : spec.shapes)
      if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    if (spec.b0 && std::find(distinct.begin(), distinct.end(), *spec.b0) == distinct.end()) distinct.push_back(*spec.b0);
    std::filesystem::create_directories(dir);
    ordered_json built = ordered_json::array();
    for (const auto& a : distinct)
      for (const auto& b : distinct) {
        const RMatrixKey key{spec.n, a, b};
        std::string warning;
        const auto outcome = ensure_cached(dir, key, &warning);
        if (!warning.empty()) err << "warning: " << warning << "\n";
        const char* word = outcome == CacheOutcome::loaded ? "loaded" : outcome == CacheOutcome::built ? "built" : "rebuilt";
        built.push_back({{"file", cache_file_name(key)}, {"outcome", word}});
      }
    j["entries"] = built;
  } else {
    j["removed"] = clear_cache(dir);
  }
  if (cfg.format == "table") {
    if (j.contains("entries"))
      for (const auto& e : j["entries"]) {
        out << e["file"].get<std::string>();
        for (const char* k : {"outcome", "checksum", "error"})
          if (e.contains(k)) out << "  " << e[k].get<std::string>();
        out << "\n";
      }
    else
      out << "removed " << j["removed"].get<std::size_t>() << "\n";
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_straighten(JobConfig cfg, std::ostream& out) {
  // Accepts "n=2 l=1 alpha=2,-2" as well as the flag form.
  for (const auto& tok : cfg.tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw SpecError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    try {
      if (key == "n") cfg.n = std::stoi(val);
      else if (key == "l" || key == "level") cfg.level = std::stoi(val);
      else if (key == "alpha") cfg.alpha = val;
      else throw SpecError("unknown key '" + key + "'");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const SpecError*>(&e)) throw;
      throw SpecError("bad value for " + key + ": '" + val + "'");
    }
  }
  if (!cfg.level || *cfg.level < 1) throw SpecError("straighten needs level l >= 1");
  const FiniteWeight alpha = FiniteWeight::parse(cfg.alpha);
  if (cfg.n == 0) cfg.n = alpha.rank();
  if (cfg.n < 2 || alpha.rank() != cfg.n) throw SpecError("alpha must have n >= 2 coordinates");
  const NormalForm nf = normalize(SchurSymbol{alpha.coords(), 1, 0, *cfg.level});
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "straighten";
  j["n"] = cfg.n;
  j["level"] = *cfg.level;
  j["alpha"] = alpha.coords();
  j["result"] = normal_form_json(nf);
  if (cfg.format == "table") out << "s(" << alpha.to_string() << ") = " << nf.to_string() << "\n";
  else emit(out, j);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine crystal paths, Kostka polynomials and bosonic identities"};
  app.require_subcommand(1);
  JobConfig cfg;
  if (const char* env = std::getenv("CRYSTAL_CACHE_DIR")) cfg.cache_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n of A_{n-1}^(1)");
    sub->add_option("--shapes", cfg.shapes, "tensor factors KxL, leftmost first, comma separated");
    sub->add_option("--level", cfg.level, "level l");
    sub->add_option("--Lambda", cfg.Lambda, "initial weight, e.g. L0 or L0+L1");
    sub->add_option("--LambdaPrime", cfg.LambdaPrime, "final weight");
    sub->add_option("--b0", cfg.b0, "ground crystal shape KxL");
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "R-matrix cache directory");
    sub->add_flag("--widen-check", cfg.widen_check, "recompute with the beta box widened by 2");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all)");
  };

  auto* kostka = app.add_subcommand("kostka", "energy generating function of restricted paths");
  add_common(kostka);
  kostka->add_option("--lambda", cfg.lambda, "classical highest weight, e.g. 2,1,0");
  auto* verify = app.add_subcommand("verify", "alternating sum against restricted paths");
  add_common(verify);
  auto* zero = app.add_subcommand("verify-zero", "level-0 identity and its pairing certificate");
  add_common(zero);
  auto* cache = app.add_subcommand("cache", "R-matrix cache maintenance");
  add_common(cache);
  cache->add_option("action", cfg.cache_action, "list, build or clear")
      ->required()
      ->check(CLI::IsMember({"list", "build", "clear"}));
  auto* straighten = app.add_subcommand("straighten", "normal form of a Schur symbol");
  add_common(straighten);
  straighten->add_option("--alpha", cfg.alpha, "weight a1,...,an");
  straighten->add_option("tokens", cfg.tokens, "n=... l=... alpha=...");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  set_worker_count(cfg.jobs);
  try {
    if (*kostka) return cmd_kostka(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*zero) return cmd_verify_zero(cfg, out, err);
    if (*cache) return cmd_cache(cfg, out, err);
    return cmd_straighten(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace affcrystal
