#include "uncross/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "uncross/checks.hpp"
#include "uncross/io.hpp"
#include "uncross/medial.hpp"
#include "uncross/shelling.hpp"

namespace uncross {

namespace {

int write_output(const CliConfig& cfg, const std::string& text, std::ostream& out,
                 std::ostream& err) {
  if (cfg.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(cfg.output);
  if (!f) {
    err << "cannot open output file: " << cfg.output << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n > 5) {
    err << "verify supports n <= 5\n";
    return 2;
  }
  if (cfg.n == 5 && cfg.budget <= 0) {
    err << "verify at n = 5 requires --budget\n";
    return 2;
  }
  std::vector<std::string> names = cfg.checks.empty() ? default_check_names(cfg.n) : cfg.checks;
  for (const auto& name : names)
    if (!is_check_name(name)) {
      err << "unknown check: " << name << "\n";
      return 2;
    }
  const auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&] {
    if (cfg.budget <= 0) return false;
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    return el.count() > cfg.budget;
  };
  CheckContext ctx(cfg.n, cfg.jobs, cfg.seed);
  bool all_pass = true;
  std::ostringstream res;
  for (const auto& name : names) {
    if (out_of_budget()) {
      CheckReport rep;
      rep.name = name;
      rep.universe = "skipped";
      rep.violations.push_back("budget exceeded before this check started");
      res << to_json_line(rep) << "\n";
      all_pass = false;
      continue;
    }
    const CheckReport rep = run_check(name, ctx);
    res << to_json_line(rep) << "\n";
    if (!rep.pass()) all_pass = false;
  }
  nlohmann::ordered_json summary;
  summary["command"] = "verify";
  summary["n"] = cfg.n;
  summary["seed"] = cfg.seed;
  summary["allPass"] = all_pass;
  res << summary.dump() << "\n";
  const int werr = write_output(cfg, res.str(), out, err);
  if (werr) return werr;
  return all_pass ? 0 : 1;
}

int run_mobius(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const GradedPoset P = GradedPoset::build(cfg.n, cfg.bottom);
  if (cfg.x < 0 || cfg.y < 0 || cfg.x >= P.size() || cfg.y >= P.size()) {
    err << "mobius needs element ids x y in 0.." << P.size() - 1 << "\n";
    return 2;
  }
  if (!P.leq(cfg.x, cfg.y)) {
    err << "elements " << cfg.x << " and " << cfg.y << " are incomparable\n";
    return 1;
  }
  const long long mu = P.mobius(cfg.x, cfg.y);
  const long long parity = (P.rank(cfg.y) - P.rank(cfg.x)) % 2 == 0 ? 1 : -1;
  nlohmann::ordered_json j;
  j["x"] = cfg.x;
  j["y"] = cfg.y;
  j["mu"] = mu;
  j["rankParity"] = parity;
  out << j.dump() << "\n";
  return mu == parity ? 0 : 1;
}

int run_shelling(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n != 3) {
    err << "shelling is only available at n = 3\n";
    return 2;
  }
  const GradedPoset P = GradedPoset::build(3, true);
  const ShellingResult res = p3_shelling_search(P, false);
  nlohmann::ordered_json j;
  j["relabeling"] = res.relabeling;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& [edge, sym] : res.labeling.label) {
    nlohmann::ordered_json e;
    e["lower"] = edge.first;
    e["upper"] = edge.second;
    e["symbol"] = res.labeling.symbol_names[sym];
    labels.push_back(std::move(e));
  }
  j["labels"] = std::move(labels);
  std::ostringstream res_text;
  res_text << j.dump() << "\n" << to_json_line(res.report) << "\n";
  const int werr = write_output(cfg, res_text.str(), out, err);
  if (werr) return werr;
  return res.pass ? 0 : 1;
}

int run_medial_demo(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Matching tau = top_matching(cfg.n);
  if (!cfg.matching_json.empty()) {
    try {
      tau = matching_from_json(cfg.matching_json);
    } catch (const std::exception& e) {
      err << "bad matching: " << e.what() << "\n";
      return 2;
    }
  }
  std::ostringstream res;
  const MedialGraph g = MedialGraph::from_matching(tau);
  nlohmann::ordered_json j;
  j["matching"] = tau.partners();
  j["crossings"] = g.crossings();
  j["strands"] = static_cast<int>(g.strands().size());
  j["lensless"] = g.is_lensless();
  res << j.dump() << "\n";
  for (int v : g.internal_vertices()) {
    for (int dir : {0, 1}) {
      const MedialGraph h = g.resolve_crossing(v, dir);
      nlohmann::ordered_json r;
      r["resolved"] = v;
      r["dir"] = dir;
      r["lenslessBeforeReduction"] = h.is_lensless();
      r["matchingAfterReduction"] = h.to_matching().partners();
      res << r.dump() << "\n";
    }
    break;  // one crossing is demonstration enough
  }
  return write_output(cfg, res.str(), out, err);
}

}  // namespace

int cli_run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 1) {
      err << "n must be >= 1\n";
      return 2;
    }
    if (cfg.command == "build" || cfg.command == "export-dot") {
      if (cfg.n > 6) {
        err << "build/export-dot support n <= 6\n";
        return 2;
      }
      const GradedPoset P = GradedPoset::build(cfg.n, cfg.bottom);
      return write_output(cfg, cfg.command == "build" ? poset_to_json(P) : poset_to_dot(P),
                          out, err);
    }
    if (cfg.command == "verify") return run_verify(cfg, out, err);
    if (cfg.command == "mobius") return run_mobius(cfg, out, err);
    if (cfg.command == "shelling") return run_shelling(cfg, out, err);
    if (cfg.command == "medial-demo") return run_medial_demo(cfg, out, err);
    err << "unknown command: " << cfg.command << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace uncross
