// wgshift: classify weighted generalized shifts over finite rings, simulate
// coordinate traces, construct verified witnesses, and run brute-force
// oracle sweeps.
//
// Exit codes: 0 success, 1 witness verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wgs/io.hpp"

namespace {

using wgs::Json;

struct Transcript {
  Json checks = Json::array();
  int failed = 0;

  void add(const std::string& name, bool ok, Json detail = Json()) {
    Json c{{"name", name}, {"ok", ok}};
    if (!detail.is_null()) c["detail"] = detail;
    checks.push_back(c);
    if (!ok) ++failed;
  }
  Json json() const { return Json{{"checks", checks}, {"failed", failed}}; }
};

Json parse_json_arg(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw wgs::ParseError("$", "invalid JSON in " + what);
  return j;
}

// "64" means [0, 64); "lo:hi" a half-open range. The defaults depend on the
// index model.
std::pair<wgs::Index, wgs::Index> parse_window(const std::string& text,
                                               const wgs::System& sys) {
  if (text.empty()) {
    switch (sys.kind()) {
      case wgs::ModelKind::Finite:
        return {0, sys.table_hi()};
      case wgs::ModelKind::CofiniteShift:
        return {0, 64};
      case wgs::ModelKind::IntegerShift:
        return {-32, 32};
    }
  }
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {0, std::stoll(text)};
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw wgs::ParseError("--window", "expected N or lo:hi");
  }
}

std::vector<wgs::Index> default_m(const wgs::System& sys, wgs::Index nu) {
  return {nu, sys.phi(nu), sys.phi(sys.phi(nu))};
}

int run_witness(const wgs::System& sys, const std::string& kind,
                const std::string& nu_opt, int count, long long bound,
                int family_size, const std::string& cylinder_opt,
                const std::string& theta_opt, const std::string& pinned_opt,
                const std::string& config_opt, const std::string& u_opt,
                const std::string& v_opt, long long horizon) {
  const wgs::Ring& ring = sys.ring();
  Json out;
  Transcript t;

  if (kind == "scrambled") {
    wgs::Index nu;
    if (!nu_opt.empty()) {
      nu = std::stoll(nu_opt);
    } else {
      wgs::Verdict v = wgs::classify_li_yorke(sys);
      if (v.status != wgs::Status::Yes || !v.witness_index)
        throw wgs::NotApplicable("no scrambled pair: Li-Yorke verdict is not Yes");
      nu = *v.witness_index;
    }
    auto family = wgs::branch_family(family_size);
    wgs::ScrambledPair pair = wgs::scrambled_pair(sys, nu, family[0], family[1]);
    auto nonasym = wgs::nonasym_times(sys, pair, bound);
    if (static_cast<int>(nonasym.size()) > count) nonasym.resize(count);
    std::vector<wgs::Index> m = default_m(sys, nu);
    auto schedule = wgs::prox_schedule(sys, pair, m, count);

    std::vector<wgs::Index> nu_only{nu};
    for (long long time : nonasym)
      t.add("disagree at nu at time " + std::to_string(time),
            !wgs::agree_at(sys, pair.x, pair.y, time, nu_only));
    for (long long time : schedule)
      t.add("agree on M at time " + std::to_string(time),
            wgs::agree_at(sys, pair.x, pair.y, time, m));
    out = Json{{"kind", "scrambled"},
               {"nu", nu},
               {"e", wgs::set_json(pair.e)},
               {"f", wgs::set_json(pair.f)},
               {"nonasym_times", nonasym},
               {"prox_schedule", Json{{"M", m}, {"times", schedule}}}};
  } else if (kind == "periodic") {
    if (cylinder_opt.empty())
      throw wgs::ParseError("--cylinder", "required for periodic witnesses");
    wgs::Cylinder cyl = wgs::parse_cylinder(
        sys, parse_json_arg(cylinder_opt, "--cylinder"), "--cylinder");
    wgs::PeriodicWitness w = wgs::periodic_point(sys, cyl);
    t.add("cylinder membership", wgs::in_cylinder(sys, w.y, cyl));
    wgs::Index vlo = 0, vhi = 0;
    if (!w.closure.empty()) {
      vlo = w.closure.front() - 50;
      vhi = w.closure.back() + 50;
    } else {
      vlo = sys.table_lo() - 10;
      vhi = sys.table_hi() + 10;
    }
    if (sys.kind() != wgs::ModelKind::IntegerShift) vlo = std::max<wgs::Index>(vlo, 0);
    if (sys.kind() == wgs::ModelKind::Finite) vhi = sys.table_hi();
    bool fixed = true;
    for (wgs::Index a = vlo; a < vhi; ++a)
      if (!(wgs::iterate_coord(sys, w.y, w.period, a) == wgs::config_eval(sys, w.y, a)))
        fixed = false;
    t.add("sigma^T fixes the witness on the verification window", fixed);
    out = Json{{"kind", "periodic"},
               {"T", w.period},
               {"A", w.closure},
               {"y", wgs::config_json(sys, w.y)}};
  } else if (kind == "separation") {
    if (theta_opt.empty())
      throw wgs::ParseError("--theta", "required for separation witnesses");
    wgs::Index theta = std::stoll(theta_opt);
    std::vector<wgs::Index> pinned;
    if (!pinned_opt.empty())
      for (const Json& v : parse_json_arg(pinned_opt, "--pinned"))
        pinned.push_back(v.get<wgs::Index>());
    wgs::Config x = config_opt.empty()
                        ? wgs::Config::finite_support(sys, {})
                        : wgs::parse_config(sys, parse_json_arg(config_opt, "--config"),
                                            "--config");
    auto w = wgs::separation_witness(sys, x, pinned, theta);
    for (wgs::Index p : pinned)
      t.add("agrees with x at pinned index " + std::to_string(p),
            wgs::config_eval(sys, w.z, p) == wgs::config_eval(sys, x, p));
    std::vector<wgs::Index> th{theta};
    bool separated = true;
    for (long long m = w.start; m <= w.start + horizon; ++m)
      if (wgs::agree_at(sys, x, w.z, m, th)) separated = false;
    t.add("disagrees at theta for all checked iterates", separated);
    out = Json{{"kind", "separation"},
               {"theta", theta},
               {"N", w.start},
               {"z", wgs::config_json(sys, w.z)}};
  } else if (kind == "transit") {
    if (u_opt.empty() || v_opt.empty())
      throw wgs::ParseError("--u/--v", "required for transit witnesses");
    wgs::Cylinder u = wgs::parse_cylinder(sys, parse_json_arg(u_opt, "--u"), "--u");
    wgs::Cylinder v = wgs::parse_cylinder(sys, parse_json_arg(v_opt, "--v"), "--v");
    auto w = wgs::transit_witness(sys, u, v);
    t.add("x in U", wgs::in_cylinder(sys, w.x, u));
    bool lands = true;
    for (auto [beta, sval] : v.constraints)
      if (!(wgs::iterate_coord(sys, w.x, w.p, beta) == sval)) lands = false;
    t.add("sigma^p(x) in V", lands);
    out = Json{{"kind", "transit"}, {"p", w.p}, {"x", wgs::config_json(sys, w.x)}};
  } else if (kind == "preimage") {
    if (config_opt.empty())
      throw wgs::ParseError("--config", "required for preimage witnesses");
    wgs::Config x =
        wgs::parse_config(sys, parse_json_arg(config_opt, "--config"), "--config");
    wgs::Config z = wgs::preimage(sys, x);
    wgs::Config shifted = wgs::apply_shift(sys, z);
    bool exact = wgs::config_json(sys, shifted) == wgs::config_json(sys, x);
    t.add("sigma(z) equals x", exact);
    out = Json{{"kind", "preimage"}, {"z", wgs::config_json(sys, z)}};
  } else {
    throw wgs::ParseError("witness",
                          "unknown witness kind '" + kind +
                              "' (scrambled|periodic|separation|transit|preimage)");
  }
  (void)ring;
  out["verification"] = t.json();
  if (t.failed > 0) out["system"] = wgs::system_json(sys);  // for reproduction
  std::cout << out.dump(2) << "\n";
  return t.failed == 0 ? 0 : 1;
}

int run_oracle(const std::string& file, const std::string& mode) {
  std::ifstream in(file);
  if (!in) throw wgs::ParseError("$", "cannot open '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (mode == "properties") {
    wgs::System sys = wgs::parse_system_text(ss.str());
    wgs::StateSpace space = wgs::StateSpace::build(sys);
    wgs::BfProperties bf = wgs::bf_properties(space);
    long long per_count = 0;
    Json per_states = Json::array();
    for (long long s = 0; s < space.size; ++s)
      if (bf.per_set[static_cast<size_t>(s)]) {
        ++per_count;
        if (per_states.size() < 1024) per_states.push_back(s);
      }
    Json out{{"states", space.size},
             {"onto", bf.onto},
             {"per_dense", bf.per_dense},
             {"transitive", bf.transitive},
             {"per_count", per_count},
             {"per_states", per_states}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (mode == "sweep") {
    Json doc = parse_json_arg(ss.str(), "sweep matrix");
    Json entries = doc.contains("sweeps") ? doc["sweeps"] : Json::array({doc});
    Json reports = Json::array();
    bool violated = false;
    for (size_t i = 0; i < entries.size(); ++i) {
      const std::string at = "$.sweeps[" + std::to_string(i) + "]";
      const Json& e = entries[i];
      if (!e.contains("size"))
        throw wgs::ParseError(at + ".size", "missing field");
      int n = e["size"].get<int>();
      wgs::RingSpec ring = wgs::parse_ring_spec(e.at("ring"), at + ".ring");
      wgs::SweepReport r = wgs::sweep_equivalence(n, ring);
      violated = violated || !r.violations.empty();
      reports.push_back(wgs::sweep_report_json(n, ring, r));
    }
    std::cout << reports.dump(2) << "\n";
    return violated ? 1 : 0;
  }
  throw wgs::ParseError("oracle", "unknown mode '" + mode + "' (sweep|properties)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Chaos classification for weighted generalized shifts over finite "
      "commutative rings"};
  app.require_subcommand(1);

  std::string file, config_opt, window_opt, kind, cylinder_opt, theta_opt,
      pinned_opt, u_opt, v_opt, nu_opt, mode;
  long long steps = 10, bound = 200, horizon = 25;
  int count = 10, family_size = 10;

  auto* classify = app.add_subcommand("classify", "Emit the chaos report");
  classify->add_option("file", file, "system description")->required();

  auto* simulate = app.add_subcommand("simulate", "CSV trace of sigma^n(x)");
  simulate->add_option("file", file, "system description")->required();
  simulate->add_option("--config", config_opt, "configuration literal (JSON)")
      ->required();
  simulate->add_option("--steps", steps, "number of iterates (default 10)");
  simulate->add_option("--window", window_opt, "coordinate window: N or lo:hi");

  auto* witness = app.add_subcommand("witness", "Construct and verify a witness");
  witness->add_option("file", file, "system description")->required();
  witness
      ->add_option("kind", kind, "scrambled|periodic|separation|transit|preimage")
      ->required();
  witness->add_option("--nu", nu_opt, "base point for scrambled pairs");
  witness->add_option("--count", count, "times to emit/check (default 10)");
  witness->add_option("--bound", bound, "search bound (default 200)");
  witness->add_option("--family", family_size, "branch family size (default 10)");
  witness->add_option("--cylinder", cylinder_opt, "cylinder literal (JSON)");
  witness->add_option("--theta", theta_opt, "separation base point");
  witness->add_option("--pinned", pinned_opt, "pinned index list (JSON)");
  witness->add_option("--config", config_opt, "configuration literal (JSON)");
  witness->add_option("--u", u_opt, "source cylinder (JSON)");
  witness->add_option("--v", v_opt, "target cylinder (JSON)");
  witness->add_option("--horizon", horizon, "separation check horizon (default 25)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->add_option("file", file, "system description or sweep matrix")
      ->required();
  oracle->add_option("mode", mode, "sweep|properties")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) {
      wgs::System sys = wgs::load_system_file(file);
      std::cout << wgs::report_json(wgs::classify_all(sys)).dump(2) << "\n";
      return 0;
    }
    if (app.got_subcommand(simulate)) {
      wgs::System sys = wgs::load_system_file(file);
      wgs::Config x =
          wgs::parse_config(sys, parse_json_arg(config_opt, "--config"), "--config");
      auto [wlo, whi] = parse_window(window_opt, sys);
      std::cout << wgs::simulate_csv(sys, x, steps, wlo, whi);
      return 0;
    }
    if (app.got_subcommand(witness)) {
      wgs::System sys = wgs::load_system_file(file);
      return run_witness(sys, kind, nu_opt, count, bound, family_size,
                         cylinder_opt, theta_opt, pinned_opt, config_opt, u_opt,
                         v_opt, horizon);
    }
    if (app.got_subcommand(oracle)) return run_oracle(file, mode);
  } catch (const wgs::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
