#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxlink/acceptance.hpp"
#include "coxlink/charts.hpp"
#include "coxlink/error.hpp"
#include "coxlink/homfly.hpp"
#include "coxlink/localization.hpp"
#include "coxlink/mfcheck.hpp"
#include "coxlink/serialize.hpp"
#include "coxlink/twostrand.hpp"
#include "coxlink/weights.hpp"

namespace {

using namespace coxlink;
using serialize::Json;

constexpr int kExitValidation = 2;
constexpr int kExitCheckFailed = 3;

struct RunConfig {
  std::string format = "plain";
  long depth = 40;
  std::uint64_t seed = 0;
  int threads = 0;
  int n = 0;
  std::vector<int> k;
  std::vector<int> link_s;
  std::string convention = "torus-action";
  std::string parity;
  std::string braid;
  int samples = 500;
  bool control = false;
  std::string level = "quick";
};

bool tree(const RunConfig& c) { return c.format == "tree"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

weights::WeightConvention convention(const RunConfig& c) {
  return c.convention == "as-printed" ? weights::WeightConvention::AsPrinted : weights::WeightConvention::TorusAction;
}

std::set<int> link_set(const RunConfig& c) { return {c.link_s.begin(), c.link_s.end()}; }

int cmd_charts(const RunConfig& c) {
  Json all = Json::array();
  for (const auto& ch : charts::all_charts(c.n)) {
    if (tree(c)) all.push_back(serialize::chart_tree(ch));
    else std::cout << serialize::chart_line(ch) << "\n";
  }
  if (tree(c)) emit(all);
  return 0;
}

int cmd_weights(const RunConfig& c) {
  Json all = Json::array();
  for (const auto& ch : charts::all_charts(c.n)) {
    if (tree(c)) all.push_back(serialize::weights_tree(ch, convention(c)));
    else std::cout << serialize::weights_line(ch, convention(c)) << "\n";
  }
  if (tree(c)) emit(all);
  return 0;
}

int cmd_superpoly(const RunConfig& c) {
  localization::Options opt;
  opt.convention = convention(c);
  auto sp = localization::superpolynomial_even(c.n, c.k, link_set(c), opt);
  if (tree(c)) {
    Json j = serialize::superpolynomial_tree(sp);
    j["series_degree"] = c.depth;
    try {
      j["series"] = serialize::poly_tree(polyalg::truncate_series(sp.image, {1, 1, 1}, c.depth));
    } catch (const ExpansionError&) {
      j["series"] = nullptr;
    }
    emit(j);
  } else {
    std::cout << serialize::superpolynomial_text(sp);
  }
  return 0;
}

int cmd_twostrand(const RunConfig& c) {
  if (c.parity != "odd" && c.parity != "even") {
    throw ArgumentError("cli", "twostrand needs 'odd' or 'even', got '" + c.parity + "'", "use: twostrand odd|even <n>");
  }
  auto r = c.parity == "odd" ? twostrand::homology_T2_odd(c.n) : twostrand::homology_T2_even(c.n);
  std::string knot = c.parity == "odd" ? "T(2," + std::to_string(2 * c.n + 1) + ")" : "T(2," + std::to_string(2 * c.n) + ")";
  auto series = polyalg::truncate_series(r, {1, 1, 1}, c.depth);
  if (tree(c)) {
    emit({{"link", knot}, {"homology", serialize::rational_tree(r)}, {"series_degree", c.depth},
          {"series", serialize::poly_tree(series)}});
  } else {
    std::cout << knot << ": " << r.to_string() << "\n";
  }
  return 0;
}

void print_homfly(const RunConfig& c, const homfly::BraidWord& b) {
  auto p = homfly::homfly(b);
  if (tree(c)) {
    emit({{"braid", b.to_string()}, {"components", b.components()}, {"writhe", b.writhe()},
          {"homfly", serialize::poly_tree(p)}});
  } else {
    std::cout << b.to_string() << "\n" << p.to_string() << "\n";
  }
}

int cmd_homfly(const RunConfig& c) {
  print_homfly(c, homfly::parse_braid(c.braid));
  return 0;
}

int cmd_coxbraid(const RunConfig& c) {
  print_homfly(c, homfly::coxeter_braid(c.n, link_set(c), c.k));
  return 0;
}

int cmd_degenerate(const RunConfig& c) {
  auto list = localization::detect_degenerate(c.n, convention(c));
  if (tree(c)) {
    Json labels = Json::array();
    for (const auto& s : list) labels.push_back(s.encode());
    emit({{"n", c.n}, {"convention", weights::convention_name(convention(c))}, {"degenerate", labels}});
  } else {
    for (const auto& s : list) std::cout << s.encode() << "\n";
    std::cout << list.size() << " degenerate charts\n";
  }
  return 0;
}

int cmd_gyt(const RunConfig& c) {
  auto rep = charts::gyt_injectivity_report(c.n);
  if (tree(c)) {
    Json groups = Json::array();
    for (const auto& g : rep.collisions) {
      Json labels = Json::array();
      for (const auto& s : g) labels.push_back(s.encode());
      groups.push_back({{"gyt", charts::to_gyt(charts::build_chart(g.front())).encode()}, {"charts", labels}});
    }
    emit({{"n", rep.n}, {"charts", rep.charts}, {"images", rep.images}, {"injective", rep.collisions.empty()},
          {"collisions", groups}});
  } else {
    std::cout << "n=" << rep.n << " charts=" << rep.charts << " images=" << rep.images
              << " collisions=" << rep.collisions.size() << "\n";
    for (const auto& g : rep.collisions) {
      std::cout << "gyt " << charts::to_gyt(charts::build_chart(g.front())).encode() << ":";
      for (const auto& s : g) std::cout << " [" << s.encode() << "]";
      std::cout << "\n";
    }
  }
  return rep.collisions.empty() ? 0 : kExitCheckFailed;
}

int cmd_mfcheck(const RunConfig& c) {
  auto rep = mfcheck::run_samples(c.n, c.samples, c.seed);
  std::optional<mfcheck::NegativeControl> control;
  if (c.control) control = mfcheck::negative_control(c.n, c.seed);
  if (tree(c)) {
    emit(serialize::mfcheck_tree(rep, control ? &*control : nullptr));
  } else {
    std::cout << (rep.passed() ? "PASS" : "FAIL") << " n=" << rep.n << " samples=" << rep.samples
              << " seed=" << rep.seed << " vanishing_failures=" << rep.vanishing_failures
              << " containment_failures=" << rep.containment_failures << "\n";
    for (const auto& d : rep.counterexamples) std::cout << "counterexample " << d << "\n";
    if (control) {
      std::cout << "negative control: " << (control->found ? control->dump : "none found") << " after "
                << control->tries << " tries\n";
    }
  }
  return rep.passed() ? 0 : kExitCheckFailed;
}

int cmd_check(const RunConfig& c) {
  auto level = c.level == "full" ? acceptance::Level::Full : acceptance::Level::Quick;
  auto results = acceptance::run(level, c.seed);
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (tree(c)) {
      all.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                     {"seconds", r.seconds}, {"budget", r.budget}});
    } else {
      std::cout << acceptance::format(r) << "\n";
    }
  }
  if (tree(c)) emit({{"level", c.level}, {"seed", c.seed}, {"criteria", all}});
  return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superpolynomials of Coxeter links by torus-fixed-point localization"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "tree"}))->capture_default_str();
  app.add_option("-D,--depth", cfg.depth, "Truncation degree of series output")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed of randomized checks")->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto conv_opt = [&](CLI::App* sub) {
    sub->add_option("--convention", cfg.convention, "Weight convention")
        ->check(CLI::IsMember({"torus-action", "as-printed"}))
        ->capture_default_str();
  };
  auto n_arg = [&](CLI::App* sub, int lo, int hi) {
    sub->add_option("n", cfg.n, "Number of strands")->required()->check(CLI::Range(lo, hi));
  };
  auto k_args = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Twist vector k_1,...,k_{n-1}")->delimiter(',');
    sub->add_option("--link-s", cfg.link_s, "Subset S of 1..n-1")->delimiter(',');
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> commands;
  auto* charts_cmd = app.add_subcommand("charts", "List the charts of NS_n");
  n_arg(charts_cmd, 1, 9);
  commands.push_back({charts_cmd, cmd_charts});

  auto* weights_cmd = app.add_subcommand("weights", "Torus weights of every chart");
  n_arg(weights_cmd, 1, 9);
  conv_opt(weights_cmd);
  commands.push_back({weights_cmd, cmd_weights});

  auto* super_cmd = app.add_subcommand("superpoly", "Even superpolynomial of the Coxeter link");
  n_arg(super_cmd, 1, 7);
  k_args(super_cmd);
  conv_opt(super_cmd);
  commands.push_back({super_cmd, cmd_superpoly});

  auto* two_cmd = app.add_subcommand("twostrand", "Closed-form homology of T(2,2n+1) or T(2,2n)");
  two_cmd->add_option("parity", cfg.parity, "odd or even")->required();
  two_cmd->add_option("n", cfg.n, "Twist parameter")->required();
  commands.push_back({two_cmd, cmd_twostrand});

  auto* homfly_cmd = app.add_subcommand("homfly", "HOMFLY-PT of a braid closure");
  homfly_cmd->add_option("braid", cfg.braid, "Braid text, e.g. \"strands=3 s1 s2^-1\" or \"[1,-2]\"")->required();
  commands.push_back({homfly_cmd, cmd_homfly});

  auto* cox_cmd = app.add_subcommand("coxbraid", "Coxeter braid and its HOMFLY-PT");
  n_arg(cox_cmd, 1, 6);
  k_args(cox_cmd);
  commands.push_back({cox_cmd, cmd_coxbraid});

  auto* deg_cmd = app.add_subcommand("degenerate", "Charts with a vanishing tangent weight");
  n_arg(deg_cmd, 1, 7);
  conv_opt(deg_cmd);
  commands.push_back({deg_cmd, cmd_degenerate});

  auto* gyt_cmd = app.add_subcommand("gyt", "Injectivity of the chart to tableau map");
  n_arg(gyt_cmd, 1, 7);
  commands.push_back({gyt_cmd, cmd_gyt});

  auto* mf_cmd = app.add_subcommand("mfcheck", "Random checks of the Hessenberg identities");
  mf_cmd->add_option("--n", cfg.n, "Matrix size")->required()->check(CLI::Range(2, 12));
  mf_cmd->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();
  mf_cmd->add_flag("--negative-control", cfg.control, "Also search a non-Hessenberg counterexample");
  commands.push_back({mf_cmd, cmd_mfcheck});

  auto* check_cmd = app.add_subcommand("check", "Run the acceptance criteria");
  check_cmd->add_option("--level", cfg.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  commands.push_back({check_cmd, cmd_check});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  set_parallelism(cfg.threads);
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << "\nremedy: " << e.remedy() << "\n";
    bool validation = dynamic_cast<const ArgumentError*>(&e) || dynamic_cast<const CapacityError*>(&e) ||
                      dynamic_cast<const ParseError*>(&e);
    return validation ? kExitValidation : 1;
  }
  return 0;
}
