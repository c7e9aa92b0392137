#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "acceptance.hpp"
#include "cherednik/category_o.hpp"
#include "cherednik/classical.hpp"
#include "cherednik/params.hpp"
#include "cherednik/symfun.hpp"
#include "serialize.hpp"

namespace cherednik::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  std::string tau, mu, lambda, eta, beta, rho;
  std::string tau2, mu2;
  std::string c_prime, nu;
  std::string kind = "exact";
  std::string schur = "principal";
  long long s = 0, l = 0, m = 1, m2 = 1, n = 0, e = 1, k = 1, r = 1, sign = 1, max_l = 8, max_s = 20, mvars = 1;
  // JobConfig overrides.
  std::string config, format;
  bool json_flag = false;
  int N = 0, size_bound = 0, cap = 0;
};

Partition partition_arg(const std::string& text, const std::string& flag) {
  try {
    return io::parse_partition(text);
  } catch (const DomainError& e) {
    throw UsageError("bad value for " + flag + ": '" + text + "' (" + e.what() + ")");
  }
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError("bad value for " + flag + ": '" + text + "'");
  }
}

JobConfig load_config(const std::string& path) {
  JobConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
    cfg.N = j.value("N", cfg.N);
    cfg.size_bound = j.value("size_bound", cfg.size_bound);
    cfg.cap = j.value("cap", cfg.cap);
    cfg.format = j.value("format", cfg.format);
  } catch (const json::exception& e) {
    throw UsageError("bad config file " + path + ": " + e.what());
  }
  return cfg;
}

std::string grammar(const CLI::App* app) {
  std::vector<std::string> path;
  for (const CLI::App* a = app; a && a->get_parent(); a = a->get_parent()) path.insert(path.begin(), a->get_name());
  std::string line = "cherednik-cli";
  for (const auto& p : path) line += " " + p;
  auto subs = app->get_subcommands({});
  if (!subs.empty()) {
    line += " (";
    for (std::size_t i = 0; i < subs.size(); ++i) line += (i ? "|" : "") + subs[i]->get_name();
    return line + ") ...";
  }
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_name() == "--help") continue;
    std::string item = opt->get_name();
    if (opt->get_type_size() != 0) item += " " + (opt->get_type_name().empty() ? "VALUE" : opt->get_type_name());
    line += opt->get_required() ? " " + item : " [" + item + "]";
  }
  return line;
}

const CLI::App* deepest_parsed(const CLI::App* app) {
  for (const CLI::App* sub : app->get_subcommands({}))
    if (sub->parsed()) return deepest_parsed(sub);
  return app;
}

// The word after the deepest recognised subcommand, when that command expects
// a further subcommand name.
std::string unexpected_token(const CLI::App* at, const std::vector<std::string>& args) {
  if (at->get_subcommands({}).empty()) return "";
  std::size_t depth = 0;
  for (const CLI::App* a = at; a->get_parent(); a = a->get_parent()) ++depth;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("-", 0) == 0) {
      // Every option except the flags takes one value.
      if (a != "--json" && a != "--help" && a != "-h" && a.find('=') == std::string::npos) ++i;
      continue;
    }
    if (seen++ == depth) return a;
  }
  return "";
}

json series_table(const VermaTable& t) {
  json comps = json::array();
  for (const auto& [mu, series] : t.components) comps.push_back({{"mu", io::to_json(mu)}, {"series", io::to_json(series)}});
  json out{{"components", comps}};
  if (t.lowest_weight) out["lowest_weight"] = io::to_json(*t.lowest_weight);
  return out;
}

json hooks_json(const Partition& p) {
  json out = json::array();
  for (const auto& [cell, h] : hook_lengths(p)) out.push_back({{"cell", {cell.first, cell.second}}, {"hook", h}});
  return out;
}

json set_json(const std::set<Partition>& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(io::to_json(p));
  return out;
}

json list_json(const std::vector<Partition>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(io::to_json(p));
  return out;
}

json verdict_json(const LineVerdict& v) {
  static const char* names[] = {"Yes", "No", "Unknown"};
  json out{{"verdict", names[v.kind]}};
  if (v.kind == LineVerdict::Yes) {
    out["s"] = v.s;
    out["sign"] = v.sign;
  }
  return out;
}

bool roundtrip_ok(std::ostream& out) {
  bool ok = true;
  for (const auto& p : partitions_up_to(6)) ok &= io::partition_from_json(json::parse(io::emit_json(io::to_json(p)))) == p;
  for (const Rational& q : {Rational(0), Rational(-3, 2), Rational(7), parse_rational("123456789012345678901234567/5")})
    ok &= io::rational_from_json(json::parse(io::emit_json(io::to_json(q)))) == q;
  const QSeries s = simple_char_L_empty_closed(Partition{2, 1}, 2, 8);
  ok &= io::qseries_from_json(json::parse(io::emit_json(io::to_json(s)))) == s;
  const Line line = line_of(Partition{1}, Partition{2, 1}, 3);
  ok &= io::line_from_json(json::parse(io::emit_json(io::to_json(line)))) == line;
  for (const auto& [cp, nu] : std::vector<std::pair<Rational, Rational>>{{Rational(3), Rational(3)},
                                                                        {Rational(2), Rational(4)},
                                                                        {Rational(7), Rational(2)}}) {
    const std::string once = io::emit_json(io::to_json(classify_point(Partition{}, ExactPoint{cp, nu}, 4)));
    ok &= io::emit_json(io::to_json(io::report_from_json(json::parse(once)))) == once;
  }
  out << (ok ? "PASS" : "FAIL") << " suite [serialization round trip]\n";
  return ok;
}

int selftest(std::ostream& out) {
  bool ok = true;
  for (const auto& r : checks::run_criteria()) {
    out << checks::format_line(r) << "\n" << std::flush;
    ok &= r.passed;
  }
  for (const auto& r : checks::run_invariant_suites()) {
    out << checks::format_line(r) << "\n" << std::flush;
    ok &= r.passed;
  }
  ok &= roundtrip_ok(out);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of interpolation-category representations"};
  app.name("cherednik-cli");
  app.fallthrough();
  app.require_subcommand(1);
  Opts o;
  app.add_option("--config", o.config, "JSON config file (default from $" + std::string(kConfigEnv) + ")");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--json", o.json_flag, "same as --format json");
  app.add_option("--N", o.N, "truncation order")->check(CLI::NonNegativeNumber);
  app.add_option("--size-bound", o.size_bound, "diagram size bound")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", o.cap, "stabilization cap")->check(CLI::NonNegativeNumber);

  JobConfig cfg;
  std::map<const CLI::App*, std::function<json()>> actions;
  bool run_selftest = false;

  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto P = [](CLI::App* a, const std::string& flag, std::string& v) {
    a->add_option(flag, v)->required()->type_name("PARTITION");
  };
  auto Q = [](CLI::App* a, const std::string& flag, std::string& v) {
    a->add_option(flag, v)->required()->type_name("RATIONAL");
  };
  auto I = [](CLI::App* a, const std::string& flag, long long& v) { a->add_option(flag, v)->required()->type_name("INT"); };

  // diagram
  auto* diagram = group("diagram", "partition combinatorics");
  auto leaf = [&](CLI::App* parent, const std::string& name, std::function<json()> fn) {
    auto* a = parent->add_subcommand(name);
    actions[a] = std::move(fn);
    return a;
  };
  P(leaf(diagram, "transpose", [&] { return io::to_json(transpose(partition_arg(o.tau, "--tau"))); }), "--tau", o.tau);
  P(leaf(diagram, "content", [&] { return json(content(partition_arg(o.tau, "--tau"))); }), "--tau", o.tau);
  P(leaf(diagram, "f", [&] { return json(f_value(partition_arg(o.tau, "--tau"))); }), "--tau", o.tau);
  P(leaf(diagram, "hooks", [&] { return hooks_json(partition_arg(o.tau, "--tau")); }), "--tau", o.tau);
  {
    auto* a = leaf(diagram, "core", [&] { return io::to_json(core_nu(partition_arg(o.tau, "--tau"), o.s)); });
    P(a, "--tau", o.tau);
    I(a, "--s", o.s);
  }
  {
    auto* a = leaf(diagram, "rec", [&] {
      auto r = rec_nu_detailed(o.l, partition_arg(o.eta, "--eta"));
      return json{{"diagram", io::to_json(r.diagram)}, {"k", r.k}};
    });
    I(a, "--l", o.l);
    P(a, "--eta", o.eta);
  }
  {
    auto* a = leaf(diagram, "gamma", [&] { return io::to_json(gamma(partition_arg(o.tau, "--tau"), o.s, o.l)); });
    P(a, "--tau", o.tau);
    I(a, "--s", o.s);
    I(a, "--l", o.l);
  }
  {
    auto* a = leaf(diagram, "tilde", [&] { return io::to_json(tilde(partition_arg(o.tau, "--tau"), o.n)); });
    P(a, "--tau", o.tau);
    I(a, "--n", o.n);
  }
  P(leaf(diagram, "pieri",
         [&] {
           auto p = pieri_expand(partition_arg(o.tau, "--tau"));
           return json{{"plus", set_json(p.plus)}, {"minus", set_json(p.minus)}, {"zero", set_json(p.zero)},
                       {"corners", p.corners}};
         }),
    "--tau", o.tau);
  {
    auto* a = leaf(diagram, "cset", [&] { return json(c_set_members(partition_arg(o.tau, "--tau"), o.max_s)); });
    P(a, "--tau", o.tau);
    a->add_option("--max-s", o.max_s, "largest s listed")->type_name("INT");
  }

  // line
  auto* line = group("line", "lines in the parameter plane");
  {
    auto* a = leaf(line, "of", [&] { return io::to_json(line_of(partition_arg(o.tau, "--tau"), partition_arg(o.mu, "--mu"), o.m)); });
    P(a, "--tau", o.tau);
    P(a, "--mu", o.mu);
    I(a, "--m", o.m);
  }
  {
    auto* a = leaf(line, "in-b", [&] {
      return verdict_json(line_in_B(partition_arg(o.tau, "--tau"), partition_arg(o.mu, "--mu"), o.m));
    });
    P(a, "--tau", o.tau);
    P(a, "--mu", o.mu);
    I(a, "--m", o.m);
  }
  {
    auto* a = leaf(line, "intersect", [&] {
      auto x = intersect_lines(line_of(partition_arg(o.tau, "--tau"), partition_arg(o.mu, "--mu"), o.m),
                               line_of(partition_arg(o.tau2, "--tau2"), partition_arg(o.mu2, "--mu2"), o.m2));
      static const char* names[] = {"Disjoint", "Point", "Coincide"};
      json j{{"kind", names[x.kind]}};
      if (x.kind == Intersection::Point) {
        j["c_prime"] = io::to_json(x.c_prime);
        j["nu"] = io::to_json(x.nu);
      }
      return j;
    });
    P(a, "--tau", o.tau);
    P(a, "--mu", o.mu);
    I(a, "--m", o.m);
    P(a, "--tau2", o.tau2);
    P(a, "--mu2", o.mu2);
    I(a, "--m2", o.m2);
  }

  // point classify / singular
  auto point_of = [&]() -> ParamPoint {
    if (o.kind == "exact") {
      if (o.c_prime.empty() || o.nu.empty()) throw UsageError("--kind exact needs --c-prime and --nu");
      return make_exact_point(rational_arg(o.c_prime, "--c-prime"), rational_arg(o.nu, "--nu"));
    }
    if (o.kind == "generic-line") return GenericOnLine{o.s, o.r};
    if (o.kind == "generic") return FullyGeneric{};
    return ZeroC{};
  };
  auto point_opts = [&](CLI::App* a) {
    P(a, "--tau", o.tau);
    a->add_option("--kind", o.kind)->check(CLI::IsMember({"exact", "generic-line", "generic", "zero-c"}));
    a->add_option("--c-prime", o.c_prime)->type_name("RATIONAL");
    a->add_option("--nu", o.nu)->type_name("RATIONAL");
    a->add_option("--s", o.s)->type_name("INT");
    a->add_option("--r", o.r)->type_name("INT");
  };
  auto* point = group("point", "classification of parameter points");
  point_opts(leaf(point, "classify", [&] {
    return io::to_json(classify_point(partition_arg(o.tau, "--tau"), point_of(), cfg.size_bound));
  }));
  point_opts(leaf(&app, "singular", [&] {
    const Partition tau = partition_arg(o.tau, "--tau");
    const ParamPoint pt = point_of();
    json j = io::to_json(classify_point(tau, pt, cfg.size_bound));
    j["size_bound"] = cfg.size_bound;
    if (auto* e = std::get_if<ExactPoint>(&pt)) {
      j["h_lowest"] = io::to_json(h_lowest(tau, e->c_prime, e->nu));
      j["degree_one"] = list_json(degree_one_singular(tau, e->c_prime, e->nu));
      j["sizes_beyond_bound_excluded"] = sizes_beyond_bound_excluded(tau, *e, cfg.size_bound);
    }
    return j;
  }));

  // char
  auto* chr = group("char", "graded characters");
  {
    auto* a = leaf(chr, "verma", [&] {
      return io::to_json(verma_char_component(partition_arg(o.mu, "--mu"), partition_arg(o.tau, "--tau"), cfg.N, cfg.cap));
    });
    P(a, "--mu", o.mu);
    P(a, "--tau", o.tau);
  }
  {
    auto* a = leaf(chr, "simple", [&] {
      return io::to_json(simple_char_component(partition_arg(o.mu, "--mu"), partition_arg(o.tau, "--tau"), o.s, o.r,
                                               cfg.N, cfg.cap));
    });
    P(a, "--mu", o.mu);
    P(a, "--tau", o.tau);
    I(a, "--s", o.s);
    I(a, "--r", o.r);
  }
  {
    auto* a = leaf(chr, "l-empty", [&] {
      return io::to_json(simple_char_L_empty_closed(partition_arg(o.mu, "--mu"), static_cast<int>(o.k), cfg.N));
    });
    P(a, "--mu", o.mu);
    I(a, "--k", o.k);
  }
  {
    auto* a = leaf(chr, "table", [&] {
      std::optional<ExactPoint> pt;
      if (!o.c_prime.empty() || !o.nu.empty())
        pt = make_exact_point(rational_arg(o.c_prime, "--c-prime"), rational_arg(o.nu, "--nu"));
      return series_table(character_table_of_verma(partition_arg(o.tau, "--tau"), cfg.size_bound, cfg.N, pt, cfg.cap));
    });
    P(a, "--tau", o.tau);
    a->add_option("--c-prime", o.c_prime)->type_name("RATIONAL");
    a->add_option("--nu", o.nu)->type_name("RATIONAL");
  }
  {
    auto* a = leaf(chr, "min-degree", [&] {
      const Partition mu = partition_arg(o.mu, "--mu"), tau = partition_arg(o.tau, "--tau");
      return json{{"poly", min_degree_poly(mu)}, {"bound", min_degree_bound(mu, tau)}};
    });
    P(a, "--mu", o.mu);
    P(a, "--tau", o.tau);
  }

  // resolution
  {
    auto* a = leaf(&app, "resolution", [&] {
      return io::to_json(resolution(partition_arg(o.tau, "--tau"), o.s, static_cast<int>(o.sign), o.r, o.max_l));
    });
    P(a, "--tau", o.tau);
    I(a, "--s", o.s);
    a->add_option("--sign", o.sign)->check(CLI::IsMember({-1, 1}))->type_name("+1|-1");
    I(a, "--r", o.r);
    a->add_option("--max-l", o.max_l)->type_name("INT");
  }

  // kronecker
  auto* kron = group("kronecker", "Kronecker coefficients");
  {
    auto* a = leaf(kron, "classical", [&] {
      return json(to_string(kronecker(partition_arg(o.lambda, "--lambda"), partition_arg(o.mu, "--mu"),
                                      partition_arg(o.tau, "--tau"))));
    });
    P(a, "--lambda", o.lambda);
    P(a, "--mu", o.mu);
    P(a, "--tau", o.tau);
  }
  {
    auto* a = leaf(kron, "reduced", [&] {
      auto r = reduced_kronecker_detailed(partition_arg(o.lambda, "--lambda"), partition_arg(o.tau, "--tau"),
                                          partition_arg(o.mu, "--mu"), cfg.cap);
      return json{{"value", to_string(r.value)}, {"n_start", r.n_start}, {"n_agreed", r.n_agreed}};
    });
    P(a, "--lambda", o.lambda);
    P(a, "--tau", o.tau);
    P(a, "--mu", o.mu);
  }

  // symmetric functions
  auto* sym = group("symfun", "characters and Schur specializations");
  {
    auto* a = leaf(sym, "character", [&] {
      return json(character_value(partition_arg(o.lambda, "--lambda"), partition_arg(o.rho, "--rho")));
    });
    P(a, "--lambda", o.lambda);
    P(a, "--rho", o.rho);
  }
  {
    auto* a = leaf(sym, "schur", [&] {
      const Partition lam = partition_arg(o.lambda, "--lambda");
      if (o.schur == "finite") return io::to_json(schur_finite(lam, static_cast<int>(o.mvars)));
      if (o.schur == "bar") return io::to_json(schur_bar(lam, cfg.N));
      return io::to_json(schur_principal(lam, cfg.N));
    });
    P(a, "--lambda", o.lambda);
    a->add_option("--kind", o.schur)->check(CLI::IsMember({"principal", "bar", "finite"}));
    a->add_option("--m", o.mvars, "number of variables for --kind finite")->type_name("INT");
  }

  // length
  auto* len = group("length", "length of the simple quotient");
  {
    auto* a = leaf(len, "classify", [&] {
      return io::to_json(length_classification(partition_arg(o.tau, "--tau"), rational_arg(o.c_prime, "--c-prime"),
                                               rational_arg(o.nu, "--nu")));
    });
    P(a, "--tau", o.tau);
    Q(a, "--c-prime", o.c_prime);
    Q(a, "--nu", o.nu);
  }

  // classical
  auto* cls = group("classical", "finite-rank counterparts");
  {
    auto* a = leaf(cls, "core", [&] {
      return io::to_json(classical_core(partition_arg(o.lambda, "--lambda"), static_cast<int>(o.e)));
    });
    P(a, "--lambda", o.lambda);
    I(a, "--e", o.e);
  }
  {
    auto* a = leaf(cls, "rec", [&] {
      auto r = classical_rec_detailed(static_cast<int>(o.l), partition_arg(o.beta, "--beta"), static_cast<int>(o.e));
      return json{{"diagram", io::to_json(r.diagram)}, {"vertex", {r.vertex.first, r.vertex.second}}};
    });
    I(a, "--l", o.l);
    P(a, "--beta", o.beta);
    I(a, "--e", o.e);
  }
  {
    auto* a = leaf(cls, "block-chain", [&] {
      return list_json(block_chain(partition_arg(o.beta, "--beta"), static_cast<int>(o.n), static_cast<int>(o.s)));
    });
    P(a, "--beta", o.beta);
    I(a, "--n", o.n);
    I(a, "--s", o.s);
  }
  {
    auto* a = leaf(cls, "simple", [&] {
      return json(verma_simple_classical(partition_arg(o.lambda, "--lambda"), static_cast<int>(o.n),
                                         static_cast<int>(o.s)));
    });
    P(a, "--lambda", o.lambda);
    I(a, "--n", o.n);
    I(a, "--s", o.s);
  }
  {
    auto* a = leaf(cls, "char", [&] {
      return io::to_json(classical_graded_char(partition_arg(o.mu, "--mu"), partition_arg(o.tau, "--tau"),
                                               static_cast<int>(o.n), cfg.N));
    });
    P(a, "--mu", o.mu);
    P(a, "--tau", o.tau);
    I(a, "--n", o.n);
  }

  app.add_subcommand("selftest", "run the acceptance criteria and invariant suites")->callback([&] {
    run_selftest = true;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const CLI::App* at = deepest_parsed(&app);
    err << "usage error: " << e.what();
    const std::string token = unexpected_token(at, args);
    if (!token.empty()) err << " (unexpected '" << token << "')";
    err << "\n  " << grammar(at) << "\n";
    return 2;
  }

  const CLI::App* chosen = deepest_parsed(&app);
  try {
    std::string path = o.config;
    if (path.empty())
      if (const char* env = std::getenv(kConfigEnv)) path = env;
    cfg = load_config(path);
    if (app.count("--N")) cfg.N = o.N;
    if (app.count("--size-bound")) cfg.size_bound = o.size_bound;
    if (app.count("--cap")) cfg.cap = o.cap;
    if (app.count("--format")) cfg.format = o.format;
    if (o.json_flag) cfg.format = "json";
    if (cfg.N < 0 || cfg.size_bound < 0) throw UsageError("N and size_bound must be nonnegative");

    if (run_selftest) return selftest(out);
    auto it = actions.find(chosen);
    if (it == actions.end()) throw UsageError("no command given");
    const json result = it->second();
    out << (cfg.format == "json" ? io::emit_json(result) + "\n" : io::emit_text(result));
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n  " << grammar(chosen) << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cherednik::cli
