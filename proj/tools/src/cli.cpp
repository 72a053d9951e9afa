#include "arbor/cli.hpp"

#include <signal.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "arbor/closed_forms.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/game.hpp"
#include "arbor/http_server.hpp"
#include "arbor/interval.hpp"
#include "arbor/json_io.hpp"
#include "arbor/play_service.hpp"
#include "arbor/simulate.hpp"
#include "arbor/tree_io.hpp"
#include "arbor/verifier.hpp"

namespace arbor::cli {
namespace {

using nlohmann::json;

std::string fixed(const Rational& r, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, r.approx());
  return buf;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

int env_int(const char* name, int fallback) {
  auto v = env(name);
  if (!v) return fallback;
  try {
    return std::stoi(*v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be an integer, got '" + *v + "'");
  }
}

Tree read_tree(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_tree(text);
  }
  return parse_tree_spec(spec);
}

Model model_or_throw(const std::string& name) {
  auto m = parse_model(name);
  if (!m)
    throw std::invalid_argument("unknown model '" + name +
                                "' (expected oo, semirandom-first, semirandom-second or random-random)");
  return *m;
}

struct Options {
  std::string tree;
  std::string model = "semirandom-first";
  std::string format = "text";
  std::string output;
  std::string sweep;
  int n = 0;
  int from = 0;
  int k = 0;
  int max_n = 7;
  int threads = 0;
  bool count_only = false;
  bool keep_values = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  int analysis_cap = 64;
  std::string persist_dir;
  std::string cors;
  std::string static_dir;
};

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::invalid_argument("unsupported --format '" + format + "'");
}

// --- subcommands ---------------------------------------------------------------

int cmd_value(const Options& o, std::istream& in, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  Model model = model_or_throw(o.model);
  Tree t = read_tree(o.tree, in);
  GameSolver solver;
  ModelValue mv = solver.value(t, model);
  if (o.format == "json") {
    json by = json::array();
    for (const auto& p : mv.by_vertex) by.push_back(rational_to_json(p));
    out << json{{"tree", tree_to_json(t)},
                {"model", to_string(model)},
                {"value", rational_to_json(mv.value)},
                {"by_vertex", by},
                {"moves", mv.moves}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << to_string(model) << " value: " << mv.value << " (" << fixed(mv.value) << ")\n";
  out << "vertex  first-move value\n";
  for (std::size_t v = 0; v < mv.by_vertex.size(); ++v) {
    bool best = std::find(mv.moves.begin(), mv.moves.end(), static_cast<Vertex>(v)) != mv.moves.end();
    out << std::setw(6) << v << "  " << mv.by_vertex[v] << " (" << fixed(mv.by_vertex[v]) << ")"
        << (best ? "  *" : "") << "\n";
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "csv", "json"});
  if (o.max_n < 1) throw std::invalid_argument("--max must be at least 1");
  if (o.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= o.max_n; ++n)
      rows.push_back(json{{"n", n}, {"p", rational_to_json(path_p(n))}, {"q", rational_to_json(path_q(n))}});
    out << json{{"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  if (o.format == "csv") {
    out << "n,p,q,p_approx,q_approx\n";
    for (int n = 1; n <= o.max_n; ++n)
      out << n << "," << path_p(n) << "," << path_q(n) << "," << fixed(path_p(n)) << "," << fixed(path_q(n))
          << "\n";
    return 0;
  }
  out << std::setw(4) << "n" << "  " << std::setw(28) << "p_n" << "  " << std::setw(28) << "q_n" << "\n";
  for (int n = 1; n <= o.max_n; ++n) {
    Prob p = path_p(n), q = path_q(n);
    std::string ps = p.str() + " (" + fixed(p, 6) + ")";
    std::string qs = q.str() + " (" + fixed(q, 6) + ")";
    out << std::setw(4) << n << "  " << std::setw(28) << ps << "  " << std::setw(28) << qs << "\n";
  }
  RationalInterval e = exp_neg2_enclosure();
  Rational half(1, 2);
  out << "limit (1+e^-2)/2 in [" << fixed(half + half * e.lo) << ", " << fixed(half + half * e.hi) << "]\n";
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  if (o.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (o.count_only) {
    std::uint64_t c = count_trees(o.n, resolve_threads(o.threads));
    if (o.format == "json")
      out << json{{"n", o.n}, {"count", c}}.dump() << "\n";
    else
      out << c << "\n";
    return 0;
  }
  FreeTreeGenerator gen(o.n);
  bool first = true;
  while (gen.next()) {
    Tree t = gen.tree();
    if (o.format == "json") {
      out << tree_to_json(t).dump() << "\n";
    } else {
      if (!first) out << "\n";
      out << format_tree(t);
    }
    first = false;
  }
  return 0;
}

std::string output_path_for(const std::string& base, int n, bool many) {
  if (!many) return base;
  std::filesystem::path p(base);
  std::filesystem::path name = p.stem();
  name += ".n" + std::to_string(n);
  name += p.extension();
  return (p.parent_path() / name).string();
}

void print_summary(const SweepReport& r, std::ostream& out) {
  out << "sweep " << r.sweep << " n=" << r.order;
  if (r.k) out << " k=" << *r.k;
  out << ": " << r.class_count << " classes, " << std::fixed << std::setprecision(3) << r.wall_time_s << " s\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& c : r.checks) {
    out << "  [" << (c.kind == CheckKind::Observation ? "note" : to_string(c.status)) << "] " << c.name << " ("
        << to_string(c.kind) << ")";
    if (c.violations) out << ": " << c.violations << (c.kind == CheckKind::Observation ? " hits" : " violations");
    out << "\n";
    for (std::size_t i = 0; i < c.witnesses.size() && i < 3; ++i)
      out << "      class " << c.witnesses[i].class_index << " key " << c.witnesses[i].key.bytes << "\n";
  }
  for (const auto& e : r.extremes)
    out << "  " << e.model << ": min " << e.min << " (" << fixed(e.min) << "), max " << e.max << " ("
        << fixed(e.max) << ")\n";
  out << "  exit " << r.exit_code() << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json", "csv"});
  if (!is_sweep_name(o.sweep)) throw std::invalid_argument("unknown sweep '" + o.sweep + "'");
  if (o.format == "csv" && o.output.empty()) throw std::invalid_argument("--format csv needs --output");
  int lo = o.from > 0 ? o.from : o.n;
  if (o.n < 1 || lo > o.n) throw std::invalid_argument("--n must be positive and not below --from");
  std::optional<int> k;
  if (o.sweep == "alternating") {
    if (o.k < 1) throw std::invalid_argument("verify alternating needs --k >= 1");
    k = o.k;
  }
  SweepOptions opts;
  opts.threads = resolve_threads(o.threads);
  opts.keep_values = o.keep_values || o.format == "csv";
  opts.memo = std::make_shared<MemoTable>();
  int code = 0;
  bool many = lo != o.n;
  for (int n = lo; n <= o.n; ++n) {
    SweepReport r = run_named_sweep(o.sweep, n, k, opts);
    if (!o.output.empty()) {
      export_report(r, o.format == "text" ? "json" : o.format, output_path_for(o.output, n, many));
      print_summary(r, out);
    } else if (o.format == "json") {
      export_report(r, "json", out);
    } else {
      print_summary(r, out);
    }
    code = std::max(code, r.exit_code());
  }
  return code;
}

int cmd_simulate(const Options& o, std::istream& in, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  Model model = model_or_throw(o.model);
  Tree t = read_tree(o.tree, in);
  GameSolver solver;
  McResult mc = monte_carlo(t, model, o.trials, o.seed, solver);
  Prob exact = solver.value(t, model).value;
  double z = mc.std_error > 0 ? (mc.estimate - exact.approx()) / mc.std_error : 0.0;
  if (o.format == "json") {
    out << json{{"model", to_string(model)},
                {"trials", mc.trials},
                {"seed", o.seed},
                {"wins", mc.wins},
                {"estimate", mc.estimate},
                {"std_error", mc.std_error},
                {"exact", rational_to_json(exact)},
                {"z", z}}
               .dump(2)
        << "\n";
    return 0;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "estimate %.6f +- %.6f (%llu/%llu wins), exact %s = %.6f, z = %.2f\n", mc.estimate,
                mc.std_error, static_cast<unsigned long long>(mc.wins), static_cast<unsigned long long>(mc.trials),
                exact.str().c_str(), exact.approx(), z);
  out << to_string(model) << " " << buf;
  return 0;
}

int cmd_stopping(const Options& o, std::istream& in, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  Tree t = read_tree(o.tree, in);
  GameSolver solver;
  StoppingDist d = solver.stopping_time_distribution(t);
  if (o.format == "json") {
    json probs = json::array();
    for (const auto& p : d.probs) probs.push_back(rational_to_json(p));
    out << json{{"probs", probs},
                {"odd_mass", rational_to_json(d.odd_mass())},
                {"expectation", rational_to_json(d.expectation())}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "t  P(tau = t)\n";
  for (std::size_t i = 0; i < d.probs.size(); ++i)
    if (!d.probs[i].is_zero()) out << i + 1 << "  " << d.probs[i] << " (" << fixed(d.probs[i]) << ")\n";
  out << "odd mass: " << d.odd_mass() << " (" << fixed(d.odd_mass()) << ")\n";
  out << "expectation: " << d.expectation() << " (" << fixed(d.expectation()) << ")\n";
  return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  service::ServiceConfig sc;
  sc.analysis_cap = o.analysis_cap;
  if (!o.persist_dir.empty()) sc.persist_dir = o.persist_dir;
  service::ServerConfig hc;
  hc.host = o.host;
  hc.port = o.port;
  hc.cors_origins = split_csv(o.cors);
  if (!o.static_dir.empty()) hc.static_dir = o.static_dir;

  // Route SIGINT/SIGTERM to a waiter thread that shuts the server down.
  sigset_t sigs;
  sigemptyset(&sigs);
  sigaddset(&sigs, SIGINT);
  sigaddset(&sigs, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &sigs, nullptr);

  service::GameService svc(sc);
  service::HttpServer server(svc, hc);
  int port = server.bind();
  if (port < 0) {
    err << "error: cannot bind " << o.host << ":" << o.port << "\n";
    return 1;
  }
  out << "listening on http://" << o.host << ":" << port << std::endl;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&sigs, &sig);
    server.stop();
  });
  bool ok = server.listen_after_bind();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.threads = env_int("ARBOR_THREADS", 0);
    o.port = env_int("ARBOR_PORT", 8080);
    o.analysis_cap = env_int("ARBOR_ANALYSIS_CAP", 64);
    o.persist_dir = env("ARBOR_PERSIST_DIR").value_or("");
    o.cors = env("ARBOR_CORS_ORIGINS").value_or("");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Exact values and verification sweeps for the vertex-guessing game on trees", "arbor"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* sc, const char* help) { sc->add_option("--format", o.format, help); };
  auto add_threads = [&](CLI::App* sc) {
    sc->add_option("--threads", o.threads, "Worker threads (0 = all cores; default $ARBOR_THREADS)");
  };

  auto* value = app.add_subcommand("value", "Exact value of a tree under one play model");
  value->add_option("--tree", o.tree, "P:n, S:n, SP:a,b,c, edge-list text, or - for stdin")->required();
  value->add_option("--model", o.model, "oo | semirandom-first | semirandom-second | random-random");
  add_format(value, "text | json");

  auto* table = app.add_subcommand("table", "Path values p_n and q_n");
  table->add_option("--max", o.max_n, "Largest n");
  add_format(table, "text | csv | json");

  auto* enumerate = app.add_subcommand("enumerate", "Stream or count the free trees of order n");
  enumerate->add_option("--n", o.n, "Order")->required();
  enumerate->add_flag("--count", o.count_only, "Print only the class count");
  add_threads(enumerate);
  add_format(enumerate, "text | json");

  auto* verify = app.add_subcommand("verify", "Run a verification sweep over all tree classes");
  verify->add_option("sweep", o.sweep, "semirandom | allrandom | limbs | alternating | fixed-target | oo")
      ->required();
  verify->add_option("--n", o.n, "Order (last order with --from)")->required();
  verify->add_option("--from", o.from, "Sweep every order from this value up to --n");
  verify->add_option("--k", o.k, "k for the alternating inequality");
  verify->add_option("--output", o.output, "Report path (one file per order with --from)");
  verify->add_flag("--values", o.keep_values, "Include every class value in JSON reports");
  add_threads(verify);
  add_format(verify, "text | json | csv");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate against the exact value");
  simulate->add_option("--tree", o.tree, "Tree spec")->required();
  simulate->add_option("--model", o.model, "Play model");
  simulate->add_option("--trials", o.trials, "Number of games");
  simulate->add_option("--seed", o.seed, "RNG seed");
  add_format(simulate, "text | json");

  auto* stopping = app.add_subcommand("stopping", "Distribution of the guess count under uniform play");
  stopping->add_option("--tree", o.tree, "Tree spec")->required();
  add_format(stopping, "text | json");

  auto* serve = app.add_subcommand("serve", "Run the HTTP game and analysis API");
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--port", o.port, "Port, 0 for any free port (default $ARBOR_PORT or 8080)");
  serve->add_option("--analysis-cap", o.analysis_cap, "Largest order accepted by /api/analyze");
  serve->add_option("--persist-dir", o.persist_dir, "Directory for session snapshots");
  serve->add_option("--cors-origins", o.cors, "Comma-separated allowed origins, * for any");
  serve->add_option("--static-dir", o.static_dir, "Serve a built UI from this directory");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sc = app.get_subcommands().empty() ? &app : app.get_subcommands().front())
      err << "run '" << sc->get_name() << " --help' for usage\n";
    return 1;
  }

  try {
    if (*value) return cmd_value(o, in, out);
    if (*table) return cmd_table(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*simulate) return cmd_simulate(o, in, out);
    if (*stopping) return cmd_stopping(o, in, out);
    if (*serve) return cmd_serve(o, out, err);
  } catch (const TreeError& e) {
    err << "error: invalid tree (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace arbor::cli
