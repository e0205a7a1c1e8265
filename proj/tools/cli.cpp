#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geocrystal/json_io.hpp"

namespace geocrystal::cli {

namespace {

struct Outcome {
  std::string stdout_text;
  std::string summary;
  int code = ok;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

// "-" reads stdin, "{...}" is inline JSON, an existing path is a JSON file.
std::optional<Json> json_payload(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    return std::nullopt;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void check_rank(int expected, int got) {
  if (expected != 0 && expected != got)
    throw UsageError("--n " + std::to_string(expected) + " does not match the point's n = " +
                     std::to_string(got));
}

TorusPoint read_torus(const std::string& arg, int n, const std::string& chart, std::istream& in) {
  if (auto j = json_payload(arg, in)) {
    auto p = torus_point_from_json(*j);
    check_rank(n, p.n);
    return p;
  }
  if (n == 0) throw UsageError("--n is required with an inline point");
  std::vector<Rational> coords;
  for (const auto& s : split_commas(arg)) coords.push_back(parse_rational(s));
  return chart == "y" ? y_point(n, std::move(coords)) : x_point(n, std::move(coords));
}

LatticePoint read_lattice(const std::string& arg, int n, std::istream& in) {
  if (auto j = json_payload(arg, in)) {
    auto p = lattice_point_from_json(*j);
    check_rank(n, p.n);
    return p;
  }
  if (n == 0) throw UsageError("--n is required with an inline point");
  std::vector<std::int64_t> coords;
  for (const auto& s : split_commas(arg)) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("not an integer: '" + s + "'");
    coords.push_back(v);
  }
  return lattice_point(n, std::move(coords));
}

CrystalElt read_elt(const std::string& arg, std::istream& in) {
  auto j = json_payload(arg, in);
  if (!j) throw UsageError("--elt expects a JSON file, inline JSON or '-'");
  return crystal_elt_from_json(*j);
}

// "f3" -> ('f', 3); "gamma0" -> ("gamma", 0)
std::pair<std::string, int> split_op(const std::string& op) {
  const auto pos = op.find_first_of("0123456789");
  if (pos == std::string::npos || pos == 0) throw UsageError("malformed operator '" + op + "'");
  const auto digits = op.substr(pos);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
    throw UsageError("malformed operator '" + op + "'");
  return {op.substr(0, pos), std::stoi(digits)};
}

Execution parse_exec(const std::string& s) {
  return s == "serial" ? Execution::serial : Execution::parallel;
}

std::string verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Perfect crystals B^{2,l}, the geometric crystal on W(varpi_2) and their "
               "ultra-discretization for A_n^(1)",
               "geocrystal"};
  app.require_subcommand(1);
  std::string exec_name = "parallel";
  app.add_option("--exec", exec_name, "Kernel execution: serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));

  int n = 0, l = 0;
  std::string op, elt, format = "json", out_format = "json", point, action, c_text = "1";
  std::string chart = "x", suite, target;
  int trials = 0, box = -1;
  std::uint64_t seed = 0;
  std::int64_t c_int = 1;

  Outcome result;
  auto exec = [&] { return parse_exec(exec_name); };

  // crystal ------------------------------------------------------------------
  auto* crystal = app.add_subcommand("crystal", "Perfect crystals B^{2,l}");
  crystal->require_subcommand(1);

  auto* c_enum = crystal->add_subcommand("enum", "List all elements of B^{2,l}");
  c_enum->add_option("--n", n, "Rank")->required();
  c_enum->add_option("--l", l, "Level")->required();
  c_enum->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json"}));
  c_enum->callback([&] {
    const auto elts = enumerate(n, l, kDefaultEnumCap, exec());
    Json arr = Json::array();
    for (const auto& b : elts) arr.push_back(to_json(b));
    result.stdout_text = dump(arr);
    result.summary = "B^{2," + std::to_string(l) + "} for n = " + std::to_string(n) + ": " +
                     std::to_string(elts.size()) + " elements";
  });

  auto* c_apply = crystal->add_subcommand("apply", "Apply e_k or f_k to an element");
  c_apply->add_option("--op", op, "f0..fN or e0..eN")->required();
  c_apply->add_option("--elt", elt, "Element as JSON file, inline JSON or '-'")->required();
  c_apply->callback([&] {
    const auto b = read_elt(elt, in);
    const auto [kind, k] = split_op(op);
    if (kind != "f" && kind != "e") throw UsageError("--op must be f<k> or e<k>");
    const auto r = kind == "f" ? f_op(k, b) : e_op(k, b);
    result.stdout_text = dump(r ? to_json(*r) : Json(nullptr));
    result.summary = op + (r ? " applied" : " gives 0");
  });

  auto* c_graph = crystal->add_subcommand("graph", "Export the crystal graph of B^{2,l}");
  c_graph->add_option("--n", n, "Rank")->required();
  c_graph->add_option("--l", l, "Level")->required();
  c_graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  c_graph->callback([&] {
    const auto g = build_graph(n, l, exec());
    result.stdout_text = format == "dot" ? graph_to_dot(g) : dump(to_json(g));
    result.summary = std::to_string(g.nodes.size()) + " nodes, " +
                     std::to_string(g.edges.size()) + " edges";
  });

  auto* c_perfect = crystal->add_subcommand("perfect", "Check perfectness of B^{2,l}");
  c_perfect->add_option("--n", n, "Rank")->required();
  c_perfect->add_option("--l", l, "Level")->required();
  c_perfect->callback([&] {
    const auto r = perfectness_check(n, l, exec());
    result.stdout_text = dump(to_json(r));
    result.code = r.passed() ? ok : counterexample;
    result.summary = verdict(r.passed()) + ": |B_min| = " + std::to_string(r.minimal_elements) +
                     ", dominant weights = " + std::to_string(r.dominant_weights);
  });

  auto* c_check = crystal->add_subcommand("check", "Check the crystal axioms on B^{2,l}");
  c_check->add_option("--n", n, "Rank")->required();
  c_check->add_option("--l", l, "Level")->required();
  c_check->callback([&] {
    const auto r = verify_crystal_axioms(n, l, exec());
    result.stdout_text = dump(to_json(r));
    result.code = r.passed() ? ok : counterexample;
    result.summary = verdict(r.passed()) + ": " + std::to_string(r.checks) + " checks, " +
                     std::to_string(r.failures.size()) + " failures";
  });

  // geom ---------------------------------------------------------------------
  auto* geom = app.add_subcommand("geom", "Geometric crystal on the x-chart of V_1");
  geom->require_subcommand(1);

  auto* g_eval = geom->add_subcommand("eval", "Evaluate an action or structure function");
  g_eval->add_option("--n", n, "Rank");
  g_eval->add_option("--point", point, "Coordinates \"p/q,...\", JSON file or '-'")->required();
  g_eval->add_option("--chart", chart, "x or y")->check(CLI::IsMember({"x", "y"}));
  g_eval->add_option("--action", action,
                     "eI, gammaI, epsI, sigma, sigma-inv, e0-conj, v1 or v2")
      ->required();
  g_eval->add_option("--c", c_text, "Scalar c as p/q");
  g_eval->callback([&] {
    const auto p = read_torus(point, n, chart, in);
    const auto c = parse_rational(c_text);
    Json j;
    if (action == "sigma") {
      j = to_json(sigma_bar(p));
    } else if (action == "sigma-inv") {
      j = to_json(sigma_bar_inv(p));
    } else if (action == "e0-conj") {
      j = to_json(geom_e0_via_conjugation(c, p));
    } else if (action == "v1") {
      j = to_json(build_V1(p));
    } else if (action == "v2") {
      j = to_json(build_V2(p));
    } else {
      const auto [kind, i] = split_op(action);
      if (kind == "e" && p.first == 1)
        j = to_json(bar_e(i, c, p));
      else if (kind == "e")
        j = to_json(geom_e(i, c, p));
      else if (kind == "gamma")
        j = {{"value", format_rational(geom_gamma(i, p))}};
      else if (kind == "eps")
        j = {{"value", format_rational(geom_eps(i, p))}};
      else
        throw UsageError("unknown --action '" + action + "'");
    }
    result.stdout_text = dump(j);
    result.summary = action + " evaluated";
  });

  auto* g_verify = geom->add_subcommand("verify", "Run a seeded verification suite");
  g_verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(geom_suite_names()));
  g_verify->add_option("--n", n, "Rank")->required();
  auto* g_trials = g_verify->add_option("--trials", trials, "Number of random points");
  auto* g_seed = g_verify->add_option("--seed", seed, "Master seed");
  g_verify->callback([&] {
    if (g_trials->count() && !g_seed->count()) throw UsageError("--trials requires --seed");
    if (!g_trials->count()) trials = 100;
    const auto r = run_geom_suite(suite, n, trials, seed, exec());
    result.stdout_text = dump(to_json(r));
    result.code = r.passed() ? ok : counterexample;
    result.summary = verdict(r.passed()) + ": " + suite + " n = " + std::to_string(n) + ", " +
                     std::to_string(r.checks) + " checks, " +
                     std::to_string(r.failures.size()) + " failures";
  });

  // ud -----------------------------------------------------------------------
  auto* ud = app.add_subcommand("ud", "Ultra-discretized crystal on Z^{2n-2}");
  ud->require_subcommand(1);

  auto* u_apply = ud->add_subcommand("apply", "Apply an operator or function to a lattice point");
  u_apply->add_option("--op", op, "fI, eI, eI with --c, wtI, epsI or omega")->required();
  u_apply->add_option("--point", point, "Coordinates \"i,...\", JSON file or '-'")->required();
  u_apply->add_option("--n", n, "Rank");
  auto* u_c = u_apply->add_option("--c", c_int, "Integer c for the generic action eI");
  u_apply->callback([&] {
    const auto x = read_lattice(point, n, in);
    Json j;
    if (op == "omega") {
      j = to_json(omega(x));
    } else {
      const auto [kind, i] = split_op(op);
      if (kind == "f")
        j = to_json(ud_lower(i, x));
      else if (kind == "e")
        j = to_json(u_c->count() ? ud_e(i, c_int, x) : ud_raise(i, x));
      else if (kind == "wt")
        j = {{"value", ud_wt(i, x)}};
      else if (kind == "eps")
        j = {{"value", ud_eps(i, x)}};
      else
        throw UsageError("unknown --op '" + op + "'");
    }
    result.stdout_text = dump(j);
    result.summary = op + " evaluated";
  });

  auto* u_check = ud->add_subcommand("check", "Run the isomorphism or mechanical-UD suite");
  u_check->add_option("--suite", suite, "iso or mechanical")
      ->required()
      ->check(CLI::IsMember({"iso", "mechanical"}));
  u_check->add_option("--n", n, "Rank")->required();
  auto* u_box = u_check->add_option("--box", box, "Exhaustive box radius");
  auto* u_trials = u_check->add_option("--trials", trials, "Number of sampled points");
  auto* u_seed = u_check->add_option("--seed", seed, "Master seed");
  u_box->excludes(u_trials);
  u_check->callback([&] {
    if (u_trials->count() && !u_seed->count()) throw UsageError("--trials requires --seed");
    Region region = default_region(n);
    if (u_box->count()) region = Region::box(box);
    if (u_trials->count()) region = Region::sampled(trials, seed);
    const auto r = suite == "iso" ? verify_iso(n, region, exec())
                                  : verify_ud_mechanical(n, region, exec());
    result.stdout_text = dump(to_json(r));
    result.code = r.passed() ? ok : counterexample;
    result.summary = verdict(r.passed()) + ": " + suite + " n = " + std::to_string(n) + " on " +
                     region.describe() + ", " + std::to_string(r.checks) + " checks, " +
                     std::to_string(r.failures.size()) + " failures";
  });

  auto* u_trop = ud->add_subcommand("tropicalize", "Print the tropicalized catalog formula");
  u_trop->add_option("--target", target, "gammaI, epsI or eI:k")->required();
  u_trop->add_option("--n", n, "Rank")->required();
  u_trop->callback([&] {
    const auto cat = catalog(n);
    const auto& entry = cat.at(target);
    result.stdout_text = to_string(tropicalize(entry.expr)) + "\n";
    result.summary = target + " = " + to_string(entry.expr);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return counterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  out << result.stdout_text << std::flush;
  if (!result.summary.empty()) err << result.summary << "\n";
  return result.code;
}

}  // namespace geocrystal::cli
