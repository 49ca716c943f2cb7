#include "flextile/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "flextile/builders.hpp"
#include "flextile/complex.hpp"
#include "flextile/errors.hpp"
#include "flextile/feasibility.hpp"
#include "flextile/graph_io.hpp"
#include "flextile/pot.hpp"
#include "flextile/spectrum.hpp"

namespace flextile::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string pot_inline;
  std::string pot_file;
  std::string graph_file;
  std::int64_t max_order = 40;
  std::int64_t order = 0;
  std::string distribution;
  std::string algorithm = "auto";
  std::string format = "dot";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Pot load_pot(const Options& opt, const std::string& fallback = {}) {
  if (!opt.pot_inline.empty()) return parse_pot(opt.pot_inline);
  if (!opt.pot_file.empty()) return parse_pot(read_file(opt.pot_file));
  if (!fallback.empty()) return parse_pot(fallback);
  throw PreconditionError("no pot given: use --pot TEXT or a pot file argument");
}

std::optional<SingleBondPot> single_bond_or_none(const Pot& pot, std::string* reason = nullptr) {
  try {
    return as_single_bond(pot);
  } catch (const PotError& e) {
    if (reason) *reason = e.what();
    return std::nullopt;
  }
}

Json matrix_json(const AugmentedMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c <= m.vars(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json rational_vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string rational_vector_text(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

TileDistribution in_pot_order(const SingleBondPot& sb, const TileDistribution& by_role) {
  return {sb.to_pot_order(by_role.counts)};
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const Pot pot = load_pot(opt);
  const auto matrix = construction_matrix(pot);
  const auto reduced = rref(matrix);
  std::string reason;
  const auto sb = single_bond_or_none(pot, &reason);

  if (opt.json) {
    Json doc;
    doc["pot"] = render_pot(pot);
    doc["construction_matrix"] = matrix_json(matrix);
    doc["rref"] = matrix_json(reduced);
    if (const auto space = solve(matrix)) {
      Json basis = Json::array();
      for (const auto& b : space->basis) basis.push_back(rational_vector_json(b));
      doc["general_solution"] = {{"particular", rational_vector_json(space->particular)}, {"nullspace", basis}};
    } else {
      doc["general_solution"] = nullptr;
    }
    if (sb) {
      const auto report = analyze(*sb, 0);
      Json s;
      s["e1"] = sb->e1();
      s["e2"] = sb->e2();
      s["hat_swapped"] = sb->hat_swapped();
      s["spectrum"] = describe_single_bond_spectrum(*sb);
      s["d"] = report.d;
      s["min_order"] = report.min_order;
      s["eta"] = report.d == 1 ? Json(to_string(report.eta)) : Json(nullptr);
      s["zeta"] = report.zeta ? Json(*report.zeta) : Json(nullptr);
      s["division_form"] = {{"q", report.division.q}, {"r", report.division.r}};
      Json canon = Json::array();
      for (const auto& d : report.canonical) canon.push_back(in_pot_order(*sb, d).counts);
      s["canonical_distributions"] = canon;
      doc["single_bond"] = s;
    } else {
      doc["single_bond"] = nullptr;
      doc["single_bond_reason"] = reason;
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "pot: " << render_pot(pot) << "\n";
  out << "construction matrix:\n" << render_matrix(matrix);
  out << "rref:\n" << render_matrix(reduced);
  if (!sb) {
    if (const auto space = solve(matrix)) {
      out << "general solution: particular " << rational_vector_text(space->particular) << "\n";
      for (const auto& b : space->basis) out << "  nullspace direction " << rational_vector_text(b) << "\n";
    } else {
      out << "general solution: none (inconsistent system)\n";
    }
    out << "single-bond analysis: not applicable (" << reason << ")\n";
    return kOk;
  }
  const auto report = analyze(*sb, 0);
  out << "single-bond pot: e1 = " << sb->e1() << ", e2 = " << sb->e2();
  if (sb->hat_swapped()) out << " (hat orientation swapped)";
  out << "\n";
  if (sb->tile_of_role(0) != 0 || sb->tile_of_role(1) != 1) {
    out << "roles: t1 = tile " << sb->tile_of_role(0) + 1 << ", t2 = tile " << sb->tile_of_role(1) + 1
        << ", t3 = tile " << sb->tile_of_role(2) + 1 << "\n";
  }
  out << "spectrum: " << describe_single_bond_spectrum(*sb) << "\n";
  out << "d = gcd(e1+1, e2-1) = " << report.d << "\n";
  out << "m_P = " << report.min_order << "\n";
  if (report.d == 1) {
    out << "eta = " << to_string(report.eta) << "\n";
    out << "zeta = " << *report.zeta << "\n";
    const auto ceil_eta = ceil(report.eta).get_si();
    if (*report.zeta < report.eta) {
      out << "note: zeta < eta; only orders in [m_P, ceil(eta)] = [" << report.min_order << ", " << ceil_eta
          << "] needed checking\n";
    }
  } else {
    out << "eta = not applicable (d != 1)\n";
    out << "zeta = not applicable (d != 1: only multiples of " << report.d << " are realizable)\n";
  }
  out << "division form: e1 = " << report.division.q << "*e2 + " << report.division.r << " (q = " << report.division.q
      << ", r = " << report.division.r << ")\n";
  const char* names[] = {"q+r+1", "1+e1", "e1+e2"};
  out << "canonical distributions:\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  " << names[i] << " = " << report.canonical[i].order() << ": "
        << to_string(in_pot_order(*sb, report.canonical[i])) << "\n";
  }
  return kOk;
}

int cmd_orders(const Options& opt, std::ostream& out) {
  if (opt.max_order < 1) throw PreconditionError("--max must be >= 1");
  const Pot pot = load_pot(opt);
  const auto sb = single_bond_or_none(pot);
  std::vector<OrderEntry> table;
  if (sb) {
    for (auto& entry : order_table(*sb, opt.max_order)) {
      if (entry.witness) entry.witness = in_pot_order(*sb, *entry.witness);
      table.push_back(std::move(entry));
    }
  } else {
    for (std::int64_t n = 1; n <= opt.max_order; ++n) {
      auto all = distributions_for_order(pot, n);
      table.push_back({n, all.empty() ? std::nullopt : std::optional<TileDistribution>(all.front())});
    }
  }
  if (opt.json) {
    Json doc;
    doc["pot"] = render_pot(pot);
    doc["orders"] = Json::array();
    for (const auto& e : table) {
      doc["orders"].push_back({{"n", e.n},
                               {"realizable", e.witness.has_value()},
                               {"witness", e.witness ? Json(e.witness->counts) : Json(nullptr)}});
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : table) {
    out << e.n << ": " << (e.witness ? to_string(*e.witness) : std::string("infeasible")) << "\n";
  }
  return kOk;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  if (opt.order < 1) throw PreconditionError("--order must be >= 1");
  const Pot pot = load_pot(opt);
  const auto all = distributions_for_order(pot, opt.order);
  if (opt.json) {
    Json doc;
    doc["pot"] = render_pot(pot);
    doc["order"] = opt.order;
    doc["distributions"] = Json::array();
    for (const auto& d : all) doc["distributions"].push_back(d.counts);
    out << doc.dump(2) << "\n";
  } else {
    out << "distributions of order " << opt.order << ": " << all.size() << "\n";
    for (const auto& d : all) out << "  " << to_string(d) << "\n";
  }
  return all.empty() ? kNegative : kOk;
}

TileDistribution parse_distribution(const std::string& text) {
  TileDistribution dist;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad --distribution component '" + item + "'");
    }
    if (used != item.size() || value < 0) throw PreconditionError("bad --distribution component '" + item + "'");
    dist.counts.push_back(value);
  }
  return dist;
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
  const Pot pot = load_pot(opt);
  const SingleBondPot sb = as_single_bond(pot);
  const Algorithm algorithm = parse_algorithm(opt.algorithm);
  if (opt.format != "dot" && opt.format != "json") throw PreconditionError("--format must be dot or json");
  if (opt.distribution.empty() == (opt.order == 0)) {
    throw PreconditionError("give exactly one of --order or --distribution");
  }

  std::optional<TileDistribution> by_role;
  if (!opt.distribution.empty()) {
    const TileDistribution given = parse_distribution(opt.distribution);
    if (given.counts.size() != 3) throw PreconditionError("--distribution needs 3 components");
    by_role = TileDistribution{sb.to_role_order(given.counts)};
    if (!is_balanced(sb, *by_role)) {
      throw PreconditionError("distribution " + to_string(given) + " does not balance the pot's cohesive ends");
    }
  } else if (opt.order < 1) {
    throw PreconditionError("--order must be >= 1");
  }

  // From here on a PreconditionError is a builder refusing the target.
  LabeledMultigraph graph;
  try {
    if (by_role) {
      graph = build(sb, *by_role, algorithm);
    } else if (algorithm == Algorithm::auto_select) {
      graph = build_auto(sb, opt.order).graph;
    } else {
      const auto witnesses = realizing_distributions(sb, opt.order);
      if (witnesses.empty()) throw InfeasibleError("order " + std::to_string(opt.order) + " is not realizable");
      std::optional<LabeledMultigraph> built;
      std::string last_error;
      for (const auto& dist : witnesses) {
        try {
          built = build(sb, dist, algorithm);
          break;
        } catch (const PreconditionError& e) {
          last_error = e.what();
        }
      }
      if (!built) throw PreconditionError("no distribution of order " + std::to_string(opt.order) + " suits the " +
                                          opt.algorithm + " builder: " + last_error);
      graph = *built;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }

  if (!validate_realization(graph, pot).ok()) throw std::logic_error("builder emitted an invalid realization");
  if (opt.format == "json" || opt.json) out << graph_to_json(graph, pot);
  else out << graph_to_dot(graph);
  return kOk;
}

std::string describe_ends(const EndCounts& ends) {
  std::string out = "{";
  bool first = true;
  for (const auto& [end, mult] : ends) {
    if (!first) out += ",";
    first = false;
    out += end.label;
    if (end.hatted) out += '*';
    if (mult != 1) out += "^" + std::to_string(mult);
  }
  return out + "}";
}

int cmd_check(const Options& opt, std::ostream& out) {
  const ParsedGraph parsed = graph_from_json(read_file(opt.graph_file));
  const Pot pot = load_pot(opt, parsed.pot_text);
  const auto check = validate_realization(parsed.graph, pot);
  const auto parts = components(parsed.graph);
  std::optional<TileDistribution> dist;
  std::optional<bool> forced;
  if (check.ok()) {
    dist = tile_distribution_of(parsed.graph, pot);
    if (const auto sb = single_bond_or_none(pot)) {
      forced = forced_disconnected(TileDistribution{sb->to_role_order(dist->counts)}, *sb);
    }
  }

  if (opt.json) {
    Json doc;
    doc["pot"] = render_pot(pot);
    doc["valid"] = check.ok();
    Json problems = Json::array();
    for (const auto& s : check.structural) problems.push_back(s);
    for (const auto& v : check.violations) {
      problems.push_back("vertex " + std::to_string(v.vertex) + ": expected " + describe_ends(v.expected) +
                         ", observed " + describe_ends(v.observed));
    }
    doc["problems"] = problems;
    doc["distribution"] = dist ? Json(dist->counts) : Json(nullptr);
    doc["components"] = parts.size();
    doc["forced_disconnected"] = forced ? Json(*forced) : Json(nullptr);
    out << doc.dump(2) << "\n";
    return check.ok() ? kOk : kNegative;
  }

  out << "valid realization: " << (check.ok() ? "yes" : "no") << "\n";
  for (const auto& s : check.structural) out << "  " << s << "\n";
  for (const auto& v : check.violations) {
    out << "  vertex " << v.vertex << ": expected " << describe_ends(v.expected) << ", observed "
        << describe_ends(v.observed) << "\n";
  }
  if (dist) out << "tile distribution: " << to_string(*dist) << "\n";
  out << "components: " << parts.size() << (parts.size() == 1 ? " (connected)" : "") << "\n";
  if (forced) out << "forced disconnected (1 + R2(e2-1) < R1): " << (*forced ? "yes" : "no") << "\n";
  return check.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Analyze pots of flexible DNA tiles and build complete complexes", "flextile"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--pot", opt.pot_inline, "Inline pot text, e.g. \"{a^6};{a*^4};{a*}\"");

  auto* analyze_cmd = app.add_subcommand("analyze", "Construction matrix, spectrum, d, m_P, eta, zeta");
  analyze_cmd->add_option("potfile", opt.pot_file, "File containing the pot");

  auto* orders_cmd = app.add_subcommand("orders", "Realizable orders with witness distributions");
  orders_cmd->add_option("potfile", opt.pot_file, "File containing the pot");
  orders_cmd->add_option("--max", opt.max_order, "Largest order to tabulate")->capture_default_str();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "All tile distributions of one order");
  spectrum_cmd->add_option("potfile", opt.pot_file, "File containing the pot");
  spectrum_cmd->add_option("--order,-n", opt.order, "Order n")->required();

  auto* build_cmd = app.add_subcommand("build", "Construct a connected complete complex");
  build_cmd->add_option("potfile", opt.pot_file, "File containing the pot");
  build_cmd->add_option("--order,-n", opt.order, "Target order");
  build_cmd->add_option("--distribution,-d", opt.distribution, "Tile counts R1,R2,R3 in pot order");
  build_cmd->add_option("--algorithm,-a", opt.algorithm, "path|cycle|star|divalg|bipartite|auto")
      ->capture_default_str();
  build_cmd->add_option("--format,-f", opt.format, "dot|json")->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Validate a graph JSON file against a pot");
  check_cmd->add_option("graphfile", opt.graph_file, "Graph JSON file")->required();
  check_cmd->add_option("potfile", opt.pot_file, "File containing the pot (default: the graph's pot)");

  for (auto* sub : {analyze_cmd, orders_cmd, spectrum_cmd, build_cmd, check_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(opt, out);
    if (orders_cmd->parsed()) return cmd_orders(opt, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(opt, out);
    if (build_cmd->parsed()) return cmd_build(opt, out, err);
    if (check_cmd->parsed()) return cmd_check(opt, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kNegative;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kNegative;
  }
  return kInputError;
}

}  // namespace flextile::cli
