#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathweyl/decomposition.hpp"
#include "pathweyl/errors.hpp"
#include "pathweyl/graph_io.hpp"
#include "pathweyl/shuffle.hpp"
#include "pathweyl/skewsym.hpp"
#include "pathweyl/weyl.hpp"

namespace pathweyl::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string graph_path;
  std::string sources;
  bool has_sources = false;
  std::vector<std::string> monomials;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t q_args[2] = {0, 0};
  bool records = false;
  bool long_running = false;
  bool symmetry = false;
  bool count_only = false;
  bool all_decompositions = false;
  bool explain = false;
  std::string route;
  unsigned threads = 1;
};

json multiset_json(const VertexMultiset& m) {
  json out = json::array();
  for (Vertex v : m.elements()) out.push_back(v);
  return out;
}

json element_json(const WeylElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    terms.push_back({{"alpha", m.alpha()}, {"beta", m.beta()}, {"c", c.get_str()}});
  }
  return terms;
}

// Left-aligned columns separated by two spaces; the last column is not padded.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string plural(std::uint64_t count, std::string_view noun) {
  std::string out = std::to_string(count) + ' ' + std::string(noun);
  if (count != 1) out += noun.ends_with('s') ? "es" : "s";
  return out;
}

std::vector<WrittenMonomial> parse_written_args(const RunConfig& config) {
  std::optional<std::size_t> n;
  if (config.n > 0) n = config.n;
  std::vector<WrittenMonomial> written;
  std::size_t largest = 1;
  for (const auto& text : config.monomials) {
    written.push_back(parse_written_monomial(text, n));
    largest = std::max(largest, written.back().dimension);
  }
  for (auto& w : written) w.dimension = n.value_or(largest);
  return written;
}

std::vector<WeylMonomial> parse_args(const RunConfig& config) {
  std::vector<WeylMonomial> out;
  for (const auto& w : parse_written_args(config)) out.push_back(w.normal_form());
  return out;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  LabeledDigraph g = load_graph(config.graph_path);
  std::vector<Decomposition> list;
  if (config.all_decompositions) {
    if (!config.has_sources) throw PreconditionError("--all needs --sources");
    list = enumerate_all_decompositions(g, parse_multiset(config.sources));
  } else {
    list = enumerate_principal(g);
    if (config.has_sources) {
      VertexMultiset wanted = parse_multiset(config.sources);
      std::erase_if(list, [&](const Decomposition& d) { return sources(g, d) != wanted; });
    }
  }
  const char* kind = config.all_decompositions ? "decomposition" : "principal decomposition";
  if (config.count_only) {
    if (config.records) {
      out << json{{"count", list.size()}}.dump() << '\n';
    } else {
      out << plural(list.size(), kind) << '\n';
    }
    return kOk;
  }
  if (config.records) {
    for (const Decomposition& d : list) {
      out << json{{"paths", d.paths}, {"I", multiset_json(sources(g, d))}, {"J", multiset_json(sinks(g, d))}}.dump()
          << '\n';
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"decomposition", "I", "J"}};
  for (const Decomposition& d : list) {
    rows.push_back({to_string(d), to_string(sources(g, d)), to_string(sinks(g, d))});
  }
  print_table(out, rows);
  out << plural(list.size(), kind) << '\n';
  return kOk;
}

int cmd_stirling(const RunConfig& config, std::ostream& out) {
  LabeledDigraph g = load_graph(config.graph_path);
  const std::string route = config.route.empty() ? "table" : config.route;
  if (config.has_sources) {
    VertexMultiset sources = parse_multiset(config.sources);
    Integer value;
    if (route == "enumeration") {
      value = stirling_count(g, sources);
    } else if (route == "recurrence") {
      value = stirling_recurrence(g, sources);
    } else {
      auto table = stirling_table(g);
      auto it = table.find(sources);
      value = it == table.end() ? Integer(0) : it->second;
    }
    out << value.get_str() << '\n';
    return kOk;
  }
  StirlingTable table = route == "enumeration" ? stirling_table_by_enumeration(g) : stirling_table(g);
  if (route == "recurrence") {
    for (auto& [sources, count] : table) count = stirling_recurrence(g, sources);
  }
  if (config.records) {
    for (const auto& [sources, count] : table) {
      out << json{{"I", multiset_json(sources)}, {"J", multiset_json(*forced_sinks(g, sources))}, {"S", count.get_str()}}
                 .dump()
          << '\n';
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"I", "J", "S_G(I)"}};
  for (const auto& [sources, count] : table) {
    rows.push_back({to_string(sources), to_string(*forced_sinks(g, sources)), count.get_str()});
  }
  print_table(out, rows);
  return kOk;
}

int cmd_normal_order(const RunConfig& config, std::ostream& out) {
  auto written = parse_written_args(config);
  std::vector<WeylMonomial> factors;
  for (const auto& w : written) factors.push_back(w.normal_form());

  WeylElement product = normal_order_product(factors);
  WeylElement rewritten = normal_order_by_rewriting(factors);
  if (product != rewritten) {
    throw OracleMismatch("closed-form product " + format_element(product) + " differs from rewriting " +
                         format_element(rewritten));
  }
  bool graph_route = std::all_of(factors.begin(), factors.end(), [](const WeylMonomial& w) { return w.is_length_zero(); });
  std::vector<std::string> routes{"closed-form", "rewriting"};
  if (graph_route) {
    WeylElement expanded = graph_expand(written);
    if (expanded != product) {
      throw OracleMismatch("graph expansion " + format_element(expanded) + " differs from product " +
                           format_element(product));
    }
    routes.push_back("graph");
  }
  if (config.records) {
    out << json{{"result", format_element(product)}, {"terms", element_json(product)}, {"routes", routes}}.dump()
        << '\n';
    return kOk;
  }
  out << format_element(product) << '\n';
  out << "routes agree: ";
  for (std::size_t r = 0; r < routes.size(); ++r) out << (r ? ", " : "") << routes[r];
  if (!graph_route) out << " (graph expansion skipped: a factor has nonzero length)";
  out << '\n';
  return kOk;
}

int cmd_skew(const RunConfig& config, std::ostream& out) {
  auto args = parse_args(config);
  WeylElement value = s_m_evaluate(args);
  bool checked = args.size() <= kDefaultSymmetrizationBudget;
  if (checked) {
    WeylElement direct = alternating_sum_direct(args);
    if (direct != value) {
      throw OracleMismatch("E_G route " + format_element(value) + " differs from the alternating sum " +
                           format_element(direct));
    }
  }
  if (config.records) {
    out << json{{"m", args.size()}, {"result", format_element(value)}, {"terms", element_json(value)},
                {"order", value.order()}}
               .dump()
        << '\n';
    return kOk;
  }
  out << format_element(value) << '\n';
  if (checked) out << "alternating sum over " << args.size() << "! orderings agrees\n";
  return kOk;
}

int cmd_eg(const RunConfig& config, std::ostream& out) {
  LabeledDigraph g = load_graph(config.graph_path);
  const std::string route = config.route.empty() ? "decomposition" : config.route;
  if (config.has_sources) {
    VertexMultiset sources = parse_multiset(config.sources);
    Integer value;
    if (route == "symmetrization") {
      value = eg_symmetrization(g, sources);
    } else {
      value = eg_decomposition(g, sources);
      if (route == "both") {
        Integer other = eg_symmetrization(g, sources);
        if (other != value) {
          throw OracleMismatch("E_G by decompositions " + value.get_str() + " vs relabelings " + other.get_str());
        }
      }
    }
    if (config.explain) {
      std::vector<std::vector<std::string>> rows{{"decomposition", "E(P)"}};
      for (const auto& term : eg_terms(g, sources)) {
        rows.push_back({to_string(term.decomposition), term.shuffle_sum.get_str()});
      }
      print_table(out, rows);
    }
    if (config.records) {
      out << json{{"I", multiset_json(sources)}, {"E", value.get_str()}}.dump() << '\n';
    } else {
      out << value.get_str() << '\n';
    }
    return kOk;
  }
  EGTable table = eg_table(g);
  if (route == "symmetrization" || route == "both") {
    EGTable relabeled = eg_symmetrization_table(g);
    if (route == "symmetrization") {
      for (auto& [sources, value] : table) {
        auto it = relabeled.find(sources);
        value = it == relabeled.end() ? Integer(0) : it->second;
      }
    } else {
      for (const auto& [sources, value] : table) {
        auto it = relabeled.find(sources);
        if ((it == relabeled.end() ? Integer(0) : it->second) != value) {
          throw OracleMismatch("E_G(" + to_string(sources) + ") differs between routes");
        }
      }
    }
  }
  if (config.records) {
    for (const auto& [sources, value] : table) {
      out << json{{"I", multiset_json(sources)}, {"J", multiset_json(*forced_sinks(g, sources))}, {"E", value.get_str()}}
                 .dump()
          << '\n';
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"I", "J", "E_G(I)"}};
  for (const auto& [sources, value] : table) {
    rows.push_back({to_string(sources), to_string(*forced_sinks(g, sources)), value.get_str()});
  }
  print_table(out, rows);
  return kOk;
}

int cmd_identity_check(const RunConfig& config, std::ostream& out) {
  IdentityCheckOptions options;
  options.long_running = config.long_running;
  options.symmetry_reduction = config.symmetry;
  options.threads = config.threads;
  IdentityVerdict verdict = identity_check(config.n, config.m, options);

  if (config.records) {
    json record{{"n", config.n},
                {"m", config.m},
                {"holds", verdict.holds},
                {"raw_cases", verdict.raw_cases},
                {"cases_checked", verdict.cases_checked},
                {"symmetry_classes", verdict.symmetry_classes}};
    if (verdict.witness) {
      json edges = json::array();
      for (const Edge& e : verdict.witness->edges) edges.push_back({e.tail, e.head});
      record["witness"] = {{"edges", edges},
                           {"I", multiset_json(verdict.witness->sources)},
                           {"J", multiset_json(verdict.witness->sinks)},
                           {"coefficient", verdict.witness->coefficient.get_str()}};
    }
    out << record.dump() << '\n';
    return kOk;
  }
  if (verdict.holds) {
    out << "holds (" << plural(verdict.cases_checked, "case") << ")\n";
  } else {
    out << "fails (witness at case " << verdict.cases_checked << ")\n";
  }
  out << "s_" << config.m << " on A_" << config.n << "^(1,1): " << plural(verdict.raw_cases, "argument set") << ", "
      << plural(verdict.symmetry_classes, "symmetry class") << '\n';
  if (verdict.witness) {
    const IdentityWitness& w = *verdict.witness;
    out << "witness arguments:";
    for (const Edge& e : w.edges) out << " x" << e.tail << " d" << e.head << ';';
    out << '\n';
    WeylMonomial term = monomial_of(config.n, w.sources, w.sinks);
    out << "coefficient of " << format_monomial(term) << ": " << w.coefficient.get_str() << "  (I=" << to_string(w.sources)
        << ", J=" << to_string(w.sinks) << ")\n";
  }
  return kOk;
}

int cmd_fig3(const RunConfig& config, std::ostream& out) {
  LabeledDigraph g = fig3_graph(config.n);
  out << (config.records ? format_graph_json(g) : format_graph_text(g));
  return kOk;
}

int cmd_q(const RunConfig& config, std::ostream& out) {
  out << q(config.q_args[0], config.q_args[1]).get_str() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Path decompositions, G-Stirling functions and skew-symmetric identities in the Weyl algebra"};
  app.name("pathweyl");
  app.require_subcommand(1, 1);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "graph file (text or JSON)")->required();
  };
  auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--sources", config.sources, "source multiset, e.g. 1,1 or 1^2,4")
        ->each([&](const std::string&) { config.has_sources = true; });
  };
  auto add_records = [&](CLI::App* sub) {
    sub->add_flag("--records", config.records, "emit one JSON record per line");
  };

  auto* decompose = app.add_subcommand("decompose", "list or count principal decompositions");
  add_graph(decompose);
  add_sources(decompose);
  add_records(decompose);
  decompose->add_flag("--count", config.count_only, "print only the number of decompositions");
  decompose->add_flag("--all", config.all_decompositions, "drop the increasing-label condition (needs --sources)");

  auto* stirling = app.add_subcommand("stirling", "G-Stirling table S_G(I)");
  add_graph(stirling);
  add_sources(stirling);
  add_records(stirling);
  stirling->add_option("--route", config.route, "table | enumeration | recurrence")
      ->check(CLI::IsMember({"table", "enumeration", "recurrence"}));

  auto* normal = app.add_subcommand("normal-order", "normally order a product of monomials");
  normal->add_option("factors", config.monomials, "factors, e.g. \"x1 x2 d2 d1\" \"x4 d2\"")->required();
  normal->add_option("--n", config.n, "dimension (default: largest index)");
  add_records(normal);

  auto* skew = app.add_subcommand("skew", "evaluate s_m on basis monomials x_i d_j");
  skew->add_option("args", config.monomials, "arguments, e.g. \"x1 d1\" \"x1 d2\"")->required();
  skew->add_option("--n", config.n, "dimension (default: largest index)");
  add_records(skew);

  auto* eg = app.add_subcommand("eg", "signed symmetrization E_G(I)");
  add_graph(eg);
  add_sources(eg);
  add_records(eg);
  eg->add_option("--route", config.route, "decomposition | symmetrization | both")
      ->check(CLI::IsMember({"decomposition", "symmetrization", "both"}));
  eg->add_flag("--explain", config.explain, "list every decomposition with its signed shuffle sum");

  auto* identity = app.add_subcommand("identity-check", "sweep s_m over all m-subsets of the A_n^(1,1) basis");
  identity->add_option("--n", config.n, "number of variables")->required()->check(CLI::Range(1, 8));
  identity->add_option("--m", config.m, "arity of s_m")->required()->check(CLI::PositiveNumber);
  identity->add_flag("--long", config.long_running, "allow sweeps beyond the default budget");
  identity->add_flag("--symmetry", config.symmetry, "evaluate one case per vertex-relabeling class");
  identity->add_option("--threads,-j", config.threads, "worker threads")->check(CLI::Range(1, 256));
  add_records(identity);

  auto* fig3 = app.add_subcommand("fig3", "emit the E_G({1,1}) != 0 counterexample graph");
  fig3->add_option("--n", config.n, "number of vertices (>= 4)")->required();
  add_records(fig3);

  auto* qcmd = app.add_subcommand("q", "signed shuffle count q(m, n) of two increasing chains");
  qcmd->add_option("m", config.q_args[0])->required();
  qcmd->add_option("n", config.q_args[1])->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*decompose) return cmd_decompose(config, out);
    if (*stirling) return cmd_stirling(config, out);
    if (*normal) return cmd_normal_order(config, out);
    if (*skew) return cmd_skew(config, out);
    if (*eg) return cmd_eg(config, out);
    if (*identity) return cmd_identity_check(config, out);
    if (*fig3) return cmd_fig3(config, out);
    if (*qcmd) return cmd_q(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const OracleMismatch& e) {
    err << "internal oracle mismatch (defect): " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace pathweyl::cli
