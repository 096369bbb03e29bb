#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "forest/closed_forms.hpp"
#include "forest/engine.hpp"
#include "forest/error.hpp"
#include "forest/generators.hpp"
#include "forest/graph6.hpp"
#include "forest/json_io.hpp"
#include "forest/monte_carlo.hpp"
#include "forest/process.hpp"
#include "forest/search.hpp"
#include "forest/structure.hpp"

namespace forest::cli {

namespace {

enum class Format { Json, Text, Csv };

struct GraphSource {
  std::string g6;
  std::string edges_file;
  std::string family;
  std::optional<int> n, s, t, k, m, d;
  std::string parts;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    auto* g6_opt = app->add_option("--g6", g6, "graph6 string");
    auto* edges_opt = app->add_option("--edges", edges_file, "edge-list file (\"n m\" then m lines \"u v\")");
    auto* family_opt =
        app->add_option("--family", family, "kn|kst|multipartite|path|cycle|star|gk|gnm|regular")
            ->check(CLI::IsMember({"kn", "kst", "multipartite", "path", "cycle", "star", "gk", "gnm", "regular"}));
    g6_opt->excludes(edges_opt)->excludes(family_opt);
    edges_opt->excludes(family_opt);
    app->add_option("--n", n, "vertex count (kn, path, cycle, gnm, regular)");
    app->add_option("--s", s, "first part size (kst) or leaves (star)");
    app->add_option("--t", t, "second part size (kst)");
    app->add_option("--parts", parts, "comma-separated part sizes (multipartite)");
    app->add_option("--k", k, "G_{2k+1} parameter (gk)");
    app->add_option("--m", m, "edge count (gnm)");
    app->add_option("--d", d, "degree (regular)");
    app->add_option("--seed", seed, "seed for random families");
  }

  bool closed_form_available() const { return family == "kn" || family == "kst" || family == "path" || family == "star"; }

  Graph build() const {
    if (!g6.empty()) {
      return parse_graph6(g6);
    }
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) {
        throw CLI::ValidationError("--edges", "cannot open " + edges_file);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_edge_list(buf.str());
    }
    if (family.empty()) {
      throw CLI::RequiredError("one of --g6, --edges, --family");
    }
    return generate(spec());
  }

  GeneratorSpec spec() const {
    auto need = [&](const std::optional<int>& v, const char* flag) {
      if (!v) {
        throw CLI::RequiredError(std::string(flag) + " (for --family " + family + ")");
      }
      return *v;
    };
    if (family == "kn") return family::Complete{need(n, "--n")};
    if (family == "kst") return family::CompleteBipartite{need(s, "--s"), need(t, "--t")};
    if (family == "path") return family::Path{need(n, "--n")};
    if (family == "cycle") return family::Cycle{need(n, "--n")};
    if (family == "star") return family::Star{need(s, "--s")};
    if (family == "gk") return family::BalancedBipartitePlusEdge{need(k, "--k")};
    if (family == "gnm") return family::Gnm{need(n, "--n"), need(m, "--m"), seed};
    if (family == "regular") return family::RandomRegular{need(n, "--n"), need(d, "--d"), seed};
    std::vector<int> sizes;
    std::stringstream in(parts);
    for (std::string item; std::getline(in, item, ',');) {
      try {
        sizes.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--parts", "not an integer: " + item);
      }
    }
    if (sizes.empty()) {
      throw CLI::RequiredError("--parts (for --family multipartite)");
    }
    return family::CompleteMultipartite{sizes};
  }

  ForestDistribution closed_form() const {
    if (family == "kn") return complete_distribution(*n);
    if (family == "kst") return bipartite_distribution(*s, *t);
    if (family == "star") return bipartite_distribution(1, *s);
    return path_distribution(*n - 1);
  }
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not an integer: " + item);
    }
  }
  return out;
}

void print_distribution(std::ostream& out, const ForestDistribution& d, Format f) {
  switch (f) {
    case Format::Json:
      out << to_json(d).dump() << '\n';
      break;
    case Format::Text:
      out << format_polynomial(d) << '\n';
      break;
    case Format::Csv:
      out << "k,probability\n";
      for (const auto& [k, p] : d.probs) {
        out << k << ',' << format_rational(p) << '\n';
      }
      break;
  }
}

void print_rational(std::ostream& out, const Rational& q, Format f) {
  switch (f) {
    case Format::Json:
      out << Json{{"value", format_rational(q)}}.dump() << '\n';
      break;
    case Format::Text:
      out << format_rational(q) << '\n';
      break;
    case Format::Csv:
      out << "value\n" << format_rational(q) << '\n';
      break;
  }
}

void print_lines(std::ostream& out, const std::vector<Json>& rows, Format f, const std::vector<std::string>& columns) {
  if (f == Format::Csv) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << columns[c];
    }
    out << '\n';
  }
  for (const auto& row : rows) {
    if (f == Format::Json) {
      out << row.dump() << '\n';
      continue;
    }
    const char* sep = f == Format::Csv ? "," : "\t";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& v = row.at(columns[c]);
      out << (c ? sep : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo engine for the random forest-building process"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string format_name = "json";
  bool verbose = false;
  unsigned threads = 1;
  app.add_option("--format", format_name, "json|text|csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_flag("--verbose", verbose, "progress on standard error");
  app.add_option("--threads", threads, "worker threads for simulations")->check(CLI::PositiveNumber);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "json|text|csv")->check(CLI::IsMember({"json", "text", "csv"}));
  };

  std::function<void()> action;
  auto format = [&] {
    return format_name == "text" ? Format::Text : format_name == "csv" ? Format::Csv : Format::Json;
  };

  // poly
  GraphSource poly_src;
  std::string method = "exact";
  auto* poly = app.add_subcommand("poly", "exact component-count distribution p_G(x)");
  poly_src.attach(poly);
  add_format(poly);
  poly->add_option("--method", method, "exact|brute|closed")->check(CLI::IsMember({"exact", "brute", "closed"}));
  poly->callback([&] {
    action = [&] {
      ForestDistribution d;
      if (method == "closed") {
        if (!poly_src.closed_form_available()) {
          throw Error(ErrorCode::InvalidParameter, "closed form exists only for --family kn|kst|path|star");
        }
        poly_src.build();  // validates parameters
        d = poly_src.closed_form();
      } else if (method == "brute") {
        d = brute_force_distribution(poly_src.build());
      } else {
        d = forest_polynomial(poly_src.build());
      }
      print_distribution(out, d, format());
    };
  });

  // expect
  GraphSource expect_src;
  auto* expect = app.add_subcommand("expect", "expected component count, sum of 1/(d(u)+d(v)-1)");
  expect_src.attach(expect);
  add_format(expect);
  expect->callback([&] { action = [&] { print_rational(out, expected_components(expect_src.build()), format()); }; });

  // one-comp
  GraphSource one_src;
  auto* one = app.add_subcommand("one-comp", "P(G,1) by the large-bridge-pruned recurrence");
  one_src.attach(one);
  add_format(one);
  one->callback([&] { action = [&] { print_rational(out, single_component_probability(one_src.build()), format()); }; });

  // closed
  std::string which;
  std::optional<int> cn, cs, ct, cm, ca, cb, cl;
  auto* closed = app.add_subcommand("closed", "evaluate a closed form");
  add_format(closed);
  closed->add_option("which", which, "kn|kst|path|cycle1|gnm-expect|gnm-bound|q")
      ->required()
      ->check(CLI::IsMember({"kn", "kst", "path", "cycle1", "gnm-expect", "gnm-bound", "q"}));
  closed->add_option("--n", cn, "vertex count (kn, cycle1, gnm-*) or edge count (path)");
  closed->add_option("--s", cs);
  closed->add_option("--t", ct);
  closed->add_option("--m", cm);
  closed->add_option("--a", ca);
  closed->add_option("--b", cb);
  closed->add_option("--l", cl);
  closed->callback([&] {
    auto need = [&](const std::optional<int>& v, const char* flag) {
      if (!v) {
        throw CLI::RequiredError(std::string(flag) + " (for closed " + which + ")");
      }
      return *v;
    };
    if (which == "kn") {
      const int n = need(cn, "--n");
      action = [&, n] { print_distribution(out, complete_distribution(n), format()); };
    } else if (which == "kst") {
      const int s = need(cs, "--s");
      const int t = need(ct, "--t");
      action = [&, s, t] { print_distribution(out, bipartite_distribution(s, t), format()); };
    } else if (which == "path") {
      const int n = need(cn, "--n");
      action = [&, n] { print_distribution(out, path_distribution(n), format()); };
    } else if (which == "cycle1") {
      const int n = need(cn, "--n");
      action = [&, n] { print_rational(out, cycle_single_component(n), format()); };
    } else if (which == "gnm-expect") {
      const int n = need(cn, "--n");
      const int m = need(cm, "--m");
      action = [&, n, m] { print_rational(out, gnm_expected_components(n, m), format()); };
    } else if (which == "gnm-bound") {
      const int n = need(cn, "--n");
      const int m = need(cm, "--m");
      action = [&, n, m] { print_rational(out, gnm_expectation_lower_bound(n, m), format()); };
    } else {
      const int s = need(cs, "--s"), t = need(ct, "--t"), a = need(ca, "--a"), b = need(cb, "--b"),
                l = need(cl, "--l");
      action = [&, s, t, a, b, l] { print_rational(out, bipartite_Q(s, t, a, b, l), format()); };
    }
  });

  // simulate
  GraphSource sim_src;
  std::uint64_t trials = 100000;
  std::uint64_t sim_seed = 1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the distribution");
  sim_src.attach(sim);
  add_format(sim);
  sim->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sim->add_option("--sim-seed", sim_seed, "seed for the orderings");
  sim->callback([&] {
    action = [&] {
      const auto est = estimate_distribution(sim_src.build(), trials, sim_seed, threads);
      const auto f = format();
      if (f == Format::Json) {
        out << to_json(est).dump() << '\n';
      } else {
        std::vector<Json> rows;
        for (const auto& [k, c] : est.counts) {
          rows.push_back(Json{{"k", k}, {"count", c}, {"p_hat", est.probability(k)}});
        }
        print_lines(out, rows, f, {"k", "count", "p_hat"});
      }
    };
  });

  // gnm-sim
  int gn = 0, gm = 0;
  std::uint64_t graphs = 1000, orderings = 10, gseed = 1;
  auto* gnm = app.add_subcommand("gnm-sim", "Monte Carlo mean component count over G(n,m)");
  add_format(gnm);
  gnm->add_option("--n", gn)->required();
  gnm->add_option("--m", gm)->required();
  gnm->add_option("--graphs", graphs)->check(CLI::PositiveNumber);
  gnm->add_option("--orderings", orderings)->check(CLI::PositiveNumber);
  gnm->add_option("--seed", gseed);
  gnm->callback([&] {
    action = [&] {
      const auto est = estimate_gnm_expectation(gn, gm, graphs, orderings, gseed, threads);
      const Rational exact = gnm_expected_components(gn, gm);
      const Json row{{"n", gn},
                     {"m", gm},
                     {"draws", est.draws},
                     {"mean", est.mean},
                     {"stderr", est.standard_error},
                     {"exact", format_rational(exact)}};
      print_lines(out, {row}, format(), {"n", "m", "draws", "mean", "stderr", "exact"});
    };
  });

  // decay
  int dd = 3;
  std::string n_values = "8,12,16";
  std::uint64_t dtrials = 100000, dseed = 1;
  auto* decay = app.add_subcommand("decay", "one-component frequency on random regular graphs");
  add_format(decay);
  decay->add_option("--d", dd);
  decay->add_option("--n-values", n_values, "comma-separated vertex counts");
  decay->add_option("--trials", dtrials)->check(CLI::PositiveNumber);
  decay->add_option("--seed", dseed);
  decay->callback([&] {
    action = [&] {
      const auto ns = parse_int_list(n_values, "--n-values");
      const auto rows = single_component_decay(dd, ns, dtrials, dseed, threads);
      if (format() == Format::Csv) {
        out << decay_csv(rows);
      } else {
        std::vector<Json> js;
        for (const auto& r : rows) {
          js.push_back(to_json(r));
        }
        print_lines(out, js, format(), {"n", "graph6", "trials", "hits", "p1_hat", "neg_log_p1_over_n", "cheeger"});
      }
    };
  });

  // search
  std::string kind;
  int search_n = 0;
  auto* search = app.add_subcommand("search", "pairs|twins|trees|logconcave");
  add_format(search);
  search->add_option("kind", kind)->required()->check(CLI::IsMember({"pairs", "twins", "trees", "logconcave"}));
  search->add_option("--n,--max-n", search_n, "vertex count (maximum for logconcave)")->required();
  search->callback([&] {
    action = [&] {
      ForestEngine engine;
      std::vector<Json> rows;
      std::vector<std::string> columns;
      if (kind == "pairs" || kind == "trees") {
        const auto reports =
            kind == "pairs" ? find_equal_polynomial_pairs(search_n, engine) : find_tree_pairs(search_n, engine);
        for (const auto& r : reports) {
          rows.push_back(to_json(r));
        }
        columns = {"graph6_a", "graph6_b", "explained_by_edge_transitivity"};
      } else if (kind == "twins") {
        for (const auto& r : find_edge_degree_twins(search_n, engine)) {
          rows.push_back(to_json(r));
        }
        columns = {"graph6_a", "graph6_b", "expectation"};
      } else {
        for (const auto& v : sweep_log_concavity(search_n, engine)) {
          rows.push_back(Json{{"graph6", v.graph6}, {"polynomial", to_json(v.polynomial)}});
        }
        columns = {"graph6"};
      }
      if (verbose) {
        err << kind << ": " << rows.size() << " records, memo " << engine.memo_size() << '\n';
      }
      print_lines(out, rows, format(), columns);
    };
  });

  // conjecture
  int ck = 1;
  auto* conj = app.add_subcommand("conjecture", "compare K_{k,k+1} plus an edge with K_{k,k+1}");
  add_format(conj);
  conj->add_option("--k", ck)->required();
  conj->callback([&] {
    action = [&] {
      ForestEngine engine;
      const auto r = check_conjecture(ck, engine);
      const Json row{{"k", ck}, {"holds", r.holds}, {"p_G", to_json(r.p_G)}, {"p_K", to_json(r.p_K)}};
      if (format() == Format::Json) {
        out << row.dump() << '\n';
      } else {
        const char* sep = format() == Format::Csv ? "," : "\t";
        if (format() == Format::Csv) {
          out << "k,holds\n";
        }
        out << ck << sep << (r.holds ? "true" : "false") << '\n';
      }
    };
  });

  // cheeger
  GraphSource ch_src;
  auto* cheeger = app.add_subcommand("cheeger", "exact Cheeger constant by subset enumeration");
  ch_src.attach(cheeger);
  add_format(cheeger);
  cheeger->callback([&] { action = [&] { print_rational(out, cheeger_constant(ch_src.build()), format()); }; });

  // table
  std::string table_kind;
  int table_max = 5;
  auto* table = app.add_subcommand("table", "small-graphs|trees polynomial tables");
  add_format(table);
  table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"small-graphs", "trees"}));
  table->add_option("--max-n", table_max);
  table->callback([&] {
    action = [&] {
      ForestEngine engine;
      std::vector<Json> rows;
      const int lo = table_kind == "trees" ? 2 : 2;
      for (int n = lo; n <= table_max; ++n) {
        const auto graphs = table_kind == "trees" ? enumerate_trees(n) : enumerate_connected_graphs(n);
        for (const auto& g : graphs) {
          const ForestDistribution p = engine.polynomial(g);
          rows.push_back(Json{{"graph6", serialize_graph6(g)},
                              {"n", g.vertex_count()},
                              {"m", g.edge_count()},
                              {"polynomial", format_polynomial(p)},
                              {"distribution", to_json(p)}});
        }
        if (verbose) {
          err << "n=" << n << " done (" << rows.size() << " rows)\n";
        }
      }
      if (format() == Format::Json) {
        for (auto& r : rows) {
          r.erase("polynomial");
        }
      }
      print_lines(out, rows, format(), {"graph6", "n", "m", "polynomial"});
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace forest::cli
