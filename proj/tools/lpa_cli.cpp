// Command-line front end for the Leavitt path algebra toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lpa/io.hpp"
#include "lpa/report.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kHypothesis = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lpa::Graph load_graph(const std::string& path) {
  return lpa::parse_graph(read_input(path), path == "-" ? "<stdin>" : path);
}

std::string load_expr_text(const std::string& arg) { return arg == "-" ? read_input("-") : arg; }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string invariant_line(const lpa::FlowInvariant& inv) {
  return "BF: " + lpa::describe_bf(inv.bf_factors) + "; det(I-A) = " + inv.det_value.get_str() +
         "; sign = " + std::to_string(inv.det_sign);
}

std::string paths_text(const lpa::Graph& g, const std::vector<lpa::Path>& paths) {
  std::string out;
  for (const auto& p : paths) out += g.path_to_string(p) + '\n';
  return out;
}

int exit_for(const lpa::StructureError& e) {
  using Kind = lpa::StructureError::Kind;
  switch (e.kind()) {
    case Kind::RingLacksEup:
      return kHypothesis;
    case Kind::InternalAssertion:
      return 4;
    default:
      return kRefuted;
  }
}

struct ExprOptions {
  std::string graph_file;
  std::string ring = "Z";
  std::string expr;
  bool json = false;
};

void add_expr_options(CLI::App* cmd, ExprOptions& o) {
  cmd->add_option("--graph", o.graph_file, "graph file ('-' for stdin)")->required();
  cmd->add_option("--ring", o.ring, "coefficient ring: Z, Zi, Zr<d>, Zt, Q, Qi, Qr<d>");
  cmd->add_option("expr", o.expr, "algebra expression ('-' for stdin)")->required();
  cmd->add_flag("--json", o.json, "machine-readable output");
}

lpa::Element load_element(const ExprOptions& o) {
  auto algebra = lpa::make_algebra(load_graph(o.graph_file), lpa::RingId::from_name(o.ring));
  return lpa::parse_expr(load_expr_text(o.expr), algebra);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);

  bool json_out = false;

  // invariants
  std::string inv_graph;
  auto* invariants = app.add_subcommand("invariants", "Bowen-Franks group and det(I - A)");
  invariants->add_option("graph", inv_graph, "graph file")->required();
  invariants->add_flag("--json", json_out);

  // compare
  std::string cmp_e, cmp_f, cmp_ring = "Z";
  auto* compare = app.add_subcommand("compare", "test the determinant-sign obstruction");
  compare->add_option("graph_e", cmp_e)->required();
  compare->add_option("graph_f", cmp_f)->required();
  compare->add_option("--ring", cmp_ring)->required();
  compare->add_flag("--json", json_out);

  // graph moves
  std::string splice_graph, splice_vertex;
  auto* splice = app.add_subcommand("splice", "Cuntz splice at a vertex");
  splice->add_option("graph", splice_graph)->required();
  splice->add_option("vertex", splice_vertex)->required();

  std::string split_graph, split_partition;
  bool split_complete = false;
  auto* outsplit = app.add_subcommand("outsplit", "out-split a graph");
  outsplit->add_option("graph", split_graph)->required();
  auto* complete_flag = outsplit->add_flag("--complete", split_complete, "singleton classes");
  auto* partition_opt = outsplit->add_option("--partition", split_partition, "partition file");
  complete_flag->excludes(partition_opt);

  std::string edge_matrix;
  auto* edgegraph = app.add_subcommand("edgegraph", "graph of a {0,1} matrix");
  edgegraph->add_option("matrix", edge_matrix)->required();

  std::string tails_graph;
  std::size_t tails_depth = 0;
  auto* addtails = app.add_subcommand("addtails", "append finite tails at sinks");
  addtails->add_option("graph", tails_graph)->required();
  addtails->add_option("depth", tails_depth)->required();

  // algebra commands
  ExprOptions eval_opts, check_opts, sf_opts, diag_opts;
  auto* eval = app.add_subcommand("eval", "print the normal form of an expression");
  add_expr_options(eval, eval_opts);

  std::string check_kind;
  auto* check = app.add_subcommand("check", "test projection / unitary / diagonal");
  add_expr_options(check, check_opts);
  check->add_option("--kind", check_kind)
      ->required()
      ->check(CLI::IsMember({"projection", "unitary", "diagonal"}));

  bool override_eup = false;
  auto* sform = app.add_subcommand("standard-form", "standard form of a unitary");
  add_expr_options(sform, sf_opts);
  sform->add_flag("--override-eup", override_eup, "skip the EUP hypothesis check");

  auto* diagonalize = app.add_subcommand("diagonalize", "write a projection as a sum of path projections");
  add_expr_options(diagonalize, diag_opts);

  std::string hom_source, hom_target, hom_ring, hom_file;
  std::size_t hom_depth = 3;
  auto* homcheck = app.add_subcommand("hom-check", "validate generator images and diagonal preservation");
  homcheck->add_option("--source", hom_source, "source graph file")->required();
  homcheck->add_option("--graph", hom_target, "target graph file")->required();
  homcheck->add_option("--ring", hom_ring, "must match the ring in the header when given");
  homcheck->add_option("--depth", hom_depth, "path length bound for the diagonal check");
  homcheck->add_option("hom", hom_file, "homomorphism file")->required();
  homcheck->add_flag("--json", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*invariants) {
      auto g = load_graph(inv_graph);
      auto inv = lpa::flow_invariant(g);
      if (json_out) print_json(lpa::invariant_json(g.name(), inv));
      else std::cout << invariant_line(inv) << '\n';
      return kOk;
    }

    if (*compare) {
      auto e = load_graph(cmp_e);
      auto f = load_graph(cmp_f);
      auto ring = lpa::RingId::from_name(cmp_ring);
      auto report = lpa::compare_for_star_isomorphism(e, f, ring);
      if (json_out) {
        print_json(lpa::comparison_json(e.name(), f.name(), ring, report));
      } else {
        std::cout << "E (" << e.name() << "): " << invariant_line(report.invariant_e) << '\n'
                  << "F (" << f.name() << "): " << invariant_line(report.invariant_f) << '\n'
                  << "ring: " << ring.name() << '\n'
                  << "verdict: " << lpa::to_string(report.verdict) << '\n';
        for (const auto& h : report.failed_hypotheses) std::cout << "failed hypothesis: " << h << '\n';
      }
      return report.verdict == lpa::Verdict::HypothesesNotMet ? kHypothesis : kOk;
    }

    if (*splice) {
      auto g = load_graph(splice_graph);
      std::cout << lpa::serialize_graph(lpa::cuntz_splice(g, g.vertex(splice_vertex)));
      return kOk;
    }

    if (*outsplit) {
      auto g = load_graph(split_graph);
      lpa::OutSplitPartition p;
      if (split_complete) p = lpa::OutSplitPartition::complete(g);
      else if (!split_partition.empty()) p = lpa::parse_partition(read_input(split_partition), g, split_partition);
      else throw UsageError("outsplit needs --complete or --partition <file>");
      std::cout << lpa::serialize_graph(lpa::out_split(g, p));
      return kOk;
    }

    if (*edgegraph) {
      auto m = lpa::parse_matrix(read_input(edge_matrix), edge_matrix);
      std::cout << lpa::serialize_graph(lpa::edge_graph_from_matrix(m));
      return kOk;
    }

    if (*addtails) {
      std::cout << lpa::serialize_graph(lpa::add_tails(load_graph(tails_graph), tails_depth));
      return kOk;
    }

    if (*eval) {
      auto x = load_element(eval_opts);
      if (eval_opts.json) print_json({{"normal_form", lpa::format_element(x)}});
      else std::cout << lpa::format_element(x) << '\n';
      return kOk;
    }

    if (*check) {
      auto x = load_element(check_opts);
      bool result = check_kind == "projection" ? lpa::is_projection(x)
                    : check_kind == "unitary"  ? lpa::is_unitary(x)
                                               : lpa::is_diagonal(x);
      if (check_opts.json) print_json({{"kind", check_kind}, {"result", result}});
      else std::cout << (result ? "true" : "false") << '\n';
      return result ? kOk : kRefuted;
    }

    if (*sform) {
      auto u = load_element(sf_opts);
      auto form = lpa::standard_form(u, {.override_eup = override_eup});
      const auto& g = u.graph();
      if (sf_opts.json) {
        auto triples = json::array();
        for (const auto& t : form.triples) {
          triples.push_back({{"lambda", lpa::to_string(t.lambda)},
                             {"alpha", g.path_to_string(t.alpha)},
                             {"beta", g.path_to_string(t.beta)}});
        }
        print_json({{"triples", triples}});
      } else {
        for (const auto& t : form.triples) {
          std::cout << lpa::to_string(t.lambda) << " ; " << g.path_to_string(t.alpha) << " ; "
                    << g.path_to_string(t.beta) << '\n';
        }
      }
      return kOk;
    }

    if (*diagonalize) {
      auto p = load_element(diag_opts);
      auto d = lpa::diagonalize_projection(p);
      if (diag_opts.json) {
        auto paths = json::array();
        for (const auto& path : d.paths) paths.push_back(p.graph().path_to_string(path));
        print_json({{"paths", paths}});
      } else {
        std::cout << paths_text(p.graph(), d.paths);
      }
      return kOk;
    }

    if (*homcheck) {
      auto source = load_graph(hom_source);
      auto target = load_graph(hom_target);
      auto hom = lpa::parse_hom(read_input(hom_file), source, target, hom_file);
      if (!hom_ring.empty() && lpa::RingId::from_name(hom_ring) != hom.ring) {
        throw UsageError("--ring " + hom_ring + " does not match the header ring " + hom.ring.name());
      }
      auto valid = lpa::check_homomorphism(hom.images);
      json j{{"homomorphism", valid.valid ? "Valid" : "RelationViolated"}};
      std::string text = valid.valid ? "homomorphism: Valid\n"
                                     : "homomorphism: RelationViolated " + valid.relation + " at " +
                                           valid.where + '\n';
      bool ok = valid.valid;
      if (!valid.valid) {
        j["relation"] = valid.relation;
        j["where"] = valid.where;
      } else {
        auto diag = lpa::check_diagonal_preservation(hom.images, hom_depth);
        j["depth"] = hom_depth;
        if (diag.preserved) {
          j["diagonal"] = "Preserved";
          text += "diagonal: Preserved (depth " + std::to_string(hom_depth) + ")\n";
        } else {
          const std::string w = source.path_to_string(*diag.witness);
          j["diagonal"] = "Violated";
          j["witness"] = w;
          text += "diagonal: Violated at " + w + '\n';
          ok = false;
        }
      }
      if (json_out) print_json(j);
      else std::cout << text;
      return ok ? kOk : kRefuted;
    }
  } catch (const lpa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lpa::StructureError& e) {
    std::cerr << "error: " << lpa::to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_for(e);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // unknown ring/vertex names, invalid partitions, mismatched rings
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
