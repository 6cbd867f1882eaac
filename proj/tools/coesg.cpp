#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coesg/coe.hpp"
#include "coesg/constructions.hpp"
#include "coesg/oracle.hpp"
#include "coesg/semigroup.hpp"
#include "coesg/trees.hpp"

namespace {

using coesg::Int;
using coesg::NumericalSemigroup;
using ordered_json = nlohmann::ordered_json;

NumericalSemigroup semigroup_from(const std::string& gens) {
  return NumericalSemigroup::from_generators(coesg::parse_generator_list(gens));
}

void print(const ordered_json& j) { std::cout << j.dump() << "\n"; }

ordered_json invariant_section(const NumericalSemigroup& s) {
  return {{"multiplicity", s.multiplicity()},
          {"frobenius", s.frobenius()},
          {"genus", s.genus()},
          {"msg", s.minimal_generators()}};
}

ordered_json wilf_section(const NumericalSemigroup& s) {
  return {{"msg", s.minimal_generators()},
          {"genus", s.genus()},
          {"embedding_dimension", s.embedding_dimension()},
          {"small_count", s.small_count()},
          {"wilf_holds", s.wilf_holds()}};
}

struct TreeOptions {
  std::string family;
  Int param = 0;
  std::optional<Int> max_genus;
  std::optional<Int> max_depth;
  std::optional<Int> max_nodes;
  std::string format = "jsonl";
  int threads = 1;
};

void run_tree(const TreeOptions& opt, bool param_given) {
  coesg::trees::TreeSpec spec;
  if (opt.family == "all") {
    spec.family = coesg::trees::Family::all;
  } else if (opt.family == "contains-k") {
    spec.family = coesg::trees::Family::contains_k;
  } else if (opt.family == "frob") {
    spec.family = coesg::trees::Family::frob_at_most;
  } else if (opt.family == "genus") {
    spec.family = coesg::trees::Family::genus_at_most;
  } else {
    throw CLI::ValidationError("--family", "expected all, contains-k, frob or genus");
  }
  if (spec.family != coesg::trees::Family::all && !param_given) {
    throw CLI::ValidationError("--param", "required for this family");
  }
  spec.param = opt.param;
  spec.bound.max_genus = opt.max_genus;
  spec.bound.max_depth = opt.max_depth;
  spec.bound.max_nodes = opt.max_nodes;
  auto vertices = coesg::trees::enumerate(spec, opt.threads);
  if (opt.format == "jsonl") {
    coesg::trees::write_jsonl(std::cout, vertices);
  } else if (opt.format == "dot") {
    coesg::trees::write_dot(std::cout, vertices);
  } else {
    throw CLI::ValidationError("--format", "expected jsonl or dot");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups coated with odd elements"};
  app.require_subcommand(1);

  std::string gens;
  std::string set_text;
  Int x = 0;
  Int shift = 0;
  TreeOptions tree_opt;
  Int census_genus = 0;

  auto* info = app.add_subcommand("info", "invariants of the semigroup generated by <gens>");
  info->add_option("gens", gens, "comma-separated generators")->required();
  info->callback([&] {
    NumericalSemigroup s = semigroup_from(gens);
    print({{"msg", s.minimal_generators()},
           {"frobenius", s.frobenius()},
           {"genus", s.genus()},
           {"multiplicity", s.multiplicity()}});
  });

  auto* iscoe = app.add_subcommand("is-coe", "is every odd element coated by its even neighbours?");
  iscoe->add_option("gens", gens, "comma-separated generators")->required();
  iscoe->callback([&] {
    NumericalSemigroup s = semigroup_from(gens);
    print({{"msg", s.minimal_generators()}, {"is_coe", coesg::is_coe(s)}});
  });

  auto* chain = app.add_subcommand("chain", "saturation chain up to N, adjoining {F-1, F} at each step");
  chain->add_option("gens", gens, "comma-separated generators")->required();
  chain->callback([&] {
    NumericalSemigroup s = semigroup_from(gens);
    coesg::ChainRecord record = coesg::chain_to_full(s);
    ordered_json links = ordered_json::array();
    for (const NumericalSemigroup& link : record.links) links.push_back(link.minimal_generators());
    print({{"msg", s.minimal_generators()}, {"length", record.length()}, {"links", links}});
  });

  auto* closure = app.add_subcommand("closure", "smallest Coe-monoid containing <set>");
  closure->add_option("set", set_text, "comma-separated positive integers")->required();
  closure->callback([&] {
    coesg::CoeMonoid monoid = coesg::coe_closure(coesg::parse_generator_list(set_text));
    print({{"scale", monoid.scale()}, {"msg", monoid.base().minimal_generators()}});
  });

  auto* tree = app.add_subcommand("tree", "enumerate a rooted tree of Coe-semigroups from N");
  tree->add_option("--family", tree_opt.family, "all, contains-k, frob or genus")->required();
  auto* param_opt = tree->add_option("--param", tree_opt.param, "k / frobenius cap / genus cap");
  tree->add_option("--max-genus", tree_opt.max_genus, "drop vertices with genus above N");
  tree->add_option("--max-depth", tree_opt.max_depth, "stop below depth N (root has depth 0)");
  tree->add_option("--max-nodes", tree_opt.max_nodes, "emit at most N vertices in BFS order");
  tree->add_option("--format", tree_opt.format, "jsonl (default) or dot");
  tree->add_option("--threads", tree_opt.threads, "parallel son computation, output unchanged");
  tree->callback([&] { run_tree(tree_opt, param_opt->count() > 0); });

  auto* med = app.add_subcommand("med-lift", "shift construction ({x}+S) ∪ {0}");
  med->add_option("gens", gens, "comma-separated generators")->required();
  med->add_option("x", x, "nonzero element of S")->required();
  med->callback([&] {
    coesg::MedLift lift = coesg::med_lift(semigroup_from(gens), x);
    ordered_json predicted{{"multiplicity", lift.predicted_multiplicity},
                           {"frobenius", lift.predicted_frobenius},
                           {"genus", lift.predicted_genus},
                           {"msg", lift.predicted_msg}};
    ordered_json computed = invariant_section(lift.result);
    print({{"base_msg", lift.base.minimal_generators()},
           {"x", lift.x},
           {"predicted", predicted},
           {"computed", computed},
           {"match", predicted == computed}});
  });

  auto* dbl = app.add_subcommand("double-lift", "doubling construction 2S ∪ ({2s+1}+2S)");
  dbl->add_option("gens", gens, "comma-separated generators")->required();
  dbl->add_option("s", shift, "element of S with s+1 also in S")->required();
  dbl->callback([&] {
    coesg::DoubleLift lift = coesg::double_lift(semigroup_from(gens), shift);
    ordered_json predicted{{"multiplicity", lift.predicted_multiplicity},
                           {"frobenius", lift.predicted_frobenius},
                           {"genus", lift.predicted_genus},
                           {"embedding_dimension", lift.predicted_embedding_dimension},
                           {"msg", lift.predicted_msg}};
    ordered_json computed{{"multiplicity", lift.result.multiplicity()},
                          {"frobenius", lift.result.frobenius()},
                          {"genus", lift.result.genus()},
                          {"embedding_dimension", lift.result.embedding_dimension()},
                          {"msg", lift.result.minimal_generators()}};
    print({{"base_msg", lift.base.minimal_generators()},
           {"s", lift.s},
           {"predicted", predicted},
           {"computed", computed},
           {"match", predicted == computed}});
  });

  auto* ed3 = app.add_subcommand("ed3", "closed-form Frobenius number and genus for Coe msg {n1,n2,n3}");
  ed3->add_option("gens", gens, "exactly three comma-separated generators")->required();
  ed3->callback([&] {
    coesg::GeneratorSet parsed = coesg::parse_generator_list(gens);
    if (parsed.values().size() != 3) {
      throw coesg::domain_error(coesg::errc::not_ed3_coe, "expected exactly three generators");
    }
    coesg::Ed3Values values = coesg::ed3_formulas(parsed.values()[0], parsed.values()[1], parsed.values()[2]);
    NumericalSemigroup s = NumericalSemigroup::from_generators(parsed);
    ordered_json predicted{{"frobenius", values.frobenius}, {"genus", values.genus}};
    ordered_json computed{{"frobenius", s.frobenius()}, {"genus", s.genus()}};
    print({{"msg", s.minimal_generators()},
           {"predicted", predicted},
           {"computed", computed},
           {"symmetric", s.is_symmetric()},
           {"match", predicted == computed}});
  });

  auto* wilf = app.add_subcommand("wilf-check", "Wilf inequality, optionally transferred through doubling");
  wilf->add_option("gens", gens, "comma-separated generators")->required();
  auto* shift_opt = wilf->add_option("s", shift, "doubling shift with {s,s+1} in S");
  wilf->callback([&] {
    NumericalSemigroup s = semigroup_from(gens);
    if (shift_opt->count() == 0) {
      print(wilf_section(s));
      return;
    }
    coesg::WilfTransferReport report = coesg::wilf_transfer_check(s, shift);
    print({{"base", wilf_section(report.base)},
           {"s", report.s},
           {"lifted", wilf_section(report.lifted)},
           {"implication_holds", report.implication_holds},
           {"small_count_identity", report.small_count_identity}});
  });

  auto* oracle = app.add_subcommand("oracle", "exhaustive cross-checks");
  oracle->require_subcommand(1);
  auto* census = oracle->add_subcommand("census", "semigroups and Coe-semigroups per genus");
  census->add_option("--max-genus", census_genus, "enumerate genus 0..N")->required();
  census->callback([&] {
    auto all = coesg::oracle::all_semigroups_up_to_genus(census_genus);
    std::vector<Int> total(static_cast<std::size_t>(census_genus) + 1, 0);
    std::vector<Int> coe(static_cast<std::size_t>(census_genus) + 1, 0);
    for (const NumericalSemigroup& s : all) {
      ++total[static_cast<std::size_t>(s.genus())];
      if (coesg::oracle::coe_definitional(s)) ++coe[static_cast<std::size_t>(s.genus())];
    }
    ordered_json rows = ordered_json::array();
    for (Int g = 0; g <= census_genus; ++g) {
      rows.push_back({{"genus", g},
                      {"semigroups", total[static_cast<std::size_t>(g)]},
                      {"coe", coe[static_cast<std::size_t>(g)]}});
    }
    print({{"max_genus", census_genus}, {"census", rows}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const coesg::domain_error& e) {
    if (e.code() == coesg::errc::parse_error) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
