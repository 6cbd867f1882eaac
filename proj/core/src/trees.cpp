#include "coesg/trees.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "coesg/coe.hpp"

namespace coesg::trees {

namespace {

bool in_msg(const NumericalSemigroup& s, Int x) {
  const auto& msg = s.minimal_generators();
  return std::binary_search(msg.begin(), msg.end(), x);
}

TreeEdge single_edge(const NumericalSemigroup& s, Int x) {
  return {s, s.remove_element(x), {x}};
}

TreeEdge pair_edge(const NumericalSemigroup& s) {
  Int f = s.frobenius();
  return {s, s.remove_pair(f + 1), {f + 1, f + 2}};
}

void sort_by_removed(std::vector<TreeEdge>& edges) {
  std::sort(edges.begin(), edges.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.removed.front() < b.removed.front(); });
}

void require_coe(const NumericalSemigroup& s) {
  if (!is_coe(s)) throw domain_error(errc::not_coe, "tree vertices must be Coe-semigroups");
}

std::vector<TreeEdge> singles_only(const NumericalSemigroup& s) {
  std::vector<TreeEdge> out;
  Int f = s.frobenius();
  for (Int x : s.minimal_generators()) {
    if (x % 2 == 1 && x > f) out.push_back(single_edge(s, x));
  }
  return out;
}

}  // namespace

std::vector<TreeEdge> sons_all(const NumericalSemigroup& s) {
  require_coe(s);
  std::vector<TreeEdge> out = singles_only(s);
  Int f = s.frobenius();
  if (f >= 0 && in_msg(s, f + 1) && in_msg(s, f + 2)) out.push_back(pair_edge(s));
  sort_by_removed(out);
  return out;
}

std::vector<TreeEdge> sons_contains_k(const NumericalSemigroup& s, Int k) {
  require_coe(s);
  if (k < 1) throw domain_error(errc::bad_arguments, "k must be positive");
  if (!s.contains(k)) throw domain_error(errc::k_not_member, std::to_string(k) + " is not an element");
  std::vector<TreeEdge> out;
  Int f = s.frobenius();
  for (Int x : s.minimal_generators()) {
    if (x % 2 == 1 && x > f && x != k) out.push_back(single_edge(s, x));
  }
  if (f >= 0 && f + 1 != k && f + 2 != k && in_msg(s, f + 1) && in_msg(s, f + 2)) out.push_back(pair_edge(s));
  sort_by_removed(out);
  return out;
}

std::vector<TreeEdge> sons_frob_bounded(const NumericalSemigroup& s, Int frob_cap) {
  require_coe(s);
  if (frob_cap < 1) throw domain_error(errc::bad_arguments, "frobenius cap must be positive");
  Int f = s.frobenius();
  if (f > frob_cap) throw domain_error(errc::frob_exceeded, "frobenius " + std::to_string(f) + " above cap");
  std::vector<TreeEdge> out;
  for (Int x : s.minimal_generators()) {
    if (x % 2 == 1 && x > f && x <= frob_cap) out.push_back(single_edge(s, x));
  }
  if (f >= 0 && f + 2 <= frob_cap && in_msg(s, f + 1) && in_msg(s, f + 2)) out.push_back(pair_edge(s));
  sort_by_removed(out);
  return out;
}

std::vector<TreeEdge> sons_genus_bounded(const NumericalSemigroup& s, Int genus_cap) {
  require_coe(s);
  if (genus_cap < 1) throw domain_error(errc::bad_arguments, "genus cap must be positive");
  Int g = s.genus();
  if (g > genus_cap) throw domain_error(errc::genus_exceeded, "genus " + std::to_string(g) + " above cap");
  if (g == genus_cap) return {};
  if (g == genus_cap - 1) {
    std::vector<TreeEdge> out = singles_only(s);
    sort_by_removed(out);
    return out;
  }
  return sons_all(s);
}

namespace {

std::vector<TreeEdge> family_sons(const TreeSpec& spec, const NumericalSemigroup& s) {
  switch (spec.family) {
    case Family::all: return sons_all(s);
    case Family::contains_k: return sons_contains_k(s, spec.param);
    case Family::frob_at_most: return sons_frob_bounded(s, spec.param);
    case Family::genus_at_most: return sons_genus_bounded(s, spec.param);
  }
  throw std::logic_error("unreachable family");
}

void validate_spec(const TreeSpec& spec) {
  switch (spec.family) {
    case Family::all:
      if (spec.bound.unlimited()) {
        throw domain_error(errc::unbounded_infinite_family, "the full tree is infinite; set a bound");
      }
      break;
    case Family::contains_k:
      if (spec.param < 1) throw domain_error(errc::bad_arguments, "k must be positive");
      if (spec.param % 2 == 0 && spec.bound.unlimited()) {
        throw domain_error(errc::unbounded_infinite_family,
                           "the tree of Coe-semigroups containing an even element is infinite; set a bound");
      }
      break;
    case Family::frob_at_most:
      if (spec.param < 1) throw domain_error(errc::bad_arguments, "frobenius cap must be positive");
      break;
    case Family::genus_at_most:
      if (spec.param < 1) throw domain_error(errc::bad_arguments, "genus cap must be positive");
      break;
  }
}

}  // namespace

std::vector<TreeVertex> enumerate(const TreeSpec& spec, int threads) {
  validate_spec(spec);
  if (threads < 1) throw domain_error(errc::bad_arguments, "threads must be >= 1");
  const EnumerationBound& bound = spec.bound;
  std::vector<TreeVertex> vertices;
  if (bound.max_nodes && *bound.max_nodes < 1) return vertices;
  vertices.push_back({NumericalSemigroup::naturals(), std::nullopt, {}, 0});

  std::vector<std::size_t> frontier{0};
  Int depth = 0;
  while (!frontier.empty()) {
    if (bound.max_depth && depth + 1 > *bound.max_depth) break;
    // Sons per frontier vertex, computed in order (possibly in parallel) and
    // merged sequentially so the BFS order never depends on scheduling.
    std::vector<std::vector<TreeEdge>> sons(frontier.size());
    if (threads == 1 || frontier.size() == 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        sons[i] = family_sons(spec, vertices[frontier[i]].semigroup);
      }
    } else {
      std::size_t chunk_count = std::min<std::size_t>(static_cast<std::size_t>(threads), frontier.size());
      std::vector<std::future<void>> tasks;
      for (std::size_t c = 0; c < chunk_count; ++c) {
        tasks.push_back(std::async(std::launch::async, [&, c] {
          for (std::size_t i = c; i < frontier.size(); i += chunk_count) {
            sons[i] = family_sons(spec, vertices[frontier[i]].semigroup);
          }
        }));
      }
      for (auto& t : tasks) t.get();
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (TreeEdge& edge : sons[i]) {
        if (bound.max_genus && edge.child.genus() > *bound.max_genus) continue;
        if (bound.max_nodes && static_cast<Int>(vertices.size()) >= *bound.max_nodes) return vertices;
        next.push_back(vertices.size());
        vertices.push_back({std::move(edge.child), frontier[i], std::move(edge.removed), depth + 1});
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return vertices;
}

std::vector<Int> count_by_genus(Int max_genus) {
  if (max_genus < 0) throw domain_error(errc::bad_arguments, "genus bound must be non-negative");
  TreeSpec spec;
  spec.family = Family::all;
  spec.bound.max_genus = max_genus;
  std::vector<Int> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  for (const TreeVertex& v : enumerate(spec)) {
    ++counts[static_cast<std::size_t>(v.semigroup.genus())];
  }
  return counts;
}

std::string render_msg(const NumericalSemigroup& s) {
  std::string out = "⟨";
  const auto& msg = s.minimal_generators();
  for (std::size_t i = 0; i < msg.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(msg[i]);
  }
  out += "⟩";
  return out;
}

namespace {

std::string render_removed(const std::vector<Int>& removed) {
  std::string out = "{";
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(removed[i]);
  }
  out += "}";
  return out;
}

void write_int_array(std::ostream& os, const std::vector<Int>& values) {
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
}

}  // namespace

void write_dot(std::ostream& os, const std::vector<TreeVertex>& vertices) {
  os << "digraph coe_tree {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << render_msg(vertices[i].semigroup) << "\"];\n";
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].parent) continue;
    os << "  v" << *vertices[i].parent << " -> v" << i << " [label=\"" << render_removed(vertices[i].removed)
       << "\"];\n";
  }
  os << "}\n";
}

void write_jsonl(std::ostream& os, const std::vector<TreeVertex>& vertices) {
  for (const TreeVertex& v : vertices) {
    os << "{\"msg\":";
    write_int_array(os, v.semigroup.minimal_generators());
    os << ",\"genus\":" << v.semigroup.genus() << ",\"frobenius\":" << v.semigroup.frobenius() << ",\"parent_msg\":";
    if (v.parent) {
      write_int_array(os, vertices[*v.parent].semigroup.minimal_generators());
    } else {
      os << "null";
    }
    os << ",\"removed\":";
    if (v.parent) {
      write_int_array(os, v.removed);
    } else {
      os << "null";
    }
    os << "}\n";
  }
}

}  // namespace coesg::trees
