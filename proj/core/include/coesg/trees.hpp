#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coesg/semigroup.hpp"

namespace coesg::trees {

/// Families of Coe-semigroups organized as rooted trees with root N.
/// all and contains_k with even k are infinite; contains_k with odd k,
/// frob_at_most and genus_at_most are finite.
enum class Family { all, contains_k, frob_at_most, genus_at_most };

struct EnumerationBound {
  std::optional<Int> max_genus;  // drop children with genus above this
  std::optional<Int> max_depth;  // root has depth 0
  std::optional<Int> max_nodes;  // stop after this many vertices in BFS order
  bool unlimited() const noexcept { return !max_genus && !max_depth && !max_nodes; }
};

struct TreeSpec {
  Family family = Family::all;
  Int param = 0;  // k, frobenius cap, or genus cap; ignored for Family::all
  EnumerationBound bound;
};

struct TreeEdge {
  NumericalSemigroup parent;
  NumericalSemigroup child;
  std::vector<Int> removed;  // one odd minimal generator or {F+1, F+2}
};

/// Sons in the full tree: S \ {x} for each odd minimal generator x > F(S),
/// plus S \ {F+1, F+2} when both are minimal generators. Sorted by the
/// smallest removed element. Input must be Coe (errc::not_coe).
std::vector<TreeEdge> sons_all(const NumericalSemigroup& s);

/// Sons within the family of Coe-semigroups containing k: as sons_all but the
/// removals may not touch k. Requires k ∈ S (errc::k_not_member).
std::vector<TreeEdge> sons_contains_k(const NumericalSemigroup& s, Int k);

/// Sons within Frobenius number <= frob_cap: odd removals restricted to
/// F(S) < x <= frob_cap and the pair {F+1, F+2} allowed only when it stays
/// within the cap. Requires F(S) <= frob_cap (errc::frob_exceeded).
std::vector<TreeEdge> sons_frob_bounded(const NumericalSemigroup& s, Int frob_cap);

/// Sons within genus <= genus_cap: full rule when g(S) <= cap-2, single
/// removals only when g(S) = cap-1, none at the cap. Requires
/// g(S) <= genus_cap (errc::genus_exceeded).
std::vector<TreeEdge> sons_genus_bounded(const NumericalSemigroup& s, Int genus_cap);

struct TreeVertex {
  NumericalSemigroup semigroup;
  std::optional<std::size_t> parent;  // index into the BFS order
  std::vector<Int> removed;           // empty for the root
  Int depth = 0;
};

/// Breadth-first enumeration from N. Vertices appear in deterministic BFS
/// order (siblings by smallest removed element); an infinite family without
/// any bound raises errc::unbounded_infinite_family. With threads > 1 the son
/// computation of each level is parallelized and re-serialized, so output is
/// byte-for-byte identical to the sequential run.
std::vector<TreeVertex> enumerate(const TreeSpec& spec, int threads = 1);

/// Number of Coe-semigroups of each genus 0..max_genus.
std::vector<Int> count_by_genus(Int max_genus);

/// "⟨a,b,…⟩" rendering of the minimal generating set.
std::string render_msg(const NumericalSemigroup& s);

/// Graphviz digraph; node labels are minimal generating sets, edge labels the
/// removed elements. Edges are emitted parent -> child (the growth direction;
/// structurally each child determines its parent by filling the top two gaps).
void write_dot(std::ostream& os, const std::vector<TreeVertex>& vertices);

/// One JSON object per vertex:
/// {"msg":[...],"genus":g,"frobenius":f,"parent_msg":[...]|null,"removed":[...]|null}
void write_jsonl(std::ostream& os, const std::vector<TreeVertex>& vertices);

}  // namespace coesg::trees
