#include "coesg/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace coesg::oracle {

namespace {

// Membership bitmask over a window wide enough for every semigroup of the
// requested genus: F <= 2g-1 and minimal generators stay below F+m <= 3g.
struct RawSemigroup {
  std::vector<char> in;
  Int frob;
  Int genus;
};

Int raw_multiplicity(const RawSemigroup& s) {
  for (Int i = 1; i < static_cast<Int>(s.in.size()); ++i) {
    if (s.in[static_cast<std::size_t>(i)]) return i;
  }
  return static_cast<Int>(s.in.size());
}

bool raw_is_minimal_generator(const RawSemigroup& s, Int x) {
  for (Int a = 1; a < x; ++a) {
    if (s.in[static_cast<std::size_t>(a)] && s.in[static_cast<std::size_t>(x - a)]) return false;
  }
  return true;
}

NumericalSemigroup to_semigroup(const RawSemigroup& s) {
  std::vector<Int> below;
  for (Int i = 0; i <= s.frob; ++i) {
    if (s.in[static_cast<std::size_t>(i)]) below.push_back(i);
  }
  return NumericalSemigroup::from_small_elements(std::move(below), s.frob + 1);
}

}  // namespace

std::vector<NumericalSemigroup> all_semigroups_up_to_genus(Int max_genus) {
  if (max_genus < 0) throw domain_error(errc::bad_arguments, "genus bound must be non-negative");
  if (max_genus > 25) {
    throw domain_error(errc::bound_too_large, "exhaustive enumeration capped at genus 25");
  }
  Int window = 3 * max_genus + 4;
  RawSemigroup naturals{std::vector<char>(static_cast<std::size_t>(window), 1), -1, 0};
  std::vector<NumericalSemigroup> out;
  std::vector<RawSemigroup> stack{std::move(naturals)};
  while (!stack.empty()) {
    RawSemigroup s = std::move(stack.back());
    stack.pop_back();
    out.push_back(to_semigroup(s));
    if (s.genus == max_genus) continue;
    // Minimal generators lie in [m, F+m], except that N has the lone
    // generator 1 sitting above F+m = 0.
    Int span = std::max<Int>(s.frob + raw_multiplicity(s), 1);
    for (Int x = std::max<Int>(s.frob + 1, 1); x <= span && x < window; ++x) {
      if (!s.in[static_cast<std::size_t>(x)] || !raw_is_minimal_generator(s, x)) continue;
      RawSemigroup child = s;
      child.in[static_cast<std::size_t>(x)] = 0;
      child.frob = x;
      child.genus = s.genus + 1;
      stack.push_back(std::move(child));
    }
  }
  return out;
}

bool coe_definitional(const NumericalSemigroup& s) {
  Int limit = s.frobenius() + 2;
  for (Int odd = 1; odd <= limit; odd += 2) {
    if (s.contains(odd) && (!s.contains(odd - 1) || !s.contains(odd + 1))) return false;
  }
  return true;
}

DpInvariants dp_invariants(const GeneratorSet& gens) {
  const auto& g = gens.values();
  Int gcd = 0;
  for (Int v : g) gcd = std::gcd(gcd, v);
  if (gcd != 1) throw domain_error(errc::gcd_not_one, "generators have gcd " + std::to_string(gcd));
  if (g.front() == 1) return {-1, 0, 1};
  Int bound = g.front() * g.back();
  if (bound + 1 > (Int{1} << 28)) {
    throw domain_error(errc::bound_too_large, "reachability table of size " + std::to_string(bound + 1));
  }
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (Int i = 1; i <= bound; ++i) {
    for (Int gen : g) {
      if (gen <= i && reach[static_cast<std::size_t>(i - gen)]) {
        reach[static_cast<std::size_t>(i)] = 1;
        break;
      }
    }
  }
  DpInvariants result{-1, 0, g.front()};
  for (Int i = 0; i <= bound; ++i) {
    if (!reach[static_cast<std::size_t>(i)]) {
      result.frobenius = i;
      ++result.genus;
    }
  }
  return result;
}

}  // namespace coesg::oracle
