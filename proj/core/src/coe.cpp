#include "coesg/coe.hpp"

#include <algorithm>

namespace coesg {

bool is_coe(const NumericalSemigroup& s) {
  for (Int x : s.minimal_generators()) {
    if (x % 2 == 1 && (!s.contains(x - 1) || !s.contains(x + 1))) return false;
  }
  return true;
}

CoeSanity coe_sanity(const NumericalSemigroup& s) {
  if (!is_coe(s)) throw domain_error(errc::not_coe, "semigroup is not coated with odd elements");
  if (s.is_naturals()) throw domain_error(errc::is_full_semigroup, "N has no structural constraints");
  return {s.multiplicity() % 2 == 0, s.frobenius() % 2 == 1};
}

ChainRecord chain_to_full(const NumericalSemigroup& s) {
  if (!is_coe(s)) throw domain_error(errc::not_coe, "semigroup is not coated with odd elements");
  ChainRecord record;
  record.links.push_back(s);
  while (!record.links.back().is_naturals()) {
    record.links.push_back(record.links.back().fill_frobenius());
  }
  return record;
}

CoeMonoid::CoeMonoid(Int scale, NumericalSemigroup base) : scale_(scale), base_(std::move(base)) {
  if (scale_ == 1) {
    if (!is_coe(base_)) throw domain_error(errc::bad_arguments, "scale-1 base must be a Coe-semigroup");
  } else if (scale_ < 2 || scale_ % 2 != 0) {
    throw domain_error(errc::bad_arguments, "scale must be 1 or an even integer >= 2");
  }
}

bool CoeMonoid::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (scale_ == 1) return base_.contains(n);
  return n % scale_ == 0 && base_.contains(n / scale_);
}

std::vector<Int> CoeMonoid::minimal_generators() const {
  std::vector<Int> out = base_.minimal_generators();
  for (Int& v : out) v *= scale_;
  return out;
}

std::optional<CoeMonoid> classify_monoid(const GeneratorSet& gens) {
  Int d = gens.gcd();
  if (gens.all_even()) {
    std::vector<Int> halved = gens.values();
    for (Int& v : halved) v /= d;
    return CoeMonoid(d, NumericalSemigroup::from_generators(GeneratorSet(std::move(halved))));
  }
  // An odd generator with gcd > 1: the monoid has odd elements x whose
  // neighbours x-1, x+1 cannot be multiples of gcd, so it is not Coe.
  if (d != 1) return std::nullopt;
  NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  if (!is_coe(s)) return std::nullopt;
  return CoeMonoid(1, std::move(s));
}

CoeMonoid coe_closure(const GeneratorSet& x) {
  if (x.all_even()) {
    auto monoid = classify_monoid(x);
    return *monoid;
  }
  std::vector<Int> coated = x.values();
  for (Int v : x.values()) {
    if (v % 2 == 1) {
      if (v > 1) coated.push_back(v - 1);
      coated.push_back(v + 1);
    }
  }
  NumericalSemigroup s = NumericalSemigroup::from_generators(GeneratorSet(std::move(coated)));
  if (!is_coe(s)) throw std::logic_error("coated generating set did not produce a Coe-semigroup");
  return CoeMonoid(1, std::move(s));
}

std::vector<Int> monoid_minimal_generators(const GeneratorSet& gens) {
  Int d = gens.gcd();
  std::vector<Int> scaled = gens.values();
  for (Int& v : scaled) v /= d;
  std::vector<Int> out = NumericalSemigroup::from_generators(GeneratorSet(std::move(scaled))).minimal_generators();
  for (Int& v : out) v *= d;
  return out;
}

}  // namespace coesg
