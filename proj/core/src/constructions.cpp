#include "coesg/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "coesg/coe.hpp"

namespace coesg {

MedLift med_lift(const NumericalSemigroup& s, Int x) {
  if (x < 1 || !s.contains(x)) {
    throw domain_error(errc::not_an_element, std::to_string(x) + " is not a nonzero element");
  }
  std::vector<Int> below{0};
  for (Int v : s.small_elements()) below.push_back(x + v);
  NumericalSemigroup result = NumericalSemigroup::from_small_elements(std::move(below), x + s.conductor());

  MedLift lift{s, x, std::move(result), x, s.frobenius() + x, s.genus() + x - 1, s.apery_set(x)};
  for (Int& v : lift.predicted_msg) v += x;

  if (lift.result.multiplicity() != lift.predicted_multiplicity || lift.result.genus() != lift.predicted_genus ||
      lift.result.minimal_generators() != lift.predicted_msg ||
      (!lift.result.is_naturals() && lift.result.frobenius() != lift.predicted_frobenius)) {
    throw std::logic_error("shifted semigroup does not match its predicted invariants");
  }
  if (x % 2 == 0 && is_coe(s) && !is_coe(lift.result)) {
    throw std::logic_error("even shift of a Coe-semigroup must be Coe");
  }
  return lift;
}

bool is_med(const NumericalSemigroup& s) { return s.embedding_dimension() == s.multiplicity(); }

NumericalSemigroup med_unlift(const NumericalSemigroup& t) {
  if (t.is_naturals()) throw domain_error(errc::is_full_semigroup, "N has no shift decomposition");
  if (!is_med(t)) throw domain_error(errc::not_med, "embedding dimension differs from multiplicity");
  Int m = t.multiplicity();
  std::vector<Int> below;
  for (Int v : t.small_elements()) {
    if (v > 0) below.push_back(v - m);
  }
  return NumericalSemigroup::from_small_elements(std::move(below), t.conductor() - m);
}

DoubleLift double_lift(const NumericalSemigroup& s, Int shift) {
  if (shift < 0 || !s.contains(shift) || !s.contains(shift + 1)) {
    throw domain_error(errc::pair_not_in_s,
                       "{" + std::to_string(shift) + "," + std::to_string(shift + 1) + "} must both be elements");
  }
  Int odd = 2 * shift + 1;
  Int bound = 2 * s.conductor() + odd + 1;
  std::vector<Int> below;
  for (Int n = 0; n < bound; ++n) {
    bool member = (n % 2 == 0) ? s.contains(n / 2) : (n >= odd && s.contains((n - odd) / 2));
    if (member) below.push_back(n);
  }
  NumericalSemigroup result = NumericalSemigroup::from_small_elements(std::move(below), bound);

  DoubleLift lift{s,
                  shift,
                  std::move(result),
                  2 * s.multiplicity(),
                  2 * s.frobenius() + odd,
                  2 * s.genus() + shift,
                  {},
                  s.embedding_dimension() + 1};
  lift.predicted_msg = s.minimal_generators();
  for (Int& v : lift.predicted_msg) v *= 2;
  lift.predicted_msg.insert(std::lower_bound(lift.predicted_msg.begin(), lift.predicted_msg.end(), odd), odd);

  // The Frobenius and genus clauses hold even in the degenerate case T = N
  // (shift 0, base N); the other clauses are claims about T != N.
  if (lift.result.frobenius() != lift.predicted_frobenius || lift.result.genus() != lift.predicted_genus) {
    throw std::logic_error("doubled semigroup does not match its predicted invariants");
  }
  if (!lift.result.is_naturals() &&
      (lift.result.multiplicity() != lift.predicted_multiplicity ||
       lift.result.minimal_generators() != lift.predicted_msg ||
       lift.result.embedding_dimension() != lift.predicted_embedding_dimension)) {
    throw std::logic_error("doubled semigroup does not match its predicted generators");
  }
  if (!is_coe(lift.result)) throw std::logic_error("doubled semigroup must be Coe");
  return lift;
}

DoubleUnlift double_unlift(const NumericalSemigroup& t) {
  if (!is_coe(t)) throw domain_error(errc::not_coe, "semigroup is not coated with odd elements");
  if (t.is_naturals()) throw domain_error(errc::is_full_semigroup, "N has no doubling decomposition");
  std::vector<Int> evens;
  Int odd = -1;
  Int odd_count = 0;
  for (Int x : t.minimal_generators()) {
    if (x % 2 == 1) {
      odd = x;
      ++odd_count;
    } else {
      evens.push_back(x / 2);
    }
  }
  if (odd_count != 1) {
    throw domain_error(errc::not_unique_odd_generator,
                       "need exactly one odd minimal generator, found " + std::to_string(odd_count));
  }
  NumericalSemigroup base = NumericalSemigroup::from_generators(GeneratorSet(std::move(evens)));
  Int shift = (odd - 1) / 2;
  if (!base.contains(shift) || !base.contains(shift + 1)) {
    throw std::logic_error("halved semigroup must contain the shift pair");
  }
  return {std::move(base), shift};
}

Ed3Values ed3_formulas(Int n1, Int n2, Int n3) {
  for (Int v : {n1, n2, n3}) {
    if (v < 1) throw domain_error(errc::not_ed3_coe, "generators must be positive");
  }
  // The formulas read the odd generator from the third slot; callers must
  // identify it before calling.
  if (n1 % 2 != 0 || n2 % 2 != 0 || n3 % 2 == 0) {
    throw domain_error(errc::not_ed3_coe,
                       "expected two even generators followed by the odd one");
  }
  NumericalSemigroup s = [&] {
    try {
      return NumericalSemigroup::from_generators(GeneratorSet{n1, n2, n3});
    } catch (const domain_error&) {
      throw domain_error(errc::not_ed3_coe, "generators do not generate a numerical semigroup");
    }
  }();
  std::vector<Int> sorted{n1, n2, n3};
  std::sort(sorted.begin(), sorted.end());
  if (s.minimal_generators() != sorted) {
    throw domain_error(errc::not_ed3_coe, "generators are not a minimal generating set");
  }
  if (!is_coe(s)) throw domain_error(errc::not_ed3_coe, "generated semigroup is not Coe");
  return {n3 + n1 * n2 / 2 - n1 - n2, (n3 - 1) / 2 + (n1 / 2 - 1) * (n2 / 2 - 1)};
}

WilfTransferReport wilf_transfer_check(const NumericalSemigroup& s, Int shift) {
  DoubleLift lift = double_lift(s, shift);
  WilfTransferReport report{s,
                            shift,
                            std::move(lift.result),
                            s.wilf_holds(),
                            false,
                            false,
                            s.small_count(),
                            0,
                            false};
  report.lifted_wilf = report.lifted.wilf_holds();
  report.implication_holds = !report.base_wilf || report.lifted_wilf;
  report.lifted_small_count = report.lifted.small_count();
  report.small_count_identity = report.lifted_small_count == 2 * report.base_small_count + shift;
  return report;
}

}  // namespace coesg
