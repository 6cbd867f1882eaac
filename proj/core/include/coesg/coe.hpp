#pragma once

#include <optional>
#include <vector>

#include "coesg/semigroup.hpp"

namespace coesg {

/// A numerical semigroup is coated with odd elements (Coe) when every odd
/// element x satisfies {x-1, x+1} ⊆ S. Checking the odd minimal generators
/// suffices: any other odd element is a minimal generator plus an even sum.
bool is_coe(const NumericalSemigroup& s);

struct CoeSanity {
  bool multiplicity_even;
  bool frobenius_odd;
};

/// Structural facts forced on every Coe-semigroup other than N, exposed as an
/// assertable check. Throws errc::not_coe / errc::is_full_semigroup.
CoeSanity coe_sanity(const NumericalSemigroup& s);

/// Saturation chain S = S_0 ⊊ S_1 ⊊ ... ⊊ S_k = N where each step adjoins
/// {F-1, F}. Every link is Coe; the length k equals the number of odd gaps
/// of S.
struct ChainRecord {
  std::vector<NumericalSemigroup> links;
  Int length() const noexcept { return static_cast<Int>(links.size()) - 1; }
};

ChainRecord chain_to_full(const NumericalSemigroup& s);  // errc::not_coe

/// A submonoid M of (N,+) closed in the Coe sense: either a Coe-semigroup
/// (scale 1) or a monoid of even numbers, stored exactly as M = scale * base
/// with base a numerical semigroup and scale the (even) content of M.
class CoeMonoid {
 public:
  CoeMonoid(Int scale, NumericalSemigroup base);

  Int scale() const noexcept { return scale_; }
  const NumericalSemigroup& base() const noexcept { return base_; }
  bool is_semigroup() const noexcept { return scale_ == 1; }
  bool contains(Int n) const noexcept;
  std::vector<Int> minimal_generators() const;

  friend bool operator==(const CoeMonoid& a, const CoeMonoid& b) noexcept {
    return a.scale_ == b.scale_ && a.base_ == b.base_;
  }

 private:
  Int scale_;
  NumericalSemigroup base_;
};

/// Decides whether <gens> is a Coe-monoid. All-even generators always qualify
/// (the monoid sits inside <2>); otherwise the generated monoid must be a
/// Coe numerical semigroup. Returns nullopt when it is not a Coe-monoid.
std::optional<CoeMonoid> classify_monoid(const GeneratorSet& gens);

/// Smallest Coe-monoid containing X: generated by X ∪ {x-1, x+1 : x odd ∈ X}.
/// A Coe-semigroup exactly when X has an odd element.
CoeMonoid coe_closure(const GeneratorSet& x);

/// Minimal generating set of the plain monoid <gens> (no gcd restriction):
/// gcd(gens) * msg(<gens/gcd>).
std::vector<Int> monoid_minimal_generators(const GeneratorSet& gens);

}  // namespace coesg
