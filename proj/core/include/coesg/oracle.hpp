#pragma once

#include <vector>

#include "coesg/semigroup.hpp"

namespace coesg::oracle {

/// Every numerical semigroup of genus <= max_genus, enumerated by the classic
/// genus tree (remove minimal generators above the Frobenius number) over a
/// plain bitmask representation, independent of the Coe machinery. Guarded at
/// max_genus <= 25 (errc::bound_too_large).
std::vector<NumericalSemigroup> all_semigroups_up_to_genus(Int max_genus);

/// Definitional Coe check: scans every odd element s <= F(S)+2 and tests
/// {s-1, s+1} ⊆ S directly, without minimal generating sets.
bool coe_definitional(const NumericalSemigroup& s);

struct DpInvariants {
  Int frobenius;
  Int genus;
  Int multiplicity;
};

/// Frobenius number, genus and multiplicity of <gens> computed from a plain
/// boolean reachability table, sharing no code with NumericalSemigroup.
/// Throws errc::gcd_not_one.
DpInvariants dp_invariants(const GeneratorSet& gens);

}  // namespace coesg::oracle
