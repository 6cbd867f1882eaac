#pragma once

#include <vector>

#include "coesg/semigroup.hpp"

namespace coesg {

/// T = ({x} + S) ∪ {0} for x ∈ S \ {0}: a semigroup of maximal embedding
/// dimension with m(T) = x, F(T) = F(S)+x, g(T) = g(S)+x-1 and
/// msg(T) = (Ap(S,x) + x) — all verified on construction (the Frobenius
/// clause degenerates only for T = N, i.e. lifting N by 1). When x is even
/// and S is Coe the result is Coe again.
struct MedLift {
  NumericalSemigroup base;
  Int x;
  NumericalSemigroup result;
  Int predicted_multiplicity;
  Int predicted_frobenius;
  Int predicted_genus;
  std::vector<Int> predicted_msg;
};

MedLift med_lift(const NumericalSemigroup& s, Int x);  // errc::not_an_element

/// e(S) = m(S): every element of msg(S) is as small as it can be.
bool is_med(const NumericalSemigroup& s);

/// Inverse of med_lift for maximal-embedding-dimension T != N:
/// {t - m(T) : t ∈ T \ {0}}. Throws errc::not_med / errc::is_full_semigroup.
NumericalSemigroup med_unlift(const NumericalSemigroup& t);

/// T = 2S ∪ ({2s+1} + 2S) for {s, s+1} ⊆ S: the Coe-semigroups with exactly
/// one odd minimal generator arise this way. Predicted values m(T) = 2m(S),
/// F(T) = 2F(S)+2s+1, g(T) = 2g(S)+s, msg(T) = 2·msg(S) ∪ {2s+1},
/// e(T) = e(S)+1 are verified on construction (multiplicity/msg clauses
/// degenerate only for T = N, i.e. s = 0).
struct DoubleLift {
  NumericalSemigroup base;
  Int s;
  NumericalSemigroup result;
  Int predicted_multiplicity;
  Int predicted_frobenius;
  Int predicted_genus;
  std::vector<Int> predicted_msg;
  Int predicted_embedding_dimension;
};

DoubleLift double_lift(const NumericalSemigroup& s, Int shift);  // errc::pair_not_in_s

/// Inverse of double_lift: T must be Coe, not N, with exactly one odd minimal
/// generator 2s+1; returns (S, s) with S generated by the halved even minimal
/// generators. Throws errc::not_coe / errc::is_full_semigroup /
/// errc::not_unique_odd_generator.
struct DoubleUnlift {
  NumericalSemigroup base;
  Int s;
};

DoubleUnlift double_unlift(const NumericalSemigroup& t);

/// Frobenius number and genus of a Coe-semigroup with embedding dimension 3
/// and msg = {n1, n2, n3}, where n1, n2 are even and n3 is the odd generator:
/// F = n3 + n1*n2/2 - n1 - n2,
/// g = (n3-1)/2 + (n1/2-1)(n2/2-1).
/// Throws errc::not_ed3_coe unless the arguments fit that shape and generate a
/// Coe-semigroup minimally.
struct Ed3Values {
  Int frobenius;
  Int genus;
};

Ed3Values ed3_formulas(Int n1, Int n2, Int n3);

/// Lifts S by doubling and reports how the Wilf inequality transfers:
/// whenever S satisfies Wilf so does the lift, via the exact identity
/// n(T) = 2n(S) + s.
struct WilfTransferReport {
  NumericalSemigroup base;
  Int s;
  NumericalSemigroup lifted;
  bool base_wilf;
  bool lifted_wilf;
  bool implication_holds;     // base_wilf implies lifted_wilf
  Int base_small_count;       // n(S)
  Int lifted_small_count;     // n(T)
  bool small_count_identity;  // n(T) == 2 n(S) + s
};

WilfTransferReport wilf_transfer_check(const NumericalSemigroup& s, Int shift);

}  // namespace coesg
