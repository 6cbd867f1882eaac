#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coesg {

using Int = std::int64_t;

// Error identities for domain precondition failures. Parsing failures get
// their own code so callers can distinguish usage errors from domain errors.
enum class errc {
  parse_error,
  bad_arguments,
  gcd_not_one,
  not_an_element,
  not_minimal_generator,
  pair_not_minimal,
  already_full,
  bound_too_large,
  not_coe,
  is_full_semigroup,
  k_not_member,
  frob_exceeded,
  genus_exceeded,
  unbounded_infinite_family,
  not_med,
  pair_not_in_s,
  not_unique_odd_generator,
  not_ed3_coe,
};

std::string_view errc_name(errc code);

class domain_error : public std::domain_error {
 public:
  domain_error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Nonempty set of positive integers, stored sorted without duplicates.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Int> values);
  GeneratorSet(std::initializer_list<Int> values);

  const std::vector<Int>& values() const noexcept { return values_; }
  Int gcd() const noexcept;
  bool all_even() const noexcept;

 private:
  std::vector<Int> values_;
};

/// Parses a strict comma-separated list of positive decimal integers
/// ("4,6,7"). Whitespace, signs, empty items and values above 2^30 are
/// rejected with errc::parse_error.
GeneratorSet parse_generator_list(std::string_view text);

/// A numerical semigroup: a subset of N closed under addition, containing 0,
/// with finite complement. Canonical encoding is the conductor c (= F(S)+1)
/// plus the sorted elements strictly below c, so equality and hashing are
/// plain field comparisons. The minimal generating set is computed once at
/// construction; values are immutable afterwards.
class NumericalSemigroup {
 public:
  /// The full semigroup N (frobenius -1, conductor 0, msg {1}).
  static NumericalSemigroup naturals();

  /// Semigroup generated by `gens`. Throws errc::gcd_not_one unless the
  /// generators are coprime as a set. Uses a boolean reachability table up to
  /// min(gens)*max(gens), a safe upper bound for the conductor.
  static NumericalSemigroup from_generators(const GeneratorSet& gens);

  /// Builds the set {n : n >= bound} ∪ below (all entries of `below` must lie
  /// in [0, bound)) and canonicalizes. Throws errc::bad_arguments when the
  /// described set is not a numerical semigroup.
  static NumericalSemigroup from_small_elements(std::vector<Int> below, Int bound);

  bool contains(Int n) const noexcept;
  bool is_naturals() const noexcept { return conductor_ == 0; }

  Int conductor() const noexcept { return conductor_; }
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int genus() const noexcept { return conductor_ - static_cast<Int>(small_.size()); }
  Int multiplicity() const noexcept;

  /// Elements of S strictly below the conductor, ascending (starts with 0
  /// unless S = N, where it is empty).
  const std::vector<Int>& small_elements() const noexcept { return small_; }

  /// n(S) = F(S)+1-g(S): number of elements of S strictly below F(S),
  /// together with 0. Equals small_elements().size(); 0 for N.
  Int small_count() const noexcept { return static_cast<Int>(small_.size()); }

  /// The unique minimal generating set, ascending. {1} for N.
  const std::vector<Int>& minimal_generators() const noexcept { return msg_; }
  Int embedding_dimension() const noexcept { return static_cast<Int>(msg_.size()); }

  /// Complement of S in N, ascending.
  std::vector<Int> gaps() const;

  /// Apery set of S relative to n ∈ S \ {0}: the least element of S in each
  /// residue class mod n, returned ascending. Throws errc::not_an_element.
  std::vector<Int> apery_set(Int n) const;

  /// S \ {x} for a minimal generator x. Throws errc::not_minimal_generator.
  NumericalSemigroup remove_element(Int x) const;

  /// S \ {x, x+1} where both x and x+1 are minimal generators.
  /// Throws errc::pair_not_minimal.
  NumericalSemigroup remove_pair(Int x) const;

  /// S ∪ {F(S)-1, F(S)}. Throws errc::already_full for N.
  NumericalSemigroup fill_frobenius() const;

  bool is_symmetric() const noexcept { return 2 * genus() == conductor_; }

  /// g(S) <= (e(S)-1) * n(S).
  bool wilf_holds() const noexcept;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.conductor_ == b.conductor_ && a.small_ == b.small_;
  }
  friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    return a.small_ < b.small_;
  }

 private:
  NumericalSemigroup(Int conductor, std::vector<Int> small);
  void compute_msg();

  Int conductor_ = 0;
  std::vector<Int> small_;
  std::vector<Int> msg_;
};

struct SylvesterValues {
  Int frobenius;
  Int genus;
};

/// Frobenius number and genus of <a,b> for coprime 2 <= a < b:
/// F = ab-a-b, g = (a-1)(b-1)/2. Throws errc::bad_arguments.
SylvesterValues sylvester(Int a, Int b);

NumericalSemigroup intersection(const NumericalSemigroup& a, const NumericalSemigroup& b);

}  // namespace coesg

template <>
struct std::hash<coesg::NumericalSemigroup> {
  std::size_t operator()(const coesg::NumericalSemigroup& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(s.conductor()));
    for (coesg::Int e : s.small_elements()) mix(static_cast<std::uint64_t>(e));
    return static_cast<std::size_t>(h);
  }
};
