#include "coesg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace coesg {

namespace {

// Largest reachability table from_generators is willing to allocate. With the
// min*max conductor bound this admits every desk-scale input while keeping
// accidental huge generators from exhausting memory. All arithmetic is int64,
// so sums and products of inputs up to 2^30 cannot overflow.
constexpr Int kMaxTableSize = Int{1} << 28;

constexpr Int kMaxParsedValue = Int{1} << 30;

}  // namespace

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "parse_error";
    case errc::bad_arguments: return "bad_arguments";
    case errc::gcd_not_one: return "gcd_not_one";
    case errc::not_an_element: return "not_an_element";
    case errc::not_minimal_generator: return "not_minimal_generator";
    case errc::pair_not_minimal: return "pair_not_minimal";
    case errc::already_full: return "already_full";
    case errc::bound_too_large: return "bound_too_large";
    case errc::not_coe: return "not_coe";
    case errc::is_full_semigroup: return "is_full_semigroup";
    case errc::k_not_member: return "k_not_member";
    case errc::frob_exceeded: return "frob_exceeded";
    case errc::genus_exceeded: return "genus_exceeded";
    case errc::unbounded_infinite_family: return "unbounded_infinite_family";
    case errc::not_med: return "not_med";
    case errc::pair_not_in_s: return "pair_not_in_s";
    case errc::not_unique_odd_generator: return "not_unique_odd_generator";
    case errc::not_ed3_coe: return "not_ed3_coe";
  }
  return "unknown";
}

domain_error::domain_error(errc code, const std::string& message)
    : std::domain_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

GeneratorSet::GeneratorSet(std::vector<Int> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw domain_error(errc::bad_arguments, "generator set must be nonempty");
  }
  for (Int v : values_) {
    if (v < 1) {
      throw domain_error(errc::bad_arguments, "generators must be positive, got " + std::to_string(v));
    }
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

GeneratorSet::GeneratorSet(std::initializer_list<Int> values) : GeneratorSet(std::vector<Int>(values)) {}

Int GeneratorSet::gcd() const noexcept {
  Int g = 0;
  for (Int v : values_) g = std::gcd(g, v);
  return g;
}

bool GeneratorSet::all_even() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Int v) { return v % 2 == 0; });
}

GeneratorSet parse_generator_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw domain_error(errc::parse_error,
                         "expected comma-separated positive integers, got \"" + std::string(text) + "\"");
    }
    Int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value < 1 || value > kMaxParsedValue) {
      throw domain_error(errc::parse_error, "value out of range: \"" + std::string(item) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return GeneratorSet(std::move(out));
}

NumericalSemigroup::NumericalSemigroup(Int conductor, std::vector<Int> small)
    : conductor_(conductor), small_(std::move(small)) {
  compute_msg();
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup(0, {}); }

NumericalSemigroup NumericalSemigroup::from_generators(const GeneratorSet& gens) {
  const auto& g = gens.values();
  if (g.front() == 1) return naturals();
  if (gens.gcd() != 1) {
    throw domain_error(errc::gcd_not_one, "generators have gcd " + std::to_string(gens.gcd()));
  }
  // Every residue class mod min(gens) has a representative that is a sum of at
  // most min(gens)-1 generators, so F < min*max and the table below covers the
  // whole gap set.
  Int bound = g.front() * g.back();
  if (bound + 1 > kMaxTableSize) {
    throw domain_error(errc::bound_too_large, "reachability table of size " + std::to_string(bound + 1));
  }
  std::vector<char> table(static_cast<std::size_t>(bound) + 1, 0);
  table[0] = 1;
  for (Int i = 1; i <= bound; ++i) {
    for (Int gen : g) {
      if (gen > i) break;
      if (table[static_cast<std::size_t>(i - gen)]) {
        table[static_cast<std::size_t>(i)] = 1;
        break;
      }
    }
  }
  Int frob = -1;
  for (Int i = bound; i >= 0; --i) {
    if (!table[static_cast<std::size_t>(i)]) {
      frob = i;
      break;
    }
  }
  std::vector<Int> small;
  for (Int i = 0; i <= frob; ++i) {
    if (table[static_cast<std::size_t>(i)]) small.push_back(i);
  }
  return NumericalSemigroup(frob + 1, std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<Int> below, Int bound) {
  if (bound < 0) throw domain_error(errc::bad_arguments, "negative bound");
  std::sort(below.begin(), below.end());
  below.erase(std::unique(below.begin(), below.end()), below.end());
  for (Int v : below) {
    if (v < 0 || v >= bound) {
      throw domain_error(errc::bad_arguments, "element " + std::to_string(v) + " outside [0, bound)");
    }
  }
  // Locate the conductor: one past the largest value of [0, bound) missing
  // from `below`.
  std::vector<char> present(static_cast<std::size_t>(bound), 0);
  for (Int v : below) present[static_cast<std::size_t>(v)] = 1;
  Int conductor = 0;
  for (Int i = bound - 1; i >= 0; --i) {
    if (!present[static_cast<std::size_t>(i)]) {
      conductor = i + 1;
      break;
    }
  }
  std::vector<Int> small;
  for (Int v : below) {
    if (v < conductor) small.push_back(v);
  }
  if (conductor > 0 && (small.empty() || small.front() != 0)) {
    throw domain_error(errc::bad_arguments, "0 must be an element");
  }
  // Closure check. Sums with a term >= conductor are automatically in the
  // set, so only pairs of small elements need testing.
  for (std::size_t i = 1; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      Int sum = small[i] + small[j];
      if (sum >= conductor) break;
      if (!std::binary_search(small.begin(), small.end(), sum)) {
        throw domain_error(errc::bad_arguments,
                           "not closed under addition: " + std::to_string(small[i]) + "+" + std::to_string(small[j]));
      }
    }
  }
  return NumericalSemigroup(conductor, std::move(small));
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return std::binary_search(small_.begin(), small_.end(), n);
}

Int NumericalSemigroup::multiplicity() const noexcept {
  if (conductor_ == 0) return 1;
  if (small_.size() > 1) return small_[1];
  return conductor_;
}

void NumericalSemigroup::compute_msg() {
  if (conductor_ == 0) {
    msg_ = {1};
    return;
  }
  Int m = multiplicity();
  Int hi = frobenius() + m;  // minimal generators lie in [m, F+m]
  std::vector<char> member(static_cast<std::size_t>(hi) + 1, 0);
  for (Int v : small_) member[static_cast<std::size_t>(v)] = 1;
  for (Int i = conductor_; i <= hi; ++i) member[static_cast<std::size_t>(i)] = 1;
  std::vector<Int> positives;
  for (Int i = 1; i <= hi; ++i) {
    if (member[static_cast<std::size_t>(i)]) positives.push_back(i);
  }
  std::vector<char> is_sum(static_cast<std::size_t>(hi) + 1, 0);
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (std::size_t j = i; j < positives.size(); ++j) {
      Int sum = positives[i] + positives[j];
      if (sum > hi) break;
      is_sum[static_cast<std::size_t>(sum)] = 1;
    }
  }
  msg_.clear();
  for (Int v : positives) {
    if (!is_sum[static_cast<std::size_t>(v)]) msg_.push_back(v);
  }
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  std::size_t next = 0;
  for (Int i = 0; i < conductor_; ++i) {
    if (next < small_.size() && small_[next] == i) {
      ++next;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n < 1 || !contains(n)) {
    throw domain_error(errc::not_an_element, std::to_string(n) + " is not a nonzero element");
  }
  std::vector<Int> least(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int s = 0; found < n; ++s) {
    if (!contains(s)) continue;
    Int r = s % n;
    if (least[static_cast<std::size_t>(r)] < 0) {
      least[static_cast<std::size_t>(r)] = s;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

NumericalSemigroup NumericalSemigroup::remove_element(Int x) const {
  if (!std::binary_search(msg_.begin(), msg_.end(), x)) {
    throw domain_error(errc::not_minimal_generator, std::to_string(x) + " is not a minimal generator");
  }
  Int bound = std::max(conductor_, x + 1);
  std::vector<Int> below;
  for (Int i = 0; i < bound; ++i) {
    if (i != x && contains(i)) below.push_back(i);
  }
  return from_small_elements(std::move(below), bound);
}

NumericalSemigroup NumericalSemigroup::remove_pair(Int x) const {
  if (!std::binary_search(msg_.begin(), msg_.end(), x) || !std::binary_search(msg_.begin(), msg_.end(), x + 1)) {
    throw domain_error(errc::pair_not_minimal,
                       "{" + std::to_string(x) + "," + std::to_string(x + 1) + "} are not both minimal generators");
  }
  Int bound = std::max(conductor_, x + 2);
  std::vector<Int> below;
  for (Int i = 0; i < bound; ++i) {
    if (i != x && i != x + 1 && contains(i)) below.push_back(i);
  }
  return from_small_elements(std::move(below), bound);
}

NumericalSemigroup NumericalSemigroup::fill_frobenius() const {
  if (conductor_ == 0) throw domain_error(errc::already_full, "semigroup is already N");
  std::vector<Int> below = small_;
  if (conductor_ >= 2) below.push_back(conductor_ - 2);
  below.push_back(conductor_ - 1);
  return from_small_elements(std::move(below), conductor_);
}

bool NumericalSemigroup::wilf_holds() const noexcept {
  return genus() <= (embedding_dimension() - 1) * small_count();
}

SylvesterValues sylvester(Int a, Int b) {
  if (a < 2 || b <= a || std::gcd(a, b) != 1) {
    throw domain_error(errc::bad_arguments,
                       "need coprime 2 <= a < b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  return {a * b - a - b, (a - 1) * (b - 1) / 2};
}

NumericalSemigroup intersection(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  Int bound = std::max(a.conductor(), b.conductor());
  std::vector<Int> below;
  for (Int i = 0; i < bound; ++i) {
    if (a.contains(i) && b.contains(i)) below.push_back(i);
  }
  return NumericalSemigroup::from_small_elements(std::move(below), bound);
}

}  // namespace coesg
