#include "numsg/ideals.hpp"

#include <algorithm>
#include <string>

#include "numsg/apery_hilbert.hpp"
#include "numsg/detail/bitset.hpp"
#include "numsg/error.hpp"

namespace numsg {

RelativeIdeal::RelativeIdeal(Trusted, NumericalSemigroup ambient, std::vector<Int> small,
                             Int threshold)
    : ambient_(std::move(ambient)), small_(std::move(small)), threshold_(threshold) {
  normalize();
}

RelativeIdeal::RelativeIdeal(NumericalSemigroup ambient, std::vector<Int> small, Int threshold)
    : RelativeIdeal(Trusted{}, std::move(ambient), std::move(small), threshold) {
  // Closure under S reduces to closure under each minimal generator; members at
  // or above the threshold are closed trivially.
  for (Int x : small_) {
    for (Int g : ambient_.min_gens()) {
      if (!contains(x + g)) {
        throw Error(ErrorCode::InvalidArgument,
                    "not an ideal: " + std::to_string(x) + " + " + std::to_string(g) +
                        " is missing");
      }
    }
  }
}

void RelativeIdeal::normalize() {
  std::sort(small_.begin(), small_.end());
  small_.erase(std::unique(small_.begin(), small_.end()), small_.end());
  small_.erase(std::lower_bound(small_.begin(), small_.end(), threshold_), small_.end());
  while (!small_.empty() && small_.back() == threshold_ - 1) {
    small_.pop_back();
    --threshold_;
  }
}

RelativeIdeal RelativeIdeal::generated_by(const NumericalSemigroup& ambient,
                                          std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "an ideal needs a generator");
  const Int lo = *std::min_element(gens.begin(), gens.end());
  const Int threshold = lo + ambient.conductor();
  std::vector<Int> small;
  for (Int x = lo; x < threshold; ++x) {
    for (Int g : gens) {
      if (ambient.contains(x - g)) {
        small.push_back(x);
        break;
      }
    }
  }
  return RelativeIdeal(Trusted{}, ambient, std::move(small), threshold);
}

RelativeIdeal RelativeIdeal::whole(const NumericalSemigroup& ambient) {
  std::vector<Int> small;
  for (Int x = 0; x < ambient.conductor(); ++x) {
    if (ambient.contains(x)) small.push_back(x);
  }
  return RelativeIdeal(Trusted{}, ambient, std::move(small), ambient.conductor());
}

RelativeIdeal RelativeIdeal::maximal(const NumericalSemigroup& ambient) {
  std::vector<Int> small;
  const Int threshold = std::max<Int>(ambient.conductor(), 1);
  for (Int x = 1; x < threshold; ++x) {
    if (ambient.contains(x)) small.push_back(x);
  }
  return RelativeIdeal(Trusted{}, ambient, std::move(small), threshold);
}

bool RelativeIdeal::contains(Int x) const noexcept {
  return x >= threshold_ || std::binary_search(small_.begin(), small_.end(), x);
}

bool RelativeIdeal::is_proper() const {
  for (Int x : small_) {
    if (!ambient_.contains(x)) return false;
  }
  for (Int x = threshold_; x < ambient_.conductor(); ++x) {
    if (!ambient_.contains(x)) return false;
  }
  return true;
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  for (Int x : small_) {
    if (!other.contains(x)) return false;
  }
  for (Int x = threshold_; x < other.threshold_; ++x) {
    if (!other.contains(x)) return false;
  }
  return true;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_trivial()) return {-1};
  std::vector<Int> pf;
  for (Int g : s.gaps()) {
    // M is generated by the minimal generators, so checking them suffices.
    const bool all_in = std::all_of(s.min_gens().begin(), s.min_gens().end(),
                                    [&](Int n) { return s.contains(g + n); });
    if (all_in) pf.push_back(g);
  }
  return pf;
}

Int type(const NumericalSemigroup& s) { return static_cast<Int>(pseudo_frobenius(s).size()); }

RelativeIdeal standard_canonical_ideal(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  std::vector<Int> small;
  for (Int x = 0; x <= f; ++x) {
    if (!s.contains(f - x)) small.push_back(x);
  }
  return RelativeIdeal(RelativeIdeal::Trusted{}, s, std::move(small), f + 1);
}

RelativeIdeal shift(const RelativeIdeal& ideal, Int z) {
  std::vector<Int> small = ideal.small_;
  for (Int& x : small) x += z;
  return RelativeIdeal(RelativeIdeal::Trusted{}, ideal.ambient_, std::move(small),
                       ideal.threshold_ + z);
}

std::vector<Int> ideal_minimal_generators(const RelativeIdeal& ideal) {
  const auto& gens = ideal.ambient().min_gens();
  const Int e = ideal.ambient().multiplicity();
  std::vector<Int> result;
  // Anything >= threshold + e has x - e in the ideal.
  for (Int x = ideal.min(); x < ideal.threshold() + e; ++x) {
    if (!ideal.contains(x)) continue;
    const bool reducible =
        std::any_of(gens.begin(), gens.end(), [&](Int g) { return ideal.contains(x - g); });
    if (!reducible) result.push_back(x);
  }
  return result;
}

RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.ambient_ == b.ambient_)) {
    throw Error(ErrorCode::AmbientMismatch, "ideals over different semigroups");
  }
  const Int base = a.min() + b.min();
  // Every integer >= limit is a sum of one element from each ideal.
  const Int limit = std::min(a.threshold_ + b.min(), b.threshold_ + a.min());
  const auto width = static_cast<std::size_t>(limit - base);
  detail::Bitset sums(width);
  detail::Bitset b_bits(width);
  for (Int y : b.small_) b_bits.set(static_cast<std::size_t>(y - b.min()));
  for (Int y = b.threshold_; y - b.min() < static_cast<Int>(width); ++y) {
    b_bits.set(static_cast<std::size_t>(y - b.min()));
  }
  auto add_row = [&](Int x) { sums.or_shifted(b_bits, static_cast<std::size_t>(x - a.min())); };
  for (Int x : a.small_) add_row(x);
  for (Int x = a.threshold_; x - a.min() < static_cast<Int>(width); ++x) add_row(x);

  std::vector<Int> small;
  sums.for_each_set([&](std::size_t i) { small.push_back(base + static_cast<Int>(i)); });
  return RelativeIdeal(RelativeIdeal::Trusted{}, a.ambient_, std::move(small), limit);
}

bool is_symmetric(const NumericalSemigroup& s) {
  const bool by_canonical = standard_canonical_ideal(s) == RelativeIdeal::whole(s);
  ensure(by_canonical == (type(s) == 1), "K(S) = S disagrees with t(S) = 1");
  return by_canonical;
}

NariPartition nari_partition(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const Int f = s.frobenius();
  NariPartition part;
  for (Int x : pseudo_frobenius(s)) {
    if (x != f) part.b.push_back(x + e);
  }
  for (Int w : apery_table(s).elements) {
    if (!std::binary_search(part.b.begin(), part.b.end(), w)) part.a.push_back(w);
  }
  ensure(part.a.back() == f + e, "largest Apery element differs from f + e");
  return part;
}

bool is_almost_symmetric(const NumericalSemigroup& s, AlmostSymmetryMethod method) {
  if (method == AlmostSymmetryMethod::Definition) {
    const auto m = RelativeIdeal::maximal(s);
    return ideal_sum(m, standard_canonical_ideal(s)).is_subset_of(m);
  }
  const auto part = nari_partition(s);
  const Int e = s.multiplicity();
  const std::size_t m = part.a.size() - 1;  // A = {alpha_0 = 0, ..., alpha_m}
  const Int alpha_m = part.a[m];
  for (std::size_t i = 1; i < m; ++i) {
    if (part.a[i] + part.a[m - i] != alpha_m) return false;
  }
  const std::size_t t_minus_1 = part.b.size();
  for (std::size_t j = 0; j < t_minus_1; ++j) {
    // beta_{j+1} + beta_{t-1-j}
    if (part.b[j] + part.b[t_minus_1 - 1 - j] != alpha_m + e) return false;
  }
  return true;
}

bool is_canonical_ideal(const RelativeIdeal& ideal) {
  const auto k = standard_canonical_ideal(ideal.ambient());
  return shift(k, ideal.min() - k.min()) == ideal;
}

}  // namespace numsg
