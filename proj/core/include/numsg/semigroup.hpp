#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace numsg {

using Int = std::int64_t;

/// Generators above this bound are rejected with GeneratorTooLarge.
inline constexpr Int kMaxGenerator = Int{1} << 40;

/// A numerical semigroup S: a submonoid of the naturals with finite
/// complement, stored by its minimal generators together with a membership
/// table over [0, conductor].
///
/// Values are immutable and cheap to copy; the tables are shared between
/// copies.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `gens`. Redundant and repeated
  /// generators are allowed. Throws Error with EmptyGenerators,
  /// NonPositiveGenerator, GeneratorTooLarge or Gcd.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  const std::vector<Int>& min_gens() const noexcept { return impl_->min_gens; }
  Int multiplicity() const noexcept { return impl_->min_gens.front(); }
  Int embedding_dimension() const noexcept {
    return static_cast<Int>(impl_->min_gens.size());
  }
  /// max(N \ S), or -1 when S = N.
  Int frobenius() const noexcept { return impl_->conductor - 1; }
  Int conductor() const noexcept { return impl_->conductor; }
  const std::vector<Int>& gaps() const noexcept { return impl_->gaps; }
  Int genus() const noexcept { return static_cast<Int>(impl_->gaps.size()); }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= impl_->conductor) return true;
    return impl_->membership[static_cast<std::size_t>(x)] != 0;
  }

  /// True iff S is the whole of N.
  bool is_trivial() const noexcept { return impl_->conductor == 0; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.impl_ == b.impl_ || a.impl_->min_gens == b.impl_->min_gens;
  }

 private:
  struct Impl {
    std::vector<Int> min_gens;
    Int conductor = 0;
    std::vector<std::uint8_t> membership;  // index 0..conductor
    std::vector<Int> gaps;
  };

  explicit NumericalSemigroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

inline Int frobenius_number(const NumericalSemigroup& s) { return s.frobenius(); }
inline const std::vector<Int>& minimal_generators(const NumericalSemigroup& s) {
  return s.min_gens();
}
inline bool contains(const NumericalSemigroup& s, Int x) { return s.contains(x); }

/// Smallest odd element of S.
Int smallest_odd_element(const NumericalSemigroup& s);

}  // namespace numsg
