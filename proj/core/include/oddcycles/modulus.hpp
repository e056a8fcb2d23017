#pragma once

#include <compare>
#include <cstdint>

namespace oddcycles {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// An odd modulus q > 1, the ambient modulus for every cycle computation.
///
/// q is capped below 2^63 so that q + a never overflows 64 bits for a < q;
/// products of two residues are formed in 128-bit arithmetic.
class OddModulus {
 public:
  static constexpr u64 kMax = (u64{1} << 63) - 1;

  /// Throws DomainError unless q is odd and 1 < q <= kMax.
  explicit OddModulus(u64 q);

  constexpr u64 value() const noexcept { return q_; }

  /// Number of odd residues in (0, q), i.e. |G_q|.
  constexpr u64 odd_count() const noexcept { return (q_ - 1) / 2; }

  /// True when a is an odd integer in (0, q).
  constexpr bool contains(u64 a) const noexcept {
    return a > 0 && a < q_ && (a & 1) != 0;
  }

  /// Throws DomainError unless contains(a).
  void require_residue(u64 a) const;

  friend constexpr auto operator<=>(const OddModulus&, const OddModulus&) = default;

 private:
  u64 q_;
};

}  // namespace oddcycles
