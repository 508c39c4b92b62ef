#pragma once

#include <array>
#include <string>
#include <vector>

#include "ggf/types.hpp"

namespace ggf {

/// Symplectic form sigma((k1,l1),(k2,l2)) = l1 k2 - l2 k1 mod L.
inline int symplectic_form(PhasePoint z1, PhasePoint z2, int L) {
  return mod(static_cast<long>(z1.l) * z2.k - static_cast<long>(z2.l) * z1.k, L);
}

/// A subgroup Lambda of Z_L x Z_L with its full enumeration. Separable
/// lattices a Z_L x b Z_L (a|L, b|L) keep their parameters for closed-form
/// adjoints and printing; anything else is handled through a generator pair.
/// Points are listed in lexicographic order (k ascending, then l), which is
/// also the summation order used by every lattice sum in the library.
class Lattice {
 public:
  enum class Kind { Separable, General };

  static Lattice separable(int L, int a, int b);
  static Lattice from_generators(int L, PhasePoint g1, PhasePoint g2);
  static Lattice full(int L) { return separable(L, 1, 1); }

  int ambient() const { return L_; }
  Kind kind() const { return kind_; }
  int separable_a() const { return a_; }
  int separable_b() const { return b_; }
  const std::array<PhasePoint, 2>& generators() const { return gens_; }

  const std::vector<PhasePoint>& points() const { return points_; }
  int card() const { return static_cast<int>(points_.size()); }

  /// card(Lambda)/L, the finite analogue of the reciprocal covolume.
  double redundancy() const { return static_cast<double>(card()) / L_; }

  bool contains(PhasePoint z) const { return membership_[index(reduce(z, L_))]; }

  /// The adjoint lattice: all z whose time-frequency shift commutes with
  /// every pi(lambda), i.e. sigma(z, lambda) = 0 mod L for all lambda.
  /// Satisfies card(Lambda) * card(adjoint) = L^2.
  Lattice adjoint() const;

  /// "sep:a,b" or "gen:(k1,l1);(k2,l2)".
  std::string to_string() const;

  friend bool operator==(const Lattice& x, const Lattice& y) {
    return x.L_ == y.L_ && x.points_ == y.points_;
  }

 private:
  Lattice() = default;
  void finalize(std::vector<PhasePoint> pts);
  std::size_t index(PhasePoint z) const { return static_cast<std::size_t>(z.k) * L_ + z.l; }

  int L_ = 0;
  Kind kind_ = Kind::General;
  int a_ = 0, b_ = 0;
  std::array<PhasePoint, 2> gens_{};
  std::vector<PhasePoint> points_;
  std::vector<char> membership_;
};

}  // namespace ggf
