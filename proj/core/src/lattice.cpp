#include "ggf/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace ggf {

namespace {

// A subgroup of Z_L x Z_L needs at most two generators: one hitting the
// smallest positive time-shift stride, one spanning the pure frequency part.
std::array<PhasePoint, 2> find_generators(const std::vector<PhasePoint>& pts, int L) {
  int d = L;  // gcd of all k-coordinates and L
  int b = L;  // gcd of l-coordinates over pure-frequency elements and L
  for (const auto& p : pts) {
    d = std::gcd(d, p.k);
    if (p.k == 0) b = std::gcd(b, p.l);
  }
  PhasePoint g1{0, 0};
  for (const auto& p : pts) {
    if (p.k == d % L) {
      g1 = p;
      break;
    }
  }
  return {g1, PhasePoint{0, b % L}};
}

}  // namespace

void Lattice::finalize(std::vector<PhasePoint> pts) {
  std::sort(pts.begin(), pts.end());
  points_ = std::move(pts);
  membership_.assign(static_cast<std::size_t>(L_) * L_, 0);
  for (const auto& p : points_) membership_[index(p)] = 1;
}

Lattice Lattice::separable(int L, int a, int b) {
  if (L < 2) throw ParseError("lattice: ambient dimension must be at least 2");
  if (a < 1 || b < 1 || L % a != 0 || L % b != 0) {
    throw ParseError("lattice: separable parameters must be positive divisors of L");
  }
  Lattice lat;
  lat.L_ = L;
  lat.kind_ = Kind::Separable;
  lat.a_ = a;
  lat.b_ = b;
  lat.gens_ = {PhasePoint{a % L, 0}, PhasePoint{0, b % L}};
  std::vector<PhasePoint> pts;
  pts.reserve(static_cast<std::size_t>(L / a) * (L / b));
  for (int k = 0; k < L / a; ++k) {
    for (int l = 0; l < L / b; ++l) {
      pts.push_back({a * k, b * l});
    }
  }
  lat.finalize(std::move(pts));
  return lat;
}

Lattice Lattice::from_generators(int L, PhasePoint g1, PhasePoint g2) {
  if (L < 2) throw ParseError("lattice: ambient dimension must be at least 2");
  g1 = reduce(g1, L);
  g2 = reduce(g2, L);
  Lattice lat;
  lat.L_ = L;
  lat.kind_ = Kind::General;
  lat.gens_ = {g1, g2};
  // Closure under addition mod L, grown breadth-first from the generators.
  std::vector<char> seen(static_cast<std::size_t>(L) * L, 0);
  std::vector<PhasePoint> pts;
  std::vector<PhasePoint> queue{PhasePoint{0, 0}};
  seen[0] = 1;
  while (!queue.empty()) {
    PhasePoint p = queue.back();
    queue.pop_back();
    pts.push_back(p);
    for (PhasePoint g : {g1, g2}) {
      PhasePoint q = add(p, g, L);
      auto idx = static_cast<std::size_t>(q.k) * L + q.l;
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(q);
      }
    }
  }
  lat.finalize(std::move(pts));
  // Detect separable structure so adjoints and printing use the closed form.
  int a = L, b = L;
  for (const auto& p : lat.points_) {
    a = std::gcd(a, p.k);
    b = std::gcd(b, p.l);
  }
  if (static_cast<long>(lat.card()) * a * b == static_cast<long>(L) * L) {
    return separable(L, a, b);
  }
  return lat;
}

Lattice Lattice::adjoint() const {
  if (kind_ == Kind::Separable) {
    return separable(L_, L_ / b_, L_ / a_);
  }
  std::vector<PhasePoint> pts;
  for (int k = 0; k < L_; ++k) {
    for (int l = 0; l < L_; ++l) {
      PhasePoint z{k, l};
      if (symplectic_form(z, gens_[0], L_) == 0 && symplectic_form(z, gens_[1], L_) == 0) {
        pts.push_back(z);
      }
    }
  }
  Lattice adj;
  adj.L_ = L_;
  adj.kind_ = Kind::General;
  adj.gens_ = find_generators(pts, L_);
  adj.finalize(std::move(pts));
  int a = L_, b = L_;
  for (const auto& p : adj.points_) {
    a = std::gcd(a, p.k);
    b = std::gcd(b, p.l);
  }
  if (static_cast<long>(adj.card()) * a * b == static_cast<long>(L_) * L_) {
    return separable(L_, a, b);
  }
  return adj;
}

std::string Lattice::to_string() const {
  if (kind_ == Kind::Separable) {
    return "sep:" + std::to_string(a_) + "," + std::to_string(b_);
  }
  return "gen:" + ggf::to_string(gens_[0]) + ";" + ggf::to_string(gens_[1]);
}

}  // namespace ggf
