#pragma once

#include "mb/linalg/fpab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mb {

/// A ring that is free of finite rank over ℤ, given by structure constants on a basis s_0..s_{r−1}.
struct RingPresentation {
  std::string name;
  std::size_t rank = 0;
  IntMatrix mult;  // rank × rank²; column i·rank + j holds s_i·s_j
  IntVector unit;

  IntVector product(const IntVector& a, const IntVector& b) const;
  IntVector basis(std::size_t i) const;
  /// Left multiplication by s_i as a matrix on ℤ^rank.
  IntMatrix left_mult(std::size_t i) const;
};

std::optional<std::string> ring_violation(const RingPresentation& s);
RingPresentation ring_z();
/// ℤ×ℤ on the orthogonal idempotents (1,0), (0,1).
RingPresentation ring_zxz();
/// M₂(ℤ) on matrix units, E_ij at index 2i + j.
RingPresentation ring_m2z();
/// ℤ[C₂] on {1, g}.
RingPresentation ring_c2();
/// Z | ZxZ | M2Z | C2. Throws std::invalid_argument otherwise.
RingPresentation ring_preset(const std::string& name);
RingPresentation ring_opposite(const RingPresentation& s);

/// Left S-module: `action[i]` is the action of s_i on generators.
struct SModule {
  RingPresentation ring;
  FpGroup carrier;
  std::vector<IntMatrix> action;
  std::string label;
};

std::optional<std::string> module_violation(const SModule& m);
SModule free_module(const RingPresentation& s, std::size_t n);
/// An abelian group as a ℤ-module.
SModule z_module(const FpGroup& g);
/// A ⊕ B over ℤ×ℤ with (1,0) acting on A and (0,1) on B.
SModule zxz_module(const FpGroup& a, const FpGroup& b, std::string label);

/// P = Sⁿ·e for an idempotent e ∈ Mₙ(S), acting on row vectors from the right.
struct ProjectiveSummand {
  RingPresentation ring;
  std::size_t n = 0;
  std::vector<IntVector> e;  // entry (a, b) at a·n + b, in ring coordinates
  std::string label;
};

/// P resolved to a ℤ-basis: P is free abelian of rank p, and `action[i]` is s_i acting on that basis.
struct ResolvedProjective {
  std::size_t p = 0;
  IntMatrix basis;  // (rank·n) × p, columns in Sⁿ
  std::vector<IntMatrix> action;
};

std::optional<std::string> idempotent_violation(const ProjectiveSummand& p);
/// Throws std::invalid_argument if e is not idempotent.
ResolvedProjective resolve(const ProjectiveSummand& p);
SModule as_module(const ProjectiveSummand& p);

/// (S, P) presets: Z:Z, Z:Z2, ZxZ:e1 (first factor, not a generator), ZxZ:S, M2Z:col (S·E₀₀), C2:S.
ProjectiveSummand projective_preset(const std::string& ring, const std::string& p);
/// Modules used by the round trip for a ring: the FPAb battery for ℤ, split pairs for ℤ×ℤ.
std::vector<SModule> module_battery(const RingPresentation& s);

}  // namespace mb
