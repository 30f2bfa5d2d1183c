#pragma once

#include "mb/chain/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mb {

/// X ↣ Y → Y/X.
struct CofibreSeq {
  ChainMap i;
  ChainMap q;
};
/// Cofibre sequence of a cofibration (quotient via chain_cokernel).
CofibreSeq cofibre_sequence(const ChainMap& i);
/// Empty when q∘i = 0, q surjective and ker q = im i; otherwise what failed.
std::string cofibre_violation(const CofibreSeq& s);

struct Implication {
  bool hypothesis = false;
  bool conclusion = false;
  bool ok() const { return !hypothesis || conclusion; }
};

struct SaturationReport {
  bool alpha = false, beta = false, gamma = false;
  Implication ab_gives_g, ag_gives_b, bg_gives_a;
  bool ok() const { return ab_gives_g.ok() && ag_gives_b.ok() && bg_gives_a.ok(); }
};
/// Ladder top → bottom with α on subobjects, β on totals, γ on quotients. Throws on a non-commuting ladder.
SaturationReport saturation_check(const CofibreSeq& top, const CofibreSeq& bottom, const ChainMap& alpha, const ChainMap& beta,
                                  const ChainMap& gamma, std::size_t up_to);
/// γ induced by (α, β) on quotients.
ChainMap induced_on_quotients(const CofibreSeq& top, const CofibreSeq& bottom, const ChainMap& beta);

/// Σ detects quasi-isos: first = is_quasi_iso(f, N), second = is_quasi_iso(Σf, N+1).
std::pair<bool, bool> suspension_conservativity(const ChainMap& f, std::size_t n);

/// Cofibration with acyclic quotient is acyclic.
Implication condition_a(const ChainMap& i, std::size_t up_to);
/// h: Y → Y' under X (h∘i = i'); quotient map weq ⇒ h weq.
Implication condition_b(const ChainMap& i, const ChainMap& i2, const ChainMap& h, std::size_t up_to);

/// Square  A -f-> B, A -g-> C, B -k-> D, C -l-> D  with f, l cofibrations and k∘f = l∘g.
struct Square {
  ChainMap f, g, k, l;
};
struct HomotopyPushoutReport {
  bool comparison_weq = false;       // C ∪_A B → D
  bool parallel_cofibre_weq = false; // B/A → D/C
  bool ok() const { return comparison_weq == parallel_cofibre_weq; }
};
HomotopyPushoutReport homotopy_pushout_check(const Square& s, std::size_t up_to);
/// Canonical map from the pushout of (f, g) to D.
ChainMap pushout_comparison(const Square& s);

/// f□g: X⊗Z ∪_{X⊗V} Y⊗V → Y⊗Z for f: X ↣ Y, g: V → Z.
ChainMap pushout_product(const ChainMap& f, const ChainMap& g);
bool pushout_product_comparison(const ChainMap& f, const ChainMap& g);

/// Back square X → Y (cofibration f), X → T (g); front likewise; comparisons a, b, c.
struct GluingCube {
  ChainMap f, g, f2, g2;
  ChainMap a, b, c;
};
/// Induced map between the two pushouts.
ChainMap gluing_map(const GluingCube& cube);
/// Throws std::invalid_argument when the preconditions fail.
bool gluing_check(const GluingCube& cube, std::size_t up_to);

/// Per-property tally for the seeded suite.
struct ExcisiveTally {
  std::string property;
  std::size_t instances = 0;
  std::size_t hypothesis_held = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing instance
};
/// Properties: suspension, saturation, condition_a, condition_b, homotopy_pushout, pushout_product, gluing.
std::vector<ExcisiveTally> run_excisive_suite(Ground ground, std::size_t n, std::uint64_t seed, std::size_t count);

}  // namespace mb
