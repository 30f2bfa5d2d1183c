#pragma once

#include "mb/chain/constructions.hpp"
#include "mb/report/record.hpp"

#include <functional>
#include <optional>
#include <random>

namespace mb {

/// A monotone map α: [m] → [n], stored as (α(0), …, α(m)).
using Monotone = std::vector<std::size_t>;

/// Simplicial chain complex truncated at level N.
struct SimplicialChainComplex {
  Ground ground = Ground::Q;
  std::size_t N = 0;
  std::vector<ChainComplex> levels;          // X_0..X_N
  std::vector<std::vector<ChainMap>> faces;  // faces[n][i]: X_n → X_{n−1}; faces[0] is empty
  std::vector<std::vector<ChainMap>> degens; // degens[n][j]: X_n → X_{n+1}, n < N

  /// X(α): X_n → X_m for α: [m] → [n], through its epi-mono factorization.
  ChainMap op(const Monotone& alpha, std::size_t n) const;
};

std::optional<std::string> simplicial_violation(const SimplicialChainComplex& x);
bool check_simplicial_identities(const SimplicialChainComplex& x);

SimplicialChainComplex constant_simplicial(const ChainComplex& a, std::size_t n);
SimplicialChainComplex zero_simplicial(Ground ground, std::size_t n);

struct SimplicialMap {
  SimplicialChainComplex src, tgt;
  std::vector<ChainMap> at;  // at[n]: X_n → Y_n
};
std::optional<std::string> simplicial_map_violation(const SimplicialMap& f);
SimplicialMap simplicial_identity(const SimplicialChainComplex& x);
SimplicialMap simplicial_compose(const SimplicialMap& g, const SimplicialMap& f);

/// Monotone surjections [n] ↠ [k] for all k, ordered by k and then lexicographically.
std::vector<Monotone> surjections(std::size_t n);
/// α = ι∘σ with σ surjective and ι injective.
std::pair<Monotone, Monotone> epi_mono(const Monotone& alpha, std::size_t n);

/// τ(X)_n = ⊕_{[n]↠[k]} X_k and the counit τ(X) → X.
struct Tau {
  SimplicialChainComplex tau;
  SimplicialMap counit;
};
Tau tau(const SimplicialChainComplex& x);
SimplicialMap tau(const SimplicialMap& f, const Tau& src, const Tau& tgt);

/// Γ of random complexes C_0..C_N with ∂ random on odd levels and zero on even ones.
SimplicialChainComplex random_simplicial(std::mt19937_64& rng, Ground ground, std::size_t n, std::size_t top = 2, std::size_t max_dim = 2);

/// Dold–Kan Γ of a vertical complex C_0 ← C_1 ← … ← C_N of chain complexes (∂∂ = 0).
SimplicialChainComplex dold_kan(const std::vector<ChainComplex>& c, const std::vector<ChainMap>& boundary);

/// Normalized Moore totalization: columns X_p / degenerates, D = d + (−1)^q Σ(−1)^i d_i.
/// Exact in total degrees ≤ N−1.
struct Realization {
  ChainComplex complex;
  std::vector<ChainCokernel> columns;
  std::size_t exact_up_to = 0;
};
Realization realize_full(const SimplicialChainComplex& x);
ChainComplex realize(const SimplicialChainComplex& x);
ChainMap realize(const SimplicialMap& f);
ChainMap realize(const SimplicialMap& f, const Realization& src, const Realization& tgt);

/// ‖X‖ = |τX| with the realized counit ‖X‖ → |X|.
struct FatRealization {
  ChainComplex fat;
  ChainMap comparison;
};
FatRealization fat_realize(const SimplicialChainComplex& x);

/// Normalized chains on Δ[n]; δ(α) for α: [m] → [n].
ChainComplex simplex_chains(Ground ground, std::size_t n);
ChainMap simplex_chains_map(Ground ground, const Monotone& alpha, std::size_t n);

/// The coend X ⊗_Δ δ over Δ_{≤N} (N ≤ 3) and the map x ↦ [x ⊗ ι_p] from the totalization.
struct CoendRealization {
  ChainComplex complex;
  ChainMap from_totalization;
};
CoendRealization coend_realize(const SimplicialChainComplex& x);

struct LatchingData {
  std::size_t n = 0;
  ChainComplex object;
  ChainMap map;  // L_n(X) → X_n
};
/// L_n(X) presented as ⊕_j X_{n−1} modulo s_i s_j = s_{j+1} s_i.
LatchingData latching(const SimplicialChainComplex& x, std::size_t n);
bool is_reedy_cofibrant(const SimplicialChainComplex& x, std::size_t up_to);
/// X_n ⊔_{L_n X} L_n Y → Y_n is a cofibration for n ≤ up_to.
bool is_reedy_cofibration(const SimplicialMap& f, std::size_t up_to);

/// Degreewise cofibrant and ‖X‖ → |X| a quasi-iso in degrees ≤ up_to.
bool is_tau_cofibrant(const SimplicialChainComplex& x, std::size_t up_to);
/// Degreewise cofibration and ‖Y‖ ⊔_{‖X‖} |X| → |Y| a quasi-iso in degrees ≤ up_to.
bool is_tau_cofibration(const SimplicialMap& f, std::size_t up_to);

/// Augmentation ε: X_0 → X_{−1} with top-index extra degeneracies h_n = s_{n+1}: X_n → X_{n+1}, n ≥ −1.
struct SplitAugmentation {
  SimplicialChainComplex base;
  ChainComplex bottom;
  ChainMap eps;
  std::vector<ChainMap> extra;  // extra[n+1] = h_n
};
/// The first violated identity, named with its (level, index).
std::optional<std::string> split_violation(const SplitAugmentation& s);
bool check_split_augmented(const SplitAugmentation& s);
/// |X| → X_{−1} and ‖X‖ → X_{−1} are quasi-isos in degrees ≤ N−1.
CheckReport contraction_homology(const SplitAugmentation& s);
/// The augmentation of the totalization, ε on column 0.
ChainMap realized_augmentation(const SplitAugmentation& s, const Realization& r);

SplitAugmentation constant_split(const ChainComplex& a, std::size_t n);
/// Décalage: X'_n = X_{n+1} keeping d_0..d_n, ε = d_0, h_n = s_{n+1}. Needs N ≥ 1; truncates at N−1.
SplitAugmentation decalage(const SimplicialChainComplex& x);

}  // namespace mb
