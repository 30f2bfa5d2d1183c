#pragma once

#include "mb/chain/complex.hpp"

#include <random>

namespace mb {

using Rng = std::mt19937_64;

struct RandomComplexSpec {
  Ground ground = Ground::Q;
  std::size_t top = 4;      // highest degree
  std::size_t max_dim = 3;  // per degree, before conjugation
  bool positive = false;    // keep degree 0 empty
  bool acyclic = false;     // disks only
};

/// Sum of spheres and disks conjugated by random invertible (unimodular over ℤ) matrices.
ChainComplex random_complex(Rng& rng, const RandomComplexSpec& spec);
/// Random invertible matrix of size n, unimodular when ground is ℤ.
SparseMatrix random_invertible(Rng& rng, std::size_t n, Ground ground);
/// Degreewise random change of basis: returns an isomorphism X → X'.
ChainMap random_iso_from(Rng& rng, const ChainComplex& x);
/// Random element of the solution space of f∘d = d∘f, coefficients in [−2, 2].
ChainMap random_chain_map(Rng& rng, const ChainComplex& x, const ChainComplex& y);
/// Quasi-isomorphism out of X built from acyclic summands and changes of basis.
ChainMap random_quasi_iso(Rng& rng, const ChainComplex& x);

/// Twisted sum X ⊕_t Q: d(x, q) = (dx + tq, dq) with d t + t d = 0.
struct TwistedSum {
  ChainComplex total;
  ChainMap incl;     // X ↣ total
  ChainMap quot;     // total → Q
  std::vector<SparseMatrix> twist;  // twist[n]: Q_n → X_{n−1}
};
TwistedSum twisted_sum(const ChainComplex& x, const ChainComplex& q, const std::vector<SparseMatrix>& twist);
/// Random valid twist t (t[n]: Q_n → X_{n−1}).
std::vector<SparseMatrix> random_twist(Rng& rng, const ChainComplex& x, const ChainComplex& q);

}  // namespace mb
