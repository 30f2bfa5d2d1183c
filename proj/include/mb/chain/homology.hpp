#pragma once

#include "mb/chain/complex.hpp"
#include "mb/linalg/fpab.hpp"

#include <optional>
#include <string>

namespace mb {

/// H_n as a canonical form. Over ℚ only the rank is populated.
FpCanonical homology(const ChainComplex& c, std::size_t n);
std::size_t betti(const ChainComplex& c, std::size_t n);
/// "0", "Q^2", "Z/2+Z" style label; over ℚ only the rank is printed.
std::string homology_label(const ChainComplex& c, std::size_t n);

/// H_n over ℤ as an explicit presentation on a basis of cycles.
struct HomologyPresentation {
  FpGroup group;
  IntMatrix cycles;  // dim C_n × rank Z_n, columns a ℤ-basis of the cycles
};
HomologyPresentation homology_presentation(const ChainComplex& c, std::size_t n);
/// Induced map H_n(f) over ℤ.
FpMorphism induced_on_homology(const ChainMap& f, std::size_t n);

/// H_n(f) is an isomorphism for every n ≤ up_to.
bool is_quasi_iso(const ChainMap& f, std::size_t up_to);
/// First degree where H_n(f) fails to be invertible, if any.
std::optional<std::size_t> quasi_iso_failure(const ChainMap& f, std::size_t up_to);
bool is_acyclic(const ChainComplex& c, std::size_t up_to);
/// Σ (−1)^n dim C_n.
long euler_characteristic(const ChainComplex& c);

}  // namespace mb
