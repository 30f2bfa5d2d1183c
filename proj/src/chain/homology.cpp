#include "mb/chain/homology.hpp"

#include "mb/linalg/lattice.hpp"
#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

std::size_t betti(const ChainComplex& c, std::size_t n) {
  std::size_t dn = c.dim(n);
  if (dn == 0) return 0;
  std::size_t r_out = (n >= 1 && c.dim(n - 1)) ? rank(c.d(n)) : 0;
  std::size_t r_in = c.dim(n + 1) ? rank(c.d(n + 1)) : 0;
  return dn - r_out - r_in;
}

HomologyPresentation homology_presentation(const ChainComplex& c, std::size_t n) {
  const std::size_t dn = c.dim(n);
  HomologyPresentation out;
  if (dn == 0) {
    out.group = FpGroup::free(0);
    out.cycles = IntMatrix(0, 0);
    return out;
  }
  out.cycles = (n >= 1 && c.dim(n - 1)) ? integer_kernel(c.d(n).to_int_dense()) : IntMatrix::identity(dn);
  IntMatrix boundaries = c.dim(n + 1) ? c.d(n + 1).to_int_dense() : IntMatrix(dn, 0);
  auto rel = LatticeSolver(out.cycles).solve(boundaries);
  if (!rel) throw std::logic_error("boundaries outside the cycle lattice");
  out.group = FpGroup::presented(*rel);
  return out;
}

FpCanonical homology(const ChainComplex& c, std::size_t n) {
  if (c.ground() == Ground::Q) return FpCanonical{betti(c, n), {}};
  return fp_canonical(homology_presentation(c, n).group);
}

std::string homology_label(const ChainComplex& c, std::size_t n) {
  if (c.ground() == Ground::Z) return homology(c, n).str();
  const std::size_t b = betti(c, n);
  return b == 0 ? "0" : b == 1 ? "Q" : "Q^" + std::to_string(b);
}

FpMorphism induced_on_homology(const ChainMap& f, std::size_t n) {
  auto hx = homology_presentation(f.src(), n);
  auto hy = homology_presentation(f.tgt(), n);
  IntMatrix m(hy.group.gens, hx.group.gens);
  if (hx.group.gens && hy.group.gens) {
    IntMatrix images = f.at(n).to_int_dense() * hx.cycles;
    auto coords = LatticeSolver(hy.cycles).solve(images);
    if (!coords) throw std::logic_error("chain map does not send cycles to cycles");
    m = *coords;
  }
  return FpMorphism{hx.group, hy.group, m};
}

namespace {

bool rational_iso_in_degree(const ChainMap& f, std::size_t n) {
  const ChainComplex& x = f.src();
  const ChainComplex& y = f.tgt();
  if (betti(x, n) != betti(y, n)) return false;
  if (y.dim(n) == 0) return true;
  // Surjectivity: f(Z_X) + B_Y = Z_Y.
  RatMatrix zx = (n >= 1 && x.dim(n - 1) && x.dim(n)) ? nullspace(x.d(n).to_dense()) : RatMatrix::identity(x.dim(n));
  RatMatrix image = x.dim(n) ? f.at(n).to_dense() * zx : RatMatrix(y.dim(n), 0);
  RatMatrix by = y.dim(n + 1) ? y.d(n + 1).to_dense() : RatMatrix(y.dim(n), 0);
  std::size_t zy = y.dim(n) - ((n >= 1 && y.dim(n - 1)) ? rank(y.d(n)) : 0);
  return rank(RatMatrix::hstack(image, by)) == zy;
}

}  // namespace

std::optional<std::size_t> quasi_iso_failure(const ChainMap& f, std::size_t up_to) {
  for (std::size_t n = 0; n <= up_to; ++n) {
    bool ok = f.src().ground() == Ground::Q ? rational_iso_in_degree(f, n) : fp_is_iso(induced_on_homology(f, n));
    if (!ok) return n;
  }
  return std::nullopt;
}

bool is_quasi_iso(const ChainMap& f, std::size_t up_to) { return !quasi_iso_failure(f, up_to).has_value(); }

bool is_acyclic(const ChainComplex& c, std::size_t up_to) {
  for (std::size_t n = 0; n <= up_to; ++n) {
    if (!homology(c, n).is_zero()) return false;
  }
  return true;
}

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (std::size_t n = 0; n < c.length(); ++n) chi += (n % 2 ? -1L : 1L) * static_cast<long>(c.dim(n));
  return chi;
}

}  // namespace mb
