#pragma once

#include "mb/chain/complex.hpp"

#include <limits>

namespace mb {

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Basis bookkeeping for X ⊗ Y. In degree n the basis runs over p = |x|
/// ascending, then x, then y; degrees above `cap` are dropped.
class TensorLayout {
 public:
  TensorLayout(const std::vector<std::size_t>& dx, const std::vector<std::size_t>& dy, std::size_t cap = kNoCap);

  std::size_t length() const { return dims_.size(); }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// Index of x⊗y inside degree p+q, x ∈ X_p, y ∈ Y_q.
  std::size_t index(std::size_t p, std::size_t x, std::size_t q, std::size_t y) const {
    return offset_[p + q][p] + x * dy_[q] + y;
  }
  bool has(std::size_t p, std::size_t q) const { return p < dx_.size() && q < dy_.size() && p + q < dims_.size(); }
  std::size_t dx(std::size_t p) const { return p < dx_.size() ? dx_[p] : 0; }
  std::size_t dy(std::size_t q) const { return q < dy_.size() ? dy_[q] : 0; }

 private:
  std::vector<std::size_t> dx_, dy_, dims_;
  std::vector<std::vector<std::size_t>> offset_;
};

/// Koszul tensor product: d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy.
ChainComplex chain_tensor(const ChainComplex& x, const ChainComplex& y, std::size_t cap = kNoCap);
/// Degree-zero maps, so no sign: (f⊗g)(x⊗y) = fx ⊗ gy.
ChainMap chain_tensor(const ChainMap& f, const ChainMap& g, std::size_t cap = kNoCap);
/// x⊗y ↦ (−1)^{|x||y|} y⊗x.
ChainMap chain_symmetry(const ChainComplex& x, const ChainComplex& y, std::size_t cap = kNoCap);
/// (X⊗Y)⊗Z → X⊗(Y⊗Z); a permutation of bases.
ChainMap chain_associator(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z, std::size_t cap = kNoCap);
ChainMap chain_associator_inv(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z, std::size_t cap = kNoCap);

/// The ground ring concentrated in degree 0.
ChainComplex chain_unit(Ground ground);

}  // namespace mb
