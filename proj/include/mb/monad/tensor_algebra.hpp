#pragma once

#include "mb/monad/monad.hpp"

#include <map>
#include <mutex>

namespace mb {

/// A basis tensor x_{a1}⊗…⊗x_{ak}: each letter is (degree, index in X_degree).
using Word = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Basis of the reduced tensor algebra ⊕_{k≥1} X^{⊗k} cut off above degree `cap`.
struct WordTable {
  ChainComplex x;
  std::size_t cap = 0;
  std::vector<std::vector<Word>> words;  // words[n]: total degree n, lexicographic
  std::vector<std::map<Word, std::size_t>> index;
  ChainComplex tx;

  std::size_t at(const Word& w) const;
};

WordTable build_word_table(const ChainComplex& x, std::size_t cap);

/// Free associative algebra monad on positively graded complexes with (⊕, 0) as monoidal structure.
/// Degrees above the cap are dropped, which commutes with μ, η, σ because every map preserves degree.
/// σ_{X,Y}: X ⊕ T(Y) → T(X⊕Y) sends x to the one-letter word and T(Y) along T(inj₂).
class TensorAlgebraMonad final : public StrongMonad<ChainContext> {
 public:
  explicit TensorAlgebraMonad(Ground ground = Ground::Q, std::size_t cap = 4);
  std::string name() const override { return "tensoralg"; }
  const ChainContext& context() const override { return ctx_; }
  std::size_t cap() const { return cap_; }
  Object apply(const Object& x) const override;
  Morphism apply(const Morphism& f) const override;
  Morphism mu(const Object& x) const override;
  Morphism eta(const Object& x) const override;
  Morphism sigma(const Object& x, const Object& y) const override;
  /// Nothing in degree 0 and nothing above the cap.
  bool accepts(const Object& x) const override;

  std::shared_ptr<const WordTable> table(const ChainComplex& x) const;

 private:
  void require(const ChainComplex& x) const;
  ChainContext ctx_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::vector<std::pair<ChainComplex, std::shared_ptr<const WordTable>>> cache_;
};

}  // namespace mb
