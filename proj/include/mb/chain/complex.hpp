#pragma once

#include "mb/linalg/sparse.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mb {

enum class Ground { Q, Z };

std::string to_string(Ground g);

/// Bounded nonnegatively graded complex of finite free modules.
/// d(n): degree n → degree n−1, defined (possibly as an empty matrix) for every n ≥ 0.
class ChainComplex {
 public:
  ChainComplex();
  explicit ChainComplex(Ground ground);
  /// `d[k]` is the differential from degree k+1 to degree k. Validates d² = 0.
  ChainComplex(Ground ground, std::vector<std::size_t> dims, std::vector<SparseMatrix> d);

  static ChainComplex zero(Ground ground) { return ChainComplex(ground); }
  /// R^rank concentrated in degree n.
  static ChainComplex sphere(Ground ground, std::size_t n, std::size_t rank = 1);
  /// R in degrees n and n−1 with identity differential.
  static ChainComplex disk(Ground ground, std::size_t n);

  Ground ground() const { return data_->ground; }
  /// Number of stored degrees; degree `length()` and above are zero.
  std::size_t length() const { return data_->dims.size(); }
  std::size_t dim(std::size_t n) const { return n < length() ? data_->dims[n] : 0; }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  const SparseMatrix& d(std::size_t n) const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Drops trailing zero degrees.
  ChainComplex trimmed() const;
  /// Brutal truncation: keeps degrees ≤ max_degree.
  ChainComplex truncated(std::size_t max_degree) const;

  bool operator==(const ChainComplex& other) const;
  bool operator!=(const ChainComplex& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  struct Data {
    Ground ground = Ground::Q;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> d;  // d[n] for n = 0..length
  };
  std::shared_ptr<const Data> data_;
};

class ChainMap {
 public:
  ChainMap() = default;
  /// Validates shapes and the chain-map equation.
  ChainMap(ChainComplex src, ChainComplex tgt, std::vector<SparseMatrix> components);
  /// Skips validation; for internal constructions already known to be chain maps.
  static ChainMap trusted(ChainComplex src, ChainComplex tgt, std::vector<SparseMatrix> components);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& tgt() const { return tgt_; }
  std::size_t length() const { return f_.size(); }
  /// Component in degree n (tgt.dim(n) × src.dim(n)).
  const SparseMatrix& at(std::size_t n) const;
  const std::vector<SparseMatrix>& components() const { return f_; }

  /// Empty when valid, otherwise the first violated equation.
  std::string violation() const;

 private:
  ChainComplex src_, tgt_;
  std::vector<SparseMatrix> f_;
};

ChainMap chain_identity(const ChainComplex& x);
ChainMap chain_zero(const ChainComplex& src, const ChainComplex& tgt);
ChainMap chain_compose(const ChainMap& g, const ChainMap& f);  // g ∘ f
ChainMap chain_add(const ChainMap& f, const ChainMap& g);
ChainMap chain_sub(const ChainMap& f, const ChainMap& g);
ChainMap chain_negate(const ChainMap& f);
ChainMap chain_scale(const ChainMap& f, const Rational& c);
bool chain_equal(const ChainMap& f, const ChainMap& g);
bool chain_is_iso(const ChainMap& f);
bool chain_is_injective(const ChainMap& f);
bool chain_is_surjective(const ChainMap& f);
std::optional<ChainMap> chain_inverse(const ChainMap& f);

ChainComplex chain_direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap chain_direct_sum(const ChainMap& f, const ChainMap& g);
ChainMap chain_inj1(const ChainComplex& a, const ChainComplex& b);
ChainMap chain_inj2(const ChainComplex& a, const ChainComplex& b);
ChainMap chain_proj1(const ChainComplex& a, const ChainComplex& b);
ChainMap chain_proj2(const ChainComplex& a, const ChainComplex& b);
/// [f, g]: A ⊕ B → C.
ChainMap chain_copair(const ChainMap& f, const ChainMap& g);
/// (f, g): A → B ⊕ C.
ChainMap chain_pair(const ChainMap& f, const ChainMap& g);

/// Truncates both ends to degrees ≤ max_degree.
ChainMap chain_truncated(const ChainMap& f, std::size_t max_degree);

}  // namespace mb
