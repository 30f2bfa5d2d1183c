#include "mb/chain/complex.hpp"

#include "mb/linalg/lattice.hpp"
#include "mb/linalg/rational.hpp"

#include <stdexcept>

namespace mb {

namespace {

const SparseMatrix& empty_matrix() {
  static const SparseMatrix m(0, 0);
  return m;
}

std::size_t joint_length(const ChainComplex& a, const ChainComplex& b) { return std::max(a.length(), b.length()); }

std::vector<SparseMatrix> normalized(const ChainComplex& src, const ChainComplex& tgt, std::vector<SparseMatrix> f) {
  const std::size_t len = joint_length(src, tgt);
  for (std::size_t n = len; n < f.size(); ++n) {
    if (f[n].rows() != 0 || f[n].cols() != 0) throw std::invalid_argument("chain map: component beyond both complexes");
  }
  f.resize(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (f[n].rows() == 0 && f[n].cols() == 0 && (tgt.dim(n) || src.dim(n))) f[n] = SparseMatrix(tgt.dim(n), src.dim(n));
  }
  return f;
}

}  // namespace

ChainMap::ChainMap(ChainComplex src, ChainComplex tgt, std::vector<SparseMatrix> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), f_(normalized(src_, tgt_, std::move(components))) {
  if (src_.ground() != tgt_.ground()) throw std::invalid_argument("chain map between different grounds");
  std::string v = violation();
  if (!v.empty()) throw std::invalid_argument("not a chain map: " + v);
}

ChainMap ChainMap::trusted(ChainComplex src, ChainComplex tgt, std::vector<SparseMatrix> components) {
  ChainMap m;
  m.f_ = normalized(src, tgt, std::move(components));
  m.src_ = std::move(src);
  m.tgt_ = std::move(tgt);
  return m;
}

const SparseMatrix& ChainMap::at(std::size_t n) const { return n < f_.size() ? f_[n] : empty_matrix(); }

std::string ChainMap::violation() const {
  for (std::size_t n = 0; n < f_.size(); ++n) {
    if (f_[n].rows() != tgt_.dim(n) || f_[n].cols() != src_.dim(n)) return "component " + std::to_string(n) + " has the wrong shape";
    if (src_.ground() == Ground::Z && !f_[n].is_integral()) return "component " + std::to_string(n) + " is not integral";
  }
  for (std::size_t n = 1; n < f_.size(); ++n) {
    if (src_.dim(n) == 0 || tgt_.dim(n - 1) == 0) continue;
    if (f_[n - 1] * src_.d(n) != tgt_.d(n) * f_[n]) return "f∘d ≠ d∘f in degree " + std::to_string(n);
  }
  return {};
}

ChainMap chain_identity(const ChainComplex& x) {
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < x.length(); ++n) f.push_back(SparseMatrix::identity(x.dim(n)));
  return ChainMap::trusted(x, x, std::move(f));
}

ChainMap chain_zero(const ChainComplex& src, const ChainComplex& tgt) { return ChainMap::trusted(src, tgt, {}); }

ChainMap chain_compose(const ChainMap& g, const ChainMap& f) {
  if (f.tgt() != g.src()) throw std::invalid_argument("composing non-composable chain maps: " + f.tgt().describe() + " vs " + g.src().describe());
  const std::size_t len = joint_length(f.src(), g.tgt());
  std::vector<SparseMatrix> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (f.src().dim(n) == 0 || g.tgt().dim(n) == 0 || f.tgt().dim(n) == 0) {
      out[n] = SparseMatrix(g.tgt().dim(n), f.src().dim(n));
    } else {
      out[n] = g.at(n) * f.at(n);
    }
  }
  return ChainMap::trusted(f.src(), g.tgt(), std::move(out));
}

namespace {

template <class Op>
ChainMap combine(const ChainMap& f, const ChainMap& g, Op op) {
  if (f.src() != g.src() || f.tgt() != g.tgt()) throw std::invalid_argument("combining chain maps with different ends");
  const std::size_t len = joint_length(f.src(), f.tgt());
  std::vector<SparseMatrix> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    const SparseMatrix& a = f.at(n);
    const SparseMatrix& b = g.at(n);
    out[n] = op(a.rows() == f.tgt().dim(n) && a.cols() == f.src().dim(n) ? a : SparseMatrix(f.tgt().dim(n), f.src().dim(n)),
                b.rows() == f.tgt().dim(n) && b.cols() == f.src().dim(n) ? b : SparseMatrix(f.tgt().dim(n), f.src().dim(n)));
  }
  return ChainMap::trusted(f.src(), f.tgt(), std::move(out));
}

}  // namespace

ChainMap chain_add(const ChainMap& f, const ChainMap& g) {
  return combine(f, g, [](const SparseMatrix& a, const SparseMatrix& b) { return a + b; });
}

ChainMap chain_sub(const ChainMap& f, const ChainMap& g) {
  return combine(f, g, [](const SparseMatrix& a, const SparseMatrix& b) { return a - b; });
}

ChainMap chain_negate(const ChainMap& f) { return chain_scale(f, Rational(-1)); }

ChainMap chain_scale(const ChainMap& f, const Rational& c) {
  std::vector<SparseMatrix> out;
  for (const auto& m : f.components()) out.push_back(m.scaled(c));
  return ChainMap::trusted(f.src(), f.tgt(), std::move(out));
}

bool chain_equal(const ChainMap& f, const ChainMap& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt()) return false;
  const std::size_t len = joint_length(f.src(), f.tgt());
  for (std::size_t n = 0; n < len; ++n) {
    if (f.src().dim(n) == 0 || f.tgt().dim(n) == 0) continue;
    if (f.at(n) != g.at(n)) return false;
  }
  return true;
}

namespace {

bool surjective_component(const SparseMatrix& m, Ground ground) {
  if (m.rows() == 0) return true;
  if (ground == Ground::Q) return rank(m) == m.rows();
  auto s = smith_normal_form(m.to_int_dense());
  if (s.rank != m.rows()) return false;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) != 1) return false;
  }
  return true;
}

}  // namespace

bool chain_is_injective(const ChainMap& f) {
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.src().dim(n) == 0) continue;
    if (rank(f.at(n)) != f.src().dim(n)) return false;
  }
  return true;
}

bool chain_is_surjective(const ChainMap& f) {
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (!surjective_component(f.at(n), f.src().ground())) return false;
  }
  return true;
}

bool chain_is_iso(const ChainMap& f) {
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.src().dim(n) != f.tgt().dim(n)) return false;
  }
  return chain_is_surjective(f);
}

std::optional<ChainMap> chain_inverse(const ChainMap& f) {
  if (!chain_is_iso(f)) return std::nullopt;
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.src().dim(n) == 0) {
      out.emplace_back(0, 0);
      continue;
    }
    auto inv = inverse(f.at(n).to_dense());
    out.push_back(SparseMatrix::from_dense(*inv));
  }
  return ChainMap::trusted(f.tgt(), f.src(), std::move(out));
}

ChainComplex chain_direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.ground() != b.ground()) throw std::invalid_argument("direct sum over different grounds");
  const std::size_t len = joint_length(a, b);
  std::vector<std::size_t> dims(len);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 0; n < len; ++n) dims[n] = a.dim(n) + b.dim(n);
  for (std::size_t n = 1; n < len; ++n) {
    SparseMatrix da = n < a.length() ? a.d(n) : SparseMatrix(a.dim(n - 1), 0);
    SparseMatrix db = n < b.length() ? b.d(n) : SparseMatrix(b.dim(n - 1), 0);
    d.push_back(SparseMatrix::block_diag(da, db));
  }
  return ChainComplex(a.ground(), dims, d);
}

ChainMap chain_direct_sum(const ChainMap& f, const ChainMap& g) {
  ChainComplex src = chain_direct_sum(f.src(), g.src()), tgt = chain_direct_sum(f.tgt(), g.tgt());
  const std::size_t len = joint_length(src, tgt);
  std::vector<SparseMatrix> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    SparseMatrix a = f.at(n).rows() == f.tgt().dim(n) && f.at(n).cols() == f.src().dim(n) ? f.at(n) : SparseMatrix(f.tgt().dim(n), f.src().dim(n));
    SparseMatrix b = g.at(n).rows() == g.tgt().dim(n) && g.at(n).cols() == g.src().dim(n) ? g.at(n) : SparseMatrix(g.tgt().dim(n), g.src().dim(n));
    out[n] = SparseMatrix::block_diag(a, b);
  }
  return ChainMap::trusted(src, tgt, std::move(out));
}

ChainMap chain_inj1(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = chain_direct_sum(a, b);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < s.length(); ++n) out.push_back(SparseMatrix::embed(SparseMatrix::identity(a.dim(n)), s.dim(n), a.dim(n), 0, 0));
  return ChainMap::trusted(a, s, std::move(out));
}

ChainMap chain_inj2(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = chain_direct_sum(a, b);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < s.length(); ++n) out.push_back(SparseMatrix::embed(SparseMatrix::identity(b.dim(n)), s.dim(n), b.dim(n), a.dim(n), 0));
  return ChainMap::trusted(b, s, std::move(out));
}

ChainMap chain_proj1(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = chain_direct_sum(a, b);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < s.length(); ++n) out.push_back(SparseMatrix::embed(SparseMatrix::identity(a.dim(n)), a.dim(n), s.dim(n), 0, 0));
  return ChainMap::trusted(s, a, std::move(out));
}

ChainMap chain_proj2(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = chain_direct_sum(a, b);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < s.length(); ++n) out.push_back(SparseMatrix::embed(SparseMatrix::identity(b.dim(n)), b.dim(n), s.dim(n), 0, a.dim(n)));
  return ChainMap::trusted(s, b, std::move(out));
}

ChainMap chain_copair(const ChainMap& f, const ChainMap& g) {
  if (f.tgt() != g.tgt()) throw std::invalid_argument("copair: different targets");
  return chain_add(chain_compose(f, chain_proj1(f.src(), g.src())), chain_compose(g, chain_proj2(f.src(), g.src())));
}

ChainMap chain_pair(const ChainMap& f, const ChainMap& g) {
  if (f.src() != g.src()) throw std::invalid_argument("pair: different sources");
  return chain_add(chain_compose(chain_inj1(f.tgt(), g.tgt()), f), chain_compose(chain_inj2(f.tgt(), g.tgt()), g));
}

ChainMap chain_truncated(const ChainMap& f, std::size_t max_degree) {
  ChainComplex s = f.src().truncated(max_degree), t = f.tgt().truncated(max_degree);
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n <= max_degree && n < f.length(); ++n) out.push_back(f.at(n));
  return ChainMap::trusted(s, t, std::move(out));
}

}  // namespace mb
