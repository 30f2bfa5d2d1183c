#include "mb/category/context.hpp"

#include "mb/chain/homology.hpp"
#include "mb/chain/random.hpp"
#include "mb/chain/tensor.hpp"

#include <stdexcept>

namespace mb {

namespace {

FpMorphism identity_matrix_map(const FpGroup& src, const FpGroup& tgt) {
  if (src.gens != tgt.gens) throw std::logic_error("identity-matrix map between groups of different rank");
  return FpMorphism{src, tgt, IntMatrix::identity(src.gens)};
}

ChainMap identity_matrix_map(const ChainComplex& src, const ChainComplex& tgt) {
  std::vector<SparseMatrix> f;
  for (std::size_t n = 0; n < std::max(src.length(), tgt.length()); ++n) {
    if (src.dim(n) != tgt.dim(n)) throw std::logic_error("identity-matrix chain map between different shapes");
    f.push_back(SparseMatrix::identity(src.dim(n)));
  }
  return ChainMap::trusted(src, tgt, std::move(f));
}

}  // namespace

// ---- FPAb ----

FpMorphism FpAbContext::assoc(const FpGroup& a, const FpGroup& b, const FpGroup& c) const {
  return identity_matrix_map(fp_tensor(fp_tensor(a, b), c), fp_tensor(a, fp_tensor(b, c)));
}
FpMorphism FpAbContext::assoc_inv(const FpGroup& a, const FpGroup& b, const FpGroup& c) const {
  return identity_matrix_map(fp_tensor(a, fp_tensor(b, c)), fp_tensor(fp_tensor(a, b), c));
}
FpMorphism FpAbContext::left_unitor(const FpGroup& x) const { return identity_matrix_map(fp_tensor(unit(), x), x); }
FpMorphism FpAbContext::left_unitor_inv(const FpGroup& x) const { return identity_matrix_map(x, fp_tensor(unit(), x)); }
FpMorphism FpAbContext::right_unitor(const FpGroup& x) const { return identity_matrix_map(fp_tensor(x, unit()), x); }
FpMorphism FpAbContext::right_unitor_inv(const FpGroup& x) const { return identity_matrix_map(x, fp_tensor(x, unit())); }

FpMorphism FpAbContext::symmetry(const FpGroup& a, const FpGroup& b) const {
  IntMatrix m(a.gens * b.gens, a.gens * b.gens);
  for (std::size_t i = 0; i < a.gens; ++i)
    for (std::size_t j = 0; j < b.gens; ++j) m(j * a.gens + i, i * b.gens + j) = 1;
  return FpMorphism{fp_tensor(a, b), fp_tensor(b, a), m};
}

std::string FpAbContext::describe(const FpMorphism& f) const {
  return describe(f.src) + " -> " + describe(f.tgt) + " " + to_string(f.m);
}

FpMorphism FpAbContext::random_morphism(std::mt19937_64& rng, const FpGroup& a, const FpGroup& b) const {
  FpHom hom = fp_hom(a, b);
  std::uniform_int_distribution<int> coef(-2, 2);
  IntMatrix m(b.gens, a.gens);
  for (const IntMatrix& g : hom.generators) m = m + g.scaled(Integer(coef(rng)));
  return FpMorphism{a, b, m};
}

FpMorphism FpAbContext::perturb(const FpMorphism& f, std::uint64_t seed) const {
  if (f.m.rows() == 0 || f.m.cols() == 0) return f;
  IntMatrix m = f.m;
  m(seed % m.rows(), (seed / m.rows()) % m.cols()) += 1;
  return fp_morphism(f.src, f.tgt, m);
}

// ---- chains ----

std::string ChainContext::name() const {
  return std::string("Ch(") + to_string(ground) + (mode == ChainMode::Tensor ? ",tensor)" : ",sum)");
}

ChainComplex ChainContext::unit() const { return mode == ChainMode::Tensor ? chain_unit(ground) : ChainComplex(ground); }

ChainComplex ChainContext::tensor(const ChainComplex& a, const ChainComplex& b) const {
  return mode == ChainMode::Tensor ? chain_tensor(a, b) : chain_direct_sum(a, b);
}

ChainMap ChainContext::tensor(const ChainMap& f, const ChainMap& g) const {
  return mode == ChainMode::Tensor ? chain_tensor(f, g) : chain_direct_sum(f, g);
}

ChainMap ChainContext::assoc(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) const {
  if (mode == ChainMode::Tensor) return chain_associator(a, b, c);
  return identity_matrix_map(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

ChainMap ChainContext::assoc_inv(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) const {
  if (mode == ChainMode::Tensor) return chain_associator_inv(a, b, c);
  return identity_matrix_map(tensor(a, tensor(b, c)), tensor(tensor(a, b), c));
}

ChainMap ChainContext::left_unitor(const ChainComplex& x) const { return identity_matrix_map(tensor(unit(), x), x); }
ChainMap ChainContext::left_unitor_inv(const ChainComplex& x) const { return identity_matrix_map(x, tensor(unit(), x)); }
ChainMap ChainContext::right_unitor(const ChainComplex& x) const { return identity_matrix_map(tensor(x, unit()), x); }
ChainMap ChainContext::right_unitor_inv(const ChainComplex& x) const { return identity_matrix_map(x, tensor(x, unit())); }

ChainMap ChainContext::symmetry(const ChainComplex& a, const ChainComplex& b) const {
  if (mode == ChainMode::Tensor) return chain_symmetry(a, b);
  return chain_pair(chain_proj2(a, b), chain_proj1(a, b));
}

bool ChainContext::is_weq(const ChainMap& f, std::size_t up_to) const { return is_quasi_iso(f, up_to); }

std::string ChainContext::describe(const ChainMap& f) const {
  std::string out = f.src().describe() + " -> " + f.tgt().describe();
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.at(n).rows() && f.at(n).cols()) out += " f" + std::to_string(n) + "=" + to_string(f.at(n));
  }
  return out;
}

ChainMap ChainContext::random_morphism(std::mt19937_64& rng, const ChainComplex& a, const ChainComplex& b) const {
  return random_chain_map(rng, a, b);
}

ChainMap ChainContext::perturb(const ChainMap& f, std::uint64_t seed) const {
  std::vector<std::size_t> live;
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.src().dim(n) && f.tgt().dim(n)) live.push_back(n);
  }
  if (live.empty()) return f;
  std::size_t n = live[seed % live.size()];
  seed /= live.size();
  std::vector<SparseMatrix> comps = f.components();
  SparseMatrix& m = comps[n];
  std::size_t i = seed % m.rows(), j = (seed / m.rows()) % m.cols();
  m.set(i, j, m.at(i, j) + 1);
  return ChainMap(f.src(), f.tgt(), comps);
}

// ---- batteries ----

std::vector<FpGroup> fpab_battery(std::uint64_t seed) {
  std::vector<FpGroup> out = {FpGroup::free(0),
                              FpGroup::free(1),
                              FpGroup::cyclic(2),
                              FpGroup::cyclic(4),
                              FpGroup::sum_of_cyclics({2, 0}),
                              FpGroup::free(2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 3), entry(-3, 3);
  for (int k = 0; k < 3; ++k) {
    std::size_t g = size(rng), r = size(rng);
    IntMatrix rel(g, r);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < r; ++j) rel(i, j) = entry(rng);
    out.push_back(FpGroup::presented(rel));
  }
  return out;
}

std::vector<ChainComplex> chain_battery(Ground ground, std::uint64_t seed) {
  std::vector<ChainComplex> out = {ChainComplex(ground), ChainComplex::sphere(ground, 0), ChainComplex::sphere(ground, 1),
                                   ChainComplex::sphere(ground, 2), ChainComplex::disk(ground, 2)};
  Rng rng(seed);
  RandomComplexSpec spec;
  spec.ground = ground;
  spec.top = 4;
  spec.max_dim = 3;
  for (int k = 0; k < 3; ++k) out.push_back(random_complex(rng, spec).trimmed());
  return out;
}

std::vector<ChainComplex> positive_chain_battery(Ground ground, std::size_t cap, std::uint64_t seed) {
  std::vector<ChainComplex> out = {ChainComplex(ground), ChainComplex::sphere(ground, 1), ChainComplex::sphere(ground, 2),
                                   ChainComplex::disk(ground, 2)};
  Rng rng(seed);
  RandomComplexSpec spec;
  spec.ground = ground;
  spec.top = std::min<std::size_t>(cap, 3);
  spec.max_dim = 2;
  spec.positive = true;
  for (int k = 0; k < 3; ++k) out.push_back(random_complex(rng, spec).trimmed());
  return out;
}

}  // namespace mb
