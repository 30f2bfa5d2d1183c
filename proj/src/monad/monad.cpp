#include "mb/monad/monad.hpp"

#include "mb/chain/tensor.hpp"

namespace mb {

std::string to_string(MonadComponent c) {
  switch (c) {
    case MonadComponent::Mu: return "mu";
    case MonadComponent::Eta: return "eta";
    case MonadComponent::Sigma: return "sigma";
  }
  return "?";
}

template <class Ctx>
std::vector<MonadPtr<Ctx>> seeded_perturbations(const MonadPtr<Ctx>& t, std::uint64_t seed) {
  std::vector<MonadPtr<Ctx>> out;
  std::mt19937_64 rng(seed);
  const MonadComponent order[] = {MonadComponent::Mu, MonadComponent::Eta, MonadComponent::Sigma};
  for (int k = 0; k < 6; ++k) out.push_back(std::make_shared<PerturbedMonad<Ctx>>(t, order[k % 3], rng() % 1000003));
  return out;
}

template std::vector<MonadPtr<FpAbContext>> seeded_perturbations(const MonadPtr<FpAbContext>&, std::uint64_t);
template std::vector<MonadPtr<ChainContext>> seeded_perturbations(const MonadPtr<ChainContext>&, std::uint64_t);

MonoidObject<FpAbContext> group_ring_c2() {
  FpGroup m = FpGroup::free(2);
  // basis {1, g}; (i, j) at index 2i + j goes to g^{i+j}
  IntMatrix mult = IntMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 1, 0}});
  return {m, fp_morphism(fp_tensor(m, m), m, mult), fp_morphism(FpGroup::free(1), m, IntMatrix::from_rows({{1}, {0}}))};
}

MonoidObject<FpAbContext> z_mod_2_ring() {
  FpGroup m = FpGroup::cyclic(2);
  return {m, fp_morphism(fp_tensor(m, m), m, IntMatrix::from_rows({{1}})), fp_morphism(FpGroup::free(1), m, IntMatrix::from_rows({{1}}))};
}

MonoidObject<FpAbContext> fpab_unit_monoid() {
  FpGroup z = FpGroup::free(1);
  return {z, fp_morphism(fp_tensor(z, z), z, IntMatrix::identity(1)), fp_identity(z)};
}

namespace {

SparseMatrix dense(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> r;
  for (auto row : rows) r.emplace_back(row);
  IntMatrix m(r.size(), r.empty() ? 0 : r[0].size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
  return SparseMatrix::from_dense(m);
}

}  // namespace

MonoidObject<ChainContext> dual_numbers(Ground ground) {
  ChainComplex m(ground, {2}, {});
  ChainComplex mm = chain_tensor(m, m);
  // basis {1, ε}: 1·1 = 1, 1·ε = ε·1 = ε, ε·ε = 0
  ChainMap mult(mm, m, {dense({{1, 0, 0, 0}, {0, 1, 1, 0}})});
  ChainMap unit(chain_unit(ground), m, {dense({{1}, {0}})});
  return {m, mult, unit};
}

MonoidObject<ChainContext> exterior_algebra(Ground ground) {
  ChainComplex m(ground, {1, 1}, {SparseMatrix(1, 1)});
  ChainComplex mm = chain_tensor(m, m);
  // degree 1 basis is (1⊗x, x⊗1); x⊗x lands in degree 2 where Λ(x) is zero
  ChainMap mult(mm, m, {dense({{1}}), dense({{1, 1}}), SparseMatrix(0, 1)});
  ChainMap unit(chain_unit(ground), m, {dense({{1}})});
  return {m, mult, unit};
}

MonoidObject<ChainContext> chain_group_ring_c2(Ground ground) {
  ChainComplex m(ground, {2}, {});
  ChainMap mult(chain_tensor(m, m), m, {dense({{1, 0, 0, 1}, {0, 1, 1, 0}})});
  ChainMap unit(chain_unit(ground), m, {dense({{1}, {0}})});
  return {m, mult, unit};
}

MonoidObject<ChainContext> chain_unit_monoid(Ground ground) {
  ChainComplex i = chain_unit(ground);
  return {i, ChainMap(chain_tensor(i, i), i, {SparseMatrix::identity(1)}), chain_identity(i)};
}

}  // namespace mb
