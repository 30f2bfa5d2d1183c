#include "mb/gabriel/ring.hpp"

#include "mb/category/context.hpp"
#include "mb/linalg/lattice.hpp"

#include <stdexcept>

namespace mb {

namespace {

RingPresentation table_ring(std::string name, std::size_t r, const std::vector<std::vector<long>>& products, std::vector<long> unit) {
  RingPresentation s;
  s.name = std::move(name);
  s.rank = r;
  s.mult = IntMatrix(r, r * r);
  for (std::size_t c = 0; c < r * r; ++c)
    for (std::size_t k = 0; k < r; ++k) s.mult(k, c) = products[c][k];
  for (long u : unit) s.unit.emplace_back(u);
  return s;
}

IntVector zero_vec(std::size_t n) { return IntVector(n, Integer(0)); }

std::string vec_str(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

}  // namespace

IntVector RingPresentation::product(const IntVector& a, const IntVector& b) const {
  IntVector out = zero_vec(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      for (std::size_t k = 0; k < rank; ++k) out[k] += a[i] * b[j] * mult(k, i * rank + j);
    }
  }
  return out;
}

IntVector RingPresentation::basis(std::size_t i) const {
  IntVector v = zero_vec(rank);
  v[i] = 1;
  return v;
}

IntMatrix RingPresentation::left_mult(std::size_t i) const {
  IntMatrix m(rank, rank);
  for (std::size_t j = 0; j < rank; ++j)
    for (std::size_t k = 0; k < rank; ++k) m(k, j) = mult(k, i * rank + j);
  return m;
}

std::optional<std::string> ring_violation(const RingPresentation& s) {
  if (s.mult.rows() != s.rank || s.mult.cols() != s.rank * s.rank || s.unit.size() != s.rank) return "structure constants have the wrong shape";
  for (std::size_t i = 0; i < s.rank; ++i) {
    const IntVector a = s.basis(i);
    if (s.product(s.unit, a) != a || s.product(a, s.unit) != a) return "unit fails on s" + std::to_string(i);
    for (std::size_t j = 0; j < s.rank; ++j) {
      for (std::size_t k = 0; k < s.rank; ++k) {
        const IntVector b = s.basis(j), c = s.basis(k);
        if (s.product(s.product(a, b), c) != s.product(a, s.product(b, c)))
          return "associativity fails on (s" + std::to_string(i) + ", s" + std::to_string(j) + ", s" + std::to_string(k) + ")";
      }
    }
  }
  return std::nullopt;
}

RingPresentation ring_z() { return table_ring("Z", 1, {{1}}, {1}); }

RingPresentation ring_zxz() { return table_ring("ZxZ", 2, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}, {1, 1}); }

RingPresentation ring_m2z() {
  std::vector<std::vector<long>> prod(16, std::vector<long>(4, 0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k) prod[(2 * i + j) * 4 + (2 * k + l)][2 * i + l] = 1;
  return table_ring("M2Z", 4, prod, {1, 0, 0, 1});
}

RingPresentation ring_c2() { return table_ring("C2", 2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}}, {1, 0}); }

RingPresentation ring_preset(const std::string& name) {
  if (name == "Z") return ring_z();
  if (name == "ZxZ") return ring_zxz();
  if (name == "M2Z") return ring_m2z();
  if (name == "C2") return ring_c2();
  throw std::invalid_argument("unknown ring preset '" + name + "'");
}

RingPresentation ring_opposite(const RingPresentation& s) {
  RingPresentation o = s;
  o.name = s.name + "^op";
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < s.rank; ++j)
      for (std::size_t k = 0; k < s.rank; ++k) o.mult(k, i * s.rank + j) = s.mult(k, j * s.rank + i);
  return o;
}

std::optional<std::string> module_violation(const SModule& m) {
  const auto& s = m.ring;
  if (m.action.size() != s.rank) return "one action matrix per ring generator expected";
  const FpGroup& g = m.carrier;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (!fp_well_defined(g, g, m.action[i])) return "action of s" + std::to_string(i) + " does not respect the relations";
  }
  auto act = [&](const IntVector& v) {
    IntMatrix out(g.gens, g.gens);
    for (std::size_t k = 0; k < s.rank; ++k) out = out + m.action[k].scaled(v[k]);
    return FpMorphism{g, g, out};
  };
  if (!fp_equal(act(s.unit), fp_identity(g))) return std::string("unit does not act as the identity");
  for (std::size_t i = 0; i < s.rank; ++i) {
    for (std::size_t j = 0; j < s.rank; ++j) {
      FpMorphism lhs = fp_compose(act(s.basis(i)), act(s.basis(j)));
      if (!fp_equal(lhs, act(s.product(s.basis(i), s.basis(j)))))
        return "s" + std::to_string(i) + "(s" + std::to_string(j) + " m) != (s" + std::to_string(i) + "s" + std::to_string(j) + ") m";
    }
  }
  return std::nullopt;
}

SModule free_module(const RingPresentation& s, std::size_t n) {
  SModule m{s, FpGroup::free(s.rank * n), {}, s.name + "^" + std::to_string(n)};
  for (std::size_t i = 0; i < s.rank; ++i) m.action.push_back(IntMatrix::kron(IntMatrix::identity(n), s.left_mult(i)));
  return m;
}

SModule z_module(const FpGroup& g) { return SModule{ring_z(), g, {IntMatrix::identity(g.gens)}, fp_canonical(g).str()}; }

SModule zxz_module(const FpGroup& a, const FpGroup& b, std::string label) {
  FpGroup g = fp_direct_sum(a, b);
  IntMatrix e1(g.gens, g.gens), e2(g.gens, g.gens);
  for (std::size_t i = 0; i < a.gens; ++i) e1(i, i) = 1;
  for (std::size_t i = 0; i < b.gens; ++i) e2(a.gens + i, a.gens + i) = 1;
  return SModule{ring_zxz(), g, {e1, e2}, std::move(label)};
}

namespace {

// A² with E_ij moving slot j to slot i.
SModule m2z_column_module(const FpGroup& a) {
  FpGroup g = fp_direct_sum(a, a);
  SModule m{ring_m2z(), g, {}, fp_canonical(a).str() + "^2"};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      IntMatrix e(g.gens, g.gens);
      for (std::size_t k = 0; k < a.gens; ++k) e(i * a.gens + k, j * a.gens + k) = 1;
      m.action.push_back(e);
    }
  }
  return m;
}

SModule c2_sign_module(const FpGroup& a, long sign) {
  return SModule{ring_c2(), a, {IntMatrix::identity(a.gens), IntMatrix::identity(a.gens).scaled(Integer(sign))},
                 fp_canonical(a).str() + (sign > 0 ? "(+)" : "(-)")};
}

IntMatrix right_mult_matrix(const ProjectiveSummand& p) {
  const auto& s = p.ring;
  const std::size_t r = s.rank, n = p.n;
  IntMatrix m(r * n, r * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t b = 0; b < n; ++b) {
        IntVector prod = s.product(s.basis(k), p.e[a * n + b]);
        for (std::size_t l = 0; l < r; ++l) m(b * r + l, a * r + k) += prod[l];
      }
  return m;
}

}  // namespace

std::optional<std::string> idempotent_violation(const ProjectiveSummand& p) {
  if (p.e.size() != p.n * p.n) return "idempotent has the wrong shape";
  for (std::size_t a = 0; a < p.n; ++a) {
    for (std::size_t b = 0; b < p.n; ++b) {
      IntVector sum = zero_vec(p.ring.rank);
      for (std::size_t c = 0; c < p.n; ++c) {
        IntVector t = p.ring.product(p.e[a * p.n + c], p.e[c * p.n + b]);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += t[k];
      }
      if (sum != p.e[a * p.n + b])
        return "e^2 != e at (" + std::to_string(a) + "," + std::to_string(b) + "): " + vec_str(sum) + " vs " + vec_str(p.e[a * p.n + b]);
    }
  }
  return std::nullopt;
}

ResolvedProjective resolve(const ProjectiveSummand& p) {
  if (auto v = idempotent_violation(p)) throw std::invalid_argument("not idempotent: " + *v);
  ResolvedProjective out;
  out.basis = lattice_basis(right_mult_matrix(p));
  out.p = out.basis.cols();
  LatticeSolver solver(out.basis);
  SModule ambient = free_module(p.ring, p.n);
  for (const IntMatrix& l : ambient.action) {
    auto c = solver.solve(l * out.basis);
    if (!c) throw std::logic_error("image of an idempotent is not a submodule");
    out.action.push_back(*c);
  }
  return out;
}

SModule as_module(const ProjectiveSummand& p) {
  ResolvedProjective r = resolve(p);
  return SModule{p.ring, FpGroup::free(r.p), r.action, p.label};
}

ProjectiveSummand projective_preset(const std::string& ring, const std::string& p) {
  RingPresentation s = ring_preset(ring);
  auto scalar = [&](long c) {
    IntVector v = s.unit;
    for (auto& x : v) x *= c;
    return v;
  };
  const std::string label = ring + ":" + p;
  if (p == "S") return {s, 1, {s.unit}, label};
  if (ring == "Z" && p == "Z") return {s, 1, {scalar(1)}, label};
  if (ring == "Z" && p == "Z2") return {s, 2, {scalar(1), scalar(0), scalar(0), scalar(1)}, label};
  if (ring == "ZxZ" && p == "e1") return {s, 1, {s.basis(0)}, label};
  if (ring == "M2Z" && p == "col") return {s, 1, {s.basis(0)}, label};
  throw std::invalid_argument("unknown projective preset '" + label + "'");
}

std::vector<SModule> module_battery(const RingPresentation& s) {
  std::vector<SModule> out;
  if (s.name == "Z") {
    for (const auto& g : fpab_battery()) out.push_back(z_module(g));
  } else if (s.name == "ZxZ") {
    out.push_back(zxz_module(FpGroup::free(0), FpGroup::free(0), "0"));
    out.push_back(zxz_module(FpGroup::free(1), FpGroup::free(0), "first factor"));
    out.push_back(zxz_module(FpGroup::free(0), FpGroup::free(1), "second factor"));
    out.push_back(zxz_module(FpGroup::free(1), FpGroup::free(1), "ZxZ"));
    out.push_back(zxz_module(FpGroup::cyclic(2), FpGroup::cyclic(3), "Z/2 x Z/3"));
  } else if (s.name == "M2Z") {
    for (const auto& g : {FpGroup::free(0), FpGroup::free(1), FpGroup::cyclic(2), FpGroup::cyclic(4)}) out.push_back(m2z_column_module(g));
    out.push_back(free_module(s, 1));
  } else if (s.name == "C2") {
    out.push_back(c2_sign_module(FpGroup::free(1), 1));
    out.push_back(c2_sign_module(FpGroup::free(1), -1));
    out.push_back(c2_sign_module(FpGroup::cyclic(3), -1));
    out.push_back(free_module(s, 1));
  } else {
    out.push_back(free_module(s, 1));
  }
  return out;
}

}  // namespace mb
