#include "mb/monad/tensor_algebra.hpp"

#include <stdexcept>

namespace mb {

namespace {

using Accum = std::map<std::size_t, Rational>;

void add_to(Accum& col, std::size_t row, const Rational& c) {
  auto [it, fresh] = col.emplace(row, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) col.erase(it);
  }
}

SparseMatrix from_columns(std::size_t rows, const std::vector<Accum>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j]) m.push(i, j, v);
  return m;
}

void extend(const ChainComplex& x, std::size_t remaining, Word& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t a = 1; a <= remaining; ++a) {
    for (std::size_t i = 0; i < x.dim(a); ++i) {
      prefix.emplace_back(a, i);
      extend(x, remaining - a, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::size_t WordTable::at(const Word& w) const {
  std::size_t n = 0;
  for (const auto& l : w) n += l.first;
  if (n >= index.size()) throw std::out_of_range("word above the cap");
  return index[n].at(w);
}

WordTable build_word_table(const ChainComplex& x, std::size_t cap) {
  WordTable t;
  t.x = x;
  t.cap = cap;
  t.words.resize(cap + 1);
  t.index.resize(cap + 1);
  for (std::size_t n = 1; n <= cap; ++n) {
    Word prefix;
    extend(x, n, prefix, t.words[n]);
    for (std::size_t k = 0; k < t.words[n].size(); ++k) t.index[n][t.words[n][k]] = k;
  }
  std::vector<std::size_t> dims(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) dims[n] = t.words[n].size();
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n <= cap; ++n) {
    std::vector<Accum> cols(dims[n]);
    for (std::size_t k = 0; k < dims[n]; ++k) {
      const Word& w = t.words[n][k];
      std::size_t before = 0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        auto [a, i] = w[j];
        if (a >= 2) {
          const Rational sign = before % 2 ? -1 : 1;
          for (const auto& [r, c] : x.d(a).column(i)) {
            Word v = w;
            v[j] = {a - 1, r};
            add_to(cols[k], t.index[n - 1].at(v), sign * c);
          }
        }
        before += a;
      }
    }
    d.push_back(from_columns(dims[n - 1], cols));
  }
  t.tx = ChainComplex(x.ground(), dims, d);
  return t;
}

TensorAlgebraMonad::TensorAlgebraMonad(Ground ground, std::size_t cap) : ctx_{ground, ChainMode::Cocartesian}, cap_(cap) {}

bool TensorAlgebraMonad::accepts(const ChainComplex& x) const {
  return x.ground() == ctx_.ground && x.dim(0) == 0 && x.trimmed().length() <= cap_ + 1;
}

void TensorAlgebraMonad::require(const ChainComplex& x) const {
  if (!accepts(x)) throw std::domain_error("tensoralg: needs a positively graded complex of top degree <= " + std::to_string(cap_));
}

std::shared_ptr<const WordTable> TensorAlgebraMonad::table(const ChainComplex& x) const {
  require(x);
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& [key, t] : cache_) {
    if (key == x) return t;
  }
  auto t = std::make_shared<const WordTable>(build_word_table(x, cap_));
  if (cache_.size() >= 64) cache_.erase(cache_.begin());
  cache_.emplace_back(x, t);
  return t;
}

ChainComplex TensorAlgebraMonad::apply(const ChainComplex& x) const { return table(x)->tx; }

ChainMap TensorAlgebraMonad::apply(const ChainMap& f) const {
  auto s = table(f.src());
  auto t = table(f.tgt());
  std::vector<SparseMatrix> comps;
  for (std::size_t n = 0; n <= cap_; ++n) {
    std::vector<Accum> cols(s->words[n].size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      // expand f(a1)⊗…⊗f(ak) letter by letter
      std::vector<std::pair<Word, Rational>> partial = {{Word{}, Rational(1)}};
      for (auto [a, i] : s->words[n][k]) {
        std::vector<std::pair<Word, Rational>> next;
        for (const auto& [r, c] : f.at(a).column(i)) {
          for (const auto& [w, v] : partial) {
            Word u = w;
            u.emplace_back(a, r);
            next.emplace_back(std::move(u), v * c);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [w, v] : partial) add_to(cols[k], t->index[n].at(w), v);
    }
    comps.push_back(from_columns(t->words[n].size(), cols));
  }
  return ChainMap(s->tx, t->tx, comps);
}

ChainMap TensorAlgebraMonad::mu(const ChainComplex& x) const {
  auto inner = table(x);
  auto outer = table(inner->tx);
  std::vector<SparseMatrix> comps;
  for (std::size_t n = 0; n <= cap_; ++n) {
    std::vector<std::size_t> perm;
    for (const Word& w : outer->words[n]) {
      Word flat;
      for (auto [a, i] : w) {
        const Word& piece = inner->words[a][i];
        flat.insert(flat.end(), piece.begin(), piece.end());
      }
      perm.push_back(inner->index[n].at(flat));
    }
    comps.push_back(SparseMatrix::permutation(perm, inner->words[n].size()));
  }
  return ChainMap(outer->tx, inner->tx, comps);
}

ChainMap TensorAlgebraMonad::eta(const ChainComplex& x) const {
  auto t = table(x);
  std::vector<SparseMatrix> comps;
  for (std::size_t n = 0; n <= cap_; ++n) {
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < x.dim(n); ++i) perm.push_back(t->index[n].at(Word{{n, i}}));
    comps.push_back(SparseMatrix::permutation(perm, t->words[n].size()));
  }
  return ChainMap(x, t->tx, comps);
}

ChainMap TensorAlgebraMonad::sigma(const ChainComplex& x, const ChainComplex& y) const {
  auto ty = table(y);
  auto txy = table(chain_direct_sum(x, y));
  std::vector<SparseMatrix> comps;
  for (std::size_t n = 0; n <= cap_; ++n) {
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < x.dim(n); ++i) perm.push_back(txy->index[n].at(Word{{n, i}}));
    for (const Word& w : ty->words[n]) {
      Word shifted = w;
      for (auto& l : shifted) l.second += x.dim(l.first);
      perm.push_back(txy->index[n].at(shifted));
    }
    comps.push_back(SparseMatrix::permutation(perm, txy->words[n].size()));
  }
  return ChainMap(chain_direct_sum(x, ty->tx), txy->tx, comps);
}

}  // namespace mb
