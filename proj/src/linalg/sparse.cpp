#include "mb/linalg/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mb {

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.push(i, i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (d(i, j) != 0) m.push(i, j, d(i, j));
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (d(i, j) != 0) m.push(i, j, Rational(d(i, j)));
    }
  }
  return m;
}

SparseMatrix SparseMatrix::permutation(const std::vector<std::size_t>& perm, std::size_t rows) {
  SparseMatrix m(rows, perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m.push(perm[j], j, Rational(1));
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& c = data_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == i) return it->second;
  return Rational(0);
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("sparse set out of range");
  auto& c = data_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == i) {
    if (value == 0) {
      c.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    c.insert(it, Entry(static_cast<std::uint32_t>(i), value));
  }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("sparse product shape mismatch");
  SparseMatrix out(rows_, other.cols_);
  std::vector<Rational> acc(rows_);
  std::vector<char> touched(rows_, 0);
  std::vector<std::uint32_t> rows_hit;
  for (std::size_t j = 0; j < other.cols_; ++j) {
    rows_hit.clear();
    for (const auto& [k, b] : other.data_[j]) {
      for (const auto& [i, a] : data_[k]) {
        if (!touched[i]) {
          touched[i] = 1;
          rows_hit.push_back(i);
          acc[i] = a * b;
        } else {
          acc[i] += a * b;
        }
      }
    }
    std::sort(rows_hit.begin(), rows_hit.end());
    auto& col = out.data_[j];
    for (auto i : rows_hit) {
      if (acc[i] != 0) col.emplace_back(i, acc[i]);
      touched[i] = 0;
    }
  }
  return out;
}

namespace {

SparseMatrix::Column merge(const SparseMatrix::Column& a, const SparseMatrix::Column& b, int sign) {
  SparseMatrix::Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("sparse sum shape mismatch");
  SparseMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.data_[j] = merge(data_[j], other.data_[j], 1);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("sparse difference shape mismatch");
  SparseMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.data_[j] = merge(data_[j], other.data_[j], -1);
  return out;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out(*this);
  for (auto& c : out.data_) {
    for (auto& e : c) e.second = -e.second;
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  if (factor == 0) return SparseMatrix(rows_, cols_);
  SparseMatrix out(*this);
  for (auto& c : out.data_) {
    for (auto& e : c) e.second *= factor;
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : data_) {
    if (!c.empty()) return false;
  }
  return true;
}

bool SparseMatrix::is_integral() const {
  for (const auto& c : data_) {
    for (const auto& e : c) {
      if (e.second.get_den() != 1) return false;
    }
  }
  return true;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : data_[j]) out.data_[i].emplace_back(static_cast<std::uint32_t>(j), v);
  }
  return out;
}

RatMatrix SparseMatrix::to_dense() const {
  RatMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : data_[j]) out(i, j) = v;
  }
  return out;
}

IntMatrix SparseMatrix::to_int_dense() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : data_[j]) {
      if (v.get_den() != 1) throw std::domain_error("non-integral entry in integer context");
      out(i, j) = v.get_num();
    }
  }
  return out;
}

SparseMatrix SparseMatrix::select_columns(std::size_t c0, std::size_t n) const {
  if (c0 + n > cols_) throw std::out_of_range("column range");
  SparseMatrix out(rows_, n);
  for (std::size_t j = 0; j < n; ++j) out.data_[j] = data_[c0 + j];
  return out;
}

SparseMatrix SparseMatrix::select_rows(std::size_t r0, std::size_t n) const {
  if (r0 + n > rows_) throw std::out_of_range("row range");
  SparseMatrix out(n, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : data_[j]) {
      if (i >= r0 && i < r0 + n) out.data_[j].emplace_back(static_cast<std::uint32_t>(i - r0), v);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  SparseMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) out.data_[j] = a.data_[j];
  for (std::size_t j = 0; j < b.cols_; ++j) out.data_[a.cols_ + j] = b.data_[j];
  return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
  SparseMatrix out(a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    out.data_[j] = a.data_[j];
    for (const auto& [i, v] : b.data_[j]) out.data_[j].emplace_back(static_cast<std::uint32_t>(a.rows_ + i), v);
  }
  return out;
}

SparseMatrix SparseMatrix::block_diag(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) out.data_[j] = a.data_[j];
  for (std::size_t j = 0; j < b.cols_; ++j) {
    auto& col = out.data_[a.cols_ + j];
    for (const auto& [i, v] : b.data_[j]) col.emplace_back(static_cast<std::uint32_t>(a.rows_ + i), v);
  }
  return out;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t l = 0; l < b.cols_; ++l) {
      auto& col = out.data_[j * b.cols_ + l];
      for (const auto& [i, x] : a.data_[j]) {
        for (const auto& [k, y] : b.data_[l]) col.emplace_back(static_cast<std::uint32_t>(i * b.rows_ + k), x * y);
      }
    }
  }
  return out;
}

SparseMatrix SparseMatrix::embed(const SparseMatrix& m, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0) {
  if (r0 + m.rows_ > rows || c0 + m.cols_ > cols) throw std::out_of_range("embed out of range");
  SparseMatrix out(rows, cols);
  for (std::size_t j = 0; j < m.cols_; ++j) {
    auto& col = out.data_[c0 + j];
    for (const auto& [i, v] : m.data_[j]) col.emplace_back(static_cast<std::uint32_t>(r0 + i), v);
  }
  return out;
}

std::string to_string(const SparseMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << "{";
  bool first = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.column(j)) {
      os << (first ? "" : ",") << "(" << i << "," << j << "):" << to_string(v);
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace mb
