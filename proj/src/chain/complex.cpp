#include "mb/chain/complex.hpp"

#include "mb/linalg/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace mb {

std::string to_string(Ground g) { return g == Ground::Q ? "Q" : "Z"; }

namespace {

const SparseMatrix& empty_matrix() {
  static const SparseMatrix m(0, 0);
  return m;
}

}  // namespace

ChainComplex::ChainComplex() : ChainComplex(Ground::Q) {}

ChainComplex::ChainComplex(Ground ground) {
  auto data = std::make_shared<Data>();
  data->ground = ground;
  data->d.emplace_back(0, 0);
  data_ = data;
}

ChainComplex::ChainComplex(Ground ground, std::vector<std::size_t> dims, std::vector<SparseMatrix> d) {
  if (!dims.empty() && d.size() + 1 != dims.size()) throw std::invalid_argument("complex: need one differential per positive degree");
  if (dims.empty() && !d.empty()) throw std::invalid_argument("complex: differentials without levels");
  auto data = std::make_shared<Data>();
  data->ground = ground;
  data->dims = std::move(dims);
  const std::size_t len = data->dims.size();
  data->d.reserve(len + 1);
  data->d.emplace_back(0, len ? data->dims[0] : 0);
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (d[k].rows() != data->dims[k] || d[k].cols() != data->dims[k + 1]) {
      throw std::invalid_argument("complex: differential " + std::to_string(k + 1) + " has the wrong shape");
    }
    if (ground == Ground::Z && !d[k].is_integral()) throw std::invalid_argument("complex: non-integral differential over Z");
    data->d.push_back(std::move(d[k]));
  }
  if (len) data->d.emplace_back(data->dims[len - 1], 0);
  for (std::size_t n = 2; n < len; ++n) {
    if (!(data->d[n - 1] * data->d[n]).is_zero()) throw std::invalid_argument("complex: d∘d ≠ 0 at degree " + std::to_string(n));
  }
  data_ = data;
}

ChainComplex ChainComplex::sphere(Ground ground, std::size_t n, std::size_t rank) {
  std::vector<std::size_t> dims(n + 1, 0);
  dims[n] = rank;
  std::vector<SparseMatrix> d;
  for (std::size_t k = 0; k < n; ++k) d.emplace_back(dims[k], dims[k + 1]);
  return ChainComplex(ground, dims, d);
}

ChainComplex ChainComplex::disk(Ground ground, std::size_t n) {
  if (n == 0) throw std::invalid_argument("disk needs n ≥ 1");
  std::vector<std::size_t> dims(n + 1, 0);
  dims[n] = dims[n - 1] = 1;
  std::vector<SparseMatrix> d;
  for (std::size_t k = 0; k < n; ++k) d.emplace_back(dims[k], dims[k + 1]);
  d[n - 1] = SparseMatrix::identity(1);
  return ChainComplex(ground, dims, d);
}

const SparseMatrix& ChainComplex::d(std::size_t n) const {
  if (n < data_->d.size()) return data_->d[n];
  return empty_matrix();
}

std::size_t ChainComplex::total_dim() const {
  std::size_t t = 0;
  for (auto v : data_->dims) t += v;
  return t;
}

ChainComplex ChainComplex::trimmed() const {
  std::size_t len = length();
  while (len > 0 && dim(len - 1) == 0) --len;
  if (len == length()) return *this;
  if (len == 0) return ChainComplex(ground());
  return truncated(len - 1);
}

ChainComplex ChainComplex::truncated(std::size_t max_degree) const {
  if (max_degree + 1 >= length()) return *this;
  std::vector<std::size_t> dims(data_->dims.begin(), data_->dims.begin() + max_degree + 1);
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n <= max_degree; ++n) d.push_back(data_->d[n]);
  return ChainComplex(ground(), dims, d);
}

bool ChainComplex::operator==(const ChainComplex& other) const {
  if (data_ == other.data_) return true;
  if (ground() != other.ground()) return false;
  std::size_t len = std::max(length(), other.length());
  for (std::size_t n = 0; n < len; ++n) {
    if (dim(n) != other.dim(n)) return false;
  }
  for (std::size_t n = 1; n < len; ++n) {
    if (dim(n) == 0 || dim(n - 1) == 0) continue;
    if (d(n) != other.d(n)) return false;
  }
  return true;
}

std::string ChainComplex::describe() const {
  std::ostringstream os;
  os << to_string(ground()) << "[";
  for (std::size_t n = 0; n < length(); ++n) os << (n ? "," : "") << dim(n);
  os << "]";
  return os.str();
}

}  // namespace mb
