#include "lieschur/homology.hpp"

namespace lieschur {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

ExteriorBasis::ExteriorBasis(Index n, Index k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw Error(Errc::invalid_argument, "exterior basis with negative size");
  binomials_.assign(static_cast<std::size_t>(n + 1), std::vector<Index>(static_cast<std::size_t>(k + 1), 0));
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; b <= k; ++b) binomials_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binomial(a, b);
  size_ = binomial(n, k);
}

Index ExteriorBasis::position(std::span<const Index> subset) const {
  if (static_cast<Index>(subset.size()) != k_)
    throw Error(Errc::dimension_mismatch, "subset of wrong degree");
  Index pos = 0;
  Index previous = -1;
  for (Index t = 0; t < k_; ++t) {
    const Index s = subset[static_cast<std::size_t>(t)];
    if (s <= previous || s >= n_) throw Error(Errc::index_out_of_range, "subset not strictly increasing in range");
    // subsets whose t-th element is smaller than s come first
    for (Index v = previous + 1; v < s; ++v)
      pos += binomials_[static_cast<std::size_t>(n_ - 1 - v)][static_cast<std::size_t>(k_ - 1 - t)];
    previous = s;
  }
  return pos;
}

std::vector<Index> ExteriorBasis::subset(Index position) const {
  if (position < 0 || position >= size_) throw Error(Errc::index_out_of_range, "exterior position out of range");
  std::vector<Index> out;
  Index v = 0;
  for (Index t = 0; t < k_; ++t) {
    for (;; ++v) {
      const Index block = binomials_[static_cast<std::size_t>(n_ - 1 - v)][static_cast<std::size_t>(k_ - 1 - t)];
      if (position < block) break;
      position -= block;
    }
    out.push_back(v++);
  }
  return out;
}

}  // namespace lieschur
