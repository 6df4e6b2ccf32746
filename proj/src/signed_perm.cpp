#include "weylrestrict/signed_perm.hpp"

#include <sstream>

#include "weylrestrict/errors.hpp"

namespace wr {

SignedPerm::SignedPerm(int n) : n_(n) {
  if (n < 0 || n > kMaxDim) throw DimensionError("signed permutation dimension out of range");
  for (int j = 0; j < n; ++j) image_[j] = static_cast<std::uint8_t>(j);
}

SignedPerm::SignedPerm(const std::vector<int>& image, const std::vector<int>& signs)
    : SignedPerm(static_cast<int>(image.size())) {
  if (signs.size() != image.size()) throw DimensionError("image and sign vectors differ in length");
  std::uint32_t seen = 0;
  for (int j = 0; j < n_; ++j) {
    int s = image[j];
    if (s < 0 || s >= n_ || (seen >> s) & 1) throw NotSignedPermError("image is not a permutation");
    seen |= 1u << s;
    image_[j] = static_cast<std::uint8_t>(s);
    if (signs[j] == -1)
      neg_ |= 1u << j;
    else if (signs[j] != 1)
      throw NotSignedPermError("signs must be +1 or -1");
  }
}

SignedPerm SignedPerm::transposition(int n, int a, int b) {
  SignedPerm w(n);
  std::swap(w.image_[a], w.image_[b]);
  return w;
}

SignedPerm SignedPerm::sign_change(int n, int i) {
  SignedPerm w(n);
  w.neg_ = 1u << i;
  return w;
}

SignedPerm SignedPerm::minus_identity(int n) {
  SignedPerm w(n);
  w.neg_ = n ? (1u << n) - 1 : 0;
  return w;
}

SignedPerm SignedPerm::from_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw NotSignedPermError("non-square matrix");
  int n = static_cast<int>(m.rows());
  std::vector<int> image(n, -1), signs(n, 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Rational& x = m(i, j);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || image[j] != -1) throw NotSignedPermError("matrix is not a signed permutation");
      image[j] = i;
      signs[i] = x == 1 ? 1 : -1;
    }
    if (image[j] == -1) throw NotSignedPermError("zero column");
  }
  return SignedPerm(image, signs);
}

int SignedPerm::preimage(int i) const {
  for (int j = 0; j < n_; ++j)
    if (image_[j] == i) return j;
  throw std::logic_error("corrupt signed permutation");
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (n_ != o.n_) throw DimensionError("composing signed permutations of different dimension");
  SignedPerm r(n_);
  // e_i = ev_i * ew_{sv^-1(i)}
  for (int j = 0; j < n_; ++j) {
    int mid = o.image_[j];
    int out = image_[mid];
    r.image_[j] = static_cast<std::uint8_t>(out);
    bool neg = ((neg_ >> out) & 1) ^ ((o.neg_ >> mid) & 1);
    if (neg) r.neg_ |= 1u << out;
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r(n_);
  for (int j = 0; j < n_; ++j) {
    int s = image_[j];
    r.image_[s] = static_cast<std::uint8_t>(j);
    if ((neg_ >> s) & 1) r.neg_ |= 1u << j;
  }
  return r;
}

int SignedPerm::perm_sign() const {
  int sgn = 1;
  std::uint32_t visited = 0;
  for (int j = 0; j < n_; ++j) {
    if ((visited >> j) & 1) continue;
    int len = 0;
    for (int c = j; !((visited >> c) & 1); c = image_[c]) {
      visited |= 1u << c;
      ++len;
    }
    if (len % 2 == 0) sgn = -sgn;
  }
  return sgn;
}

int SignedPerm::sign_product() const { return __builtin_popcount(neg_) % 2 ? -1 : 1; }

bool SignedPerm::is_identity() const {
  if (neg_) return false;
  for (int j = 0; j < n_; ++j)
    if (image_[j] != j) return false;
  return true;
}

CoordVector SignedPerm::apply(const CoordVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw DimensionError("signed permutation applied to wrong dimension");
  CoordVector y(n_);
  for (int j = 0; j < n_; ++j) {
    int i = image_[j];
    y[i] = (neg_ >> i) & 1 ? -x[j] : x[j];
  }
  return y;
}

RationalMatrix SignedPerm::matrix() const {
  RationalMatrix m(n_, n_);
  for (int j = 0; j < n_; ++j) m(image_[j], j) = sign(image_[j]);
  return m;
}

bool SignedPerm::stabilizes_prefix(int m) const {
  for (int j = 0; j < m; ++j)
    if (image_[j] >= m) return false;
  return true;
}

SignedPerm SignedPerm::restrict_prefix(int m) const {
  if (!stabilizes_prefix(m)) throw std::logic_error("element does not stabilize the coordinate prefix");
  SignedPerm r(m);
  for (int j = 0; j < m; ++j) r.image_[j] = image_[j];
  r.neg_ = neg_ & ((1u << m) - 1);
  return r;
}

std::uint64_t SignedPerm::key() const {
  // Injective for n <= 12 (48 bits of images, 12 sign bits); a hash beyond that.
  std::uint64_t k = 0;
  for (int j = 0; j < n_; ++j) k ^= static_cast<std::uint64_t>(image_[j]) << ((4 * j) % 48);
  return k ^ (static_cast<std::uint64_t>(neg_) << 48) ^ (static_cast<std::uint64_t>(neg_) >> 12);
}

bool SignedPerm::operator==(const SignedPerm& o) const {
  return n_ == o.n_ && neg_ == o.neg_ && image_ == o.image_;
}

bool SignedPerm::operator<(const SignedPerm& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (image_ != o.image_) return image_ < o.image_;
  return neg_ < o.neg_;
}

std::vector<int> SignedPerm::signs() const {
  std::vector<int> s(n_);
  for (int i = 0; i < n_; ++i) s[i] = sign(i);
  return s;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < n_; ++j) {
    if (j) os << " ";
    os << (sign(image_[j]) < 0 ? "-" : "+") << image_[j] + 1;
  }
  os << "]";
  return os.str();
}

}  // namespace wr
