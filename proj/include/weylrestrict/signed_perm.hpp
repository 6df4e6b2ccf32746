#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weylrestrict/linalg.hpp"
#include "weylrestrict/rational.hpp"

namespace wr {

// A signed permutation matrix acting on R^N by (w.x)_{s(j)} = e_{s(j)} x_j,
// i.e. (w.x)_i = e_i x_{s^-1(i)}.
class SignedPerm {
 public:
  static constexpr int kMaxDim = 15;

  SignedPerm() = default;
  explicit SignedPerm(int n);  // identity
  // image[j] = s(j); signs[i] = e_i, attached to the output coordinate i.
  SignedPerm(const std::vector<int>& image, const std::vector<int>& signs);

  static SignedPerm transposition(int n, int a, int b);
  static SignedPerm sign_change(int n, int i);
  static SignedPerm minus_identity(int n);
  // NotSignedPermError when the matrix is not a signed permutation.
  static SignedPerm from_matrix(const RationalMatrix& m);

  int dim() const { return n_; }
  int image(int j) const { return image_[j]; }
  int preimage(int i) const;
  int sign(int i) const { return (neg_ >> i) & 1 ? -1 : 1; }

  // (this * o).x = this.(o.x)
  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;

  int perm_sign() const;
  int sign_product() const;
  int det() const { return perm_sign() * sign_product(); }
  bool is_identity() const;

  CoordVector apply(const CoordVector& x) const;
  RationalMatrix matrix() const;

  // Restriction to the first m coordinates; requires those to be stable.
  bool stabilizes_prefix(int m) const;
  SignedPerm restrict_prefix(int m) const;

  std::uint64_t key() const;
  bool operator==(const SignedPerm& o) const;
  bool operator!=(const SignedPerm& o) const { return !(*this == o); }
  bool operator<(const SignedPerm& o) const;

  std::vector<int> images() const { return {image_.begin(), image_.begin() + n_}; }
  std::vector<int> signs() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDim> image_{};
  std::uint32_t neg_ = 0;  // bit i set when e_i = -1
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const { return std::hash<std::uint64_t>{}(w.key()); }
};

}  // namespace wr
