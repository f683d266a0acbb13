#pragma once

#include <compare>
#include <vector>

#include "qdet/scalar.hpp"

namespace qdet {

/// Permutation of {1..n} in one-line notation: images()[i-1] = w(i).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates bijection
  static Perm identity(int n);
  static Perm transposition(int n, int i);  // s_i in S_n, 1 <= i <= n-1

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Function composition: (w*u)(i) = w(u(i)).
  Perm operator*(const Perm& u) const;
  Perm inverse() const;

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

/// Inversion count l(w) = #{(i,j) : i<j, w(i)>w(j)}.
int length(const Perm& w);

/// Deterministic reduced word: repeatedly undo the descent at the largest
/// position.  The returned word [i1..il] satisfies w = s_{i1} ... s_{il}
/// with l = l(w).
std::vector<int> reduced_word(const Perm& w);

Perm perm_from_word(int n, const std::vector<int>& word);

/// All reduced words of w (small degrees only; used for Matsumoto checks).
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

struct ShuffleSet {
  std::vector<int> parts;
  std::vector<Perm> members;
};

/// All (i1,...,ik)-shuffles of S_{i1+...+ik}, enumerated by choosing the
/// ascending value blocks directly (never by filtering the full group).
ShuffleSet shuffles(const std::vector<int>& parts);

std::vector<Perm> symmetric_group(int n);

/// Young subgroup S_{i1} x ... x S_{ik} inside S_{i1+...+ik}.
std::vector<Perm> young_subgroup(const std::vector<int>& parts);

/// Embed w acting on positions offset+1 .. offset+deg(w) of {1..n}.
Perm embed_at(const Perm& w, int offset, int n);

/// True iff multiplication S1 x S2 -> S3 is a bijection with additive
/// lengths throughout.
bool is_reduced_decomposition(const std::vector<Perm>& s1,
                              const std::vector<Perm>& s2,
                              const std::vector<Perm>& s3);

/// Block transposition sending 1..m to n+1..n+m and m+1..m+n to 1..n.
Perm chi(int m, int n);

Perm longest_element(int n);

/// l(J;K) = #{(j,k) : j in J, k in K, j > k}.
int set_inversions(const std::vector<int>& J, const std::vector<int>& K);

}  // namespace qdet
