#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdet/permutations.hpp"
#include "qdet/scalar.hpp"

namespace qdet {

class BraidedSpace;

/// Index word (i1..ik), letters 1..N.  Lexicographic order throughout.
using TensorWord = std::vector<int>;

int64_t pack_word(const TensorWord& w, int alphabet);
TensorWord unpack_word(int64_t code, int alphabet, int length);

/// Element of V^{otimes k} as a sparse word -> coefficient map.
class TensorVector {
public:
  explicit TensorVector(int degree = 0) : degree_(degree) {}
  static TensorVector basis_vector(TensorWord w);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorWord, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const TensorWord& w) const;

  void add_term(const TensorWord& w, const RatFunc& c);

  TensorVector operator+(const TensorVector& o) const;
  TensorVector operator-(const TensorVector& o) const;
  TensorVector scaled(const RatFunc& c) const;
  TensorVector tensor(const TensorVector& o) const;  // degrees add

  std::string str() const;
  bool operator==(const TensorVector&) const = default;

private:
  int degree_;
  std::map<TensorWord, RatFunc> terms_;
};

/// Linear map V^{otimes k} -> V^{otimes k} (or between equal-degree tensor
/// powers), stored row-wise: rows()[source] = image vector.  Zero rows are
/// never stored.
class SparseOperator {
public:
  explicit SparseOperator(int degree = 0) : degree_(degree) {}
  static SparseOperator identity(int alphabet, int degree);

  int degree() const { return degree_; }
  bool is_zero() const { return rows_.empty(); }
  const std::map<TensorWord, TensorVector>& rows() const { return rows_; }

  void set_row(const TensorWord& w, TensorVector image);
  void add_to_row(const TensorWord& w, const TensorVector& image);

  TensorVector apply(const TensorVector& x) const;
  TensorVector apply_word(const TensorWord& w) const;

  /// this after other: (f.compose(g))(x) = f(g(x)).
  SparseOperator compose(const SparseOperator& g) const;
  SparseOperator tensor(const SparseOperator& o, int alphabet) const;
  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator scaled(const RatFunc& c) const;

  bool operator==(const SparseOperator&) const = default;

private:
  int degree_;
  std::map<TensorWord, TensorVector> rows_;
};

std::vector<TensorWord> all_words(int alphabet, int length);

/// sigma acting on adjacent slots i, i+1 of V^{otimes k}.
SparseOperator sigma_i(const BraidedSpace& space, int k, int i);

/// sigma_w along the deterministic reduced word of w; memoized per (k, w).
SparseOperator sigma_w(const BraidedSpace& space, int k, const Perm& w);
SparseOperator sigma_word(const BraidedSpace& space, int k,
                          const std::vector<int>& word);

enum class ShuffleSign { Plus, Minus };

/// The weighted shuffle operator on V^{otimes(i1+...+ik)} including the
/// factorial prefactor (i1)!...(ik)!/(i1+...+ik)! taken at base q^{-2}.
SparseOperator shuffle_op(const BraidedSpace& space,
                          const std::vector<int>& parts, ShuffleSign sign);

/// Quantum antisymmetrizer A^(k), built by the recursion
/// A^(k+1) = shuffle_{k,1}(A^(k) tensor I); memoized per (space, k).
SparseOperator antisymmetrizer(const BraidedSpace& space, int k);

}  // namespace qdet
