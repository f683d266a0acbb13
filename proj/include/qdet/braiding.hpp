#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qdet/tensor_ops.hpp"

namespace qdet {

struct SpaceCaches;

struct BraidingFlags {
  bool braid_ok = false;
  bool invertible = false;
  bool hecke = false;
};

/// Braided vector space (V, sigma): dimension N plus the sparse coefficient
/// tensor sigma(v_i (x) v_j) = sum sigma_ij^kl v_k (x) v_l over Q(q).
/// Values are immutable after construction; copies share the memo caches.
class BraidedSpace {
public:
  BraidedSpace(int dim, std::map<std::pair<int, int>, TensorVector> rows);

  int dim() const { return dim_; }
  /// Row of sigma for source pair (i,j); nullptr when the image is zero.
  const TensorVector* sigma_row(int i, int j) const;
  const std::map<std::pair<int, int>, TensorVector>& sigma() const {
    return *sigma_;
  }

  SpaceCaches& caches() const { return *caches_; }
  /// Stable identity for memoization keyed on the underlying tensor.
  const void* id() const { return sigma_.get(); }

private:
  int dim_;
  std::shared_ptr<const std::map<std::pair<int, int>, TensorVector>> sigma_;
  std::shared_ptr<SpaceCaches> caches_;
};

/// Exact symbolic checks of the braid relation (on V^{x3}), invertibility of
/// the N^2 x N^2 matrix, and the Hecke relation (sigma-q)(sigma+q^{-1})=0.
/// Results are cached on the space.
BraidingFlags verify(const BraidedSpace& space);

/// Jimbo's braiding of type A_{N-1}.
BraidedSpace jimbo_a(int N);

/// The 4-dimensional type-C braiding with its 16 explicit rules.
BraidedSpace type_c_example();

struct CartanData {
  std::vector<std::vector<int>> a;  // symmetrizable generalized Cartan matrix
  std::vector<int> d;               // positive symmetrizers
  void validate() const;
};

CartanData cartan_a2();
CartanData cartan_b2();

/// Diagonal braiding sigma(v_i (x) v_j) = -q^{d_i a_ij + 1} v_j (x) v_i.
BraidedSpace diagonal_cartan(const CartanData& cartan);

/// Braiding spec document (UTF-8 JSON):
///   {"dimension": N, "entries": [{"from": [i,j], "to": [k,l],
///    "coeff": "<expr>"}...]}
/// with 1-based indices, repeated (from,to) pairs summed, omitted targets
/// zero.  verify() is run before returning.
BraidedSpace load_spec(const std::string& json_text);
std::string emit_spec(const BraidedSpace& space);

struct BraidingSource {
  BraidedSpace space;
  std::string name;
  std::optional<int> known_rank;
};

/// Resolve a --braiding argument: a builtin name (jimbo-a:N, type-c,
/// cartan:A2, cartan:B2, cartan:FILE) or a path to a braiding spec file.
BraidingSource open_braiding(const std::string& source);

}  // namespace qdet
