#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qdet/braiding.hpp"
#include "qdet/tensor_ops.hpp"

namespace qdet {

class ExteriorBasis;
struct StructureConstants;
class Presentation;

/// Shared per-space memoization.  Inserts are idempotent (values depend only
/// on the key), so the coarse mutex simply serializes construction.
struct SpaceCaches {
  std::mutex mutex;
  std::optional<BraidingFlags> flags;
  std::map<std::pair<int, std::vector<int>>,
           std::shared_ptr<const SparseOperator>>
      sigma_w;  // (degree, one-line images)
  std::map<int, std::shared_ptr<const SparseOperator>> antisym;
  std::map<std::pair<int, int>, std::shared_ptr<const ExteriorBasis>>
      basis;  // (degree, flavor)
  std::map<std::tuple<int, int, int>, std::shared_ptr<const StructureConstants>>
      constants;  // (m, n, flavor)
  std::shared_ptr<const Presentation> frt;
  std::shared_ptr<const std::vector<TensorVector>> hecke_kernel;
};

}  // namespace qdet
