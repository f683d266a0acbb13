#include "qdet/linalg.hpp"

#include <algorithm>
#include <map>

namespace qdet {

void SparseRow::sort_and_prune() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, RatFunc>> out;
  out.reserve(terms.size());
  for (auto& [c, v] : terms) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(c, std::move(v));
    }
  }
  terms = std::move(out);
}

SparseRow row_sub_scaled(const SparseRow& a, const RatFunc& f,
                         const SparseRow& b) {
  SparseRow out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.terms.push_back(a.terms[i]);
      ++i;
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.terms.emplace_back(b.terms[j].first, -(f * b.terms[j].second));
      ++j;
    } else {
      RatFunc v = a.terms[i].second - f * b.terms[j].second;
      if (!v.is_zero()) out.terms.emplace_back(a.terms[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Echelon::Echelon(int ncols) : ncols_(ncols), row_of_pivot_(static_cast<size_t>(ncols), -1) {}

bool Echelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  RatFunc lead = row.terms.front().second;
  if (!lead.is_one()) {
    RatFunc inv = lead.inverse();
    for (auto& [c, v] : row.terms) v *= inv;
  }
  int pivot = row.lead_col();
  row_of_pivot_[static_cast<size_t>(pivot)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseRow Echelon::reduce(SparseRow row) const {
  return reduce_tracked(std::move(row), nullptr);
}

SparseRow Echelon::reduce_tracked(
    SparseRow row, std::vector<std::pair<int, RatFunc>>* multipliers) const {
  // Work front-to-back: subtracting a basis row only introduces columns
  // strictly greater than the eliminated one, so one pass over an ordered
  // map terminates.
  std::map<int, RatFunc> work(row.terms.begin(), row.terms.end());
  SparseRow out;
  while (!work.empty()) {
    auto it = work.begin();
    int col = it->first;
    RatFunc coeff = std::move(it->second);
    work.erase(it);
    if (coeff.is_zero()) continue;
    int r = row_of_pivot_[static_cast<size_t>(col)];
    if (r < 0) {
      out.terms.emplace_back(col, std::move(coeff));
      continue;
    }
    const SparseRow& base = rows_[static_cast<size_t>(r)];
    if (multipliers) multipliers->emplace_back(r, coeff);
    auto bt = base.terms.begin();
    ++bt;  // skip the pivot itself
    for (; bt != base.terms.end(); ++bt) {
      RatFunc& slot = work[bt->first];
      slot -= coeff * bt->second;
      if (slot.is_zero()) work.erase(bt->first);
    }
  }
  return out;
}

}  // namespace qdet
