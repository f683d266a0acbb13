#include "qdet/permutations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qdet {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) ||
        seen[static_cast<size_t>(v - 1)])
      fail(ErrorCode::InvalidArgument, "not a permutation");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) fail(ErrorCode::InvalidArgument, "bad transposition");
  Perm w = identity(n);
  std::swap(w.images_[static_cast<size_t>(i - 1)],
            w.images_[static_cast<size_t>(i)]);
  return w;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& u) const {
  if (degree() != u.degree())
    fail(ErrorCode::DegreeMismatch, "permutation degree mismatch");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i)
    v[static_cast<size_t>(i - 1)] = (*this)(u(i));
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i)
    v[static_cast<size_t>((*this)(i)-1)] = i;
  return Perm(std::move(v));
}

int length(const Perm& w) {
  int n = w.degree();
  int count = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

std::vector<int> reduced_word(const Perm& w) {
  Perm cur = w;
  std::vector<int> undo;
  for (;;) {
    int pos = 0;
    for (int i = cur.degree() - 1; i >= 1; --i) {
      if (cur(i) > cur(i + 1)) {
        pos = i;
        break;
      }
    }
    if (pos == 0) break;
    undo.push_back(pos);
    cur = cur * Perm::transposition(cur.degree(), pos);
  }
  // cur = w * s_{undo[0]} * ... * s_{undo[last]} = e, so
  // w = s_{undo[last]} * ... * s_{undo[0]}
  std::reverse(undo.begin(), undo.end());
  return undo;
}

Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm w = Perm::identity(n);
  for (int i : word) w = w * Perm::transposition(n, i);
  return w;
}

namespace {

void reduced_words_rec(const Perm& w, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  // left descents: l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1)
  Perm winv = w.inverse();
  for (int i = 1; i < w.degree(); ++i) {
    if (winv(i) > winv(i + 1)) {
      prefix.push_back(i);
      reduced_words_rec(Perm::transposition(w.degree(), i) * w, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  reduced_words_rec(w, prefix, out);
  return out;
}

namespace {

// Choose the ascending value blocks for each part recursively: the shuffle
// is determined by the ordered set partition of {1..n} into blocks whose
// positions are the consecutive part ranges.
void shuffles_rec(const std::vector<int>& parts, size_t part_idx,
                  std::vector<int>& remaining, std::vector<int>& images,
                  std::vector<Perm>& out) {
  if (part_idx == parts.size()) {
    out.emplace_back(images);
    return;
  }
  int take = parts[part_idx];
  int m = static_cast<int>(remaining.size());
  // iterate over take-subsets of `remaining` (values ascend automatically)
  std::vector<int> idx(static_cast<size_t>(take));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<int> rest;
    size_t k = 0;
    size_t base = images.size();
    for (int i = 0; i < m; ++i) {
      if (k < idx.size() && idx[k] == i) {
        images.push_back(remaining[static_cast<size_t>(i)]);
        ++k;
      } else {
        rest.push_back(remaining[static_cast<size_t>(i)]);
      }
    }
    shuffles_rec(parts, part_idx + 1, rest, images, out);
    images.resize(base);
    // next combination
    int j = take - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == m - take + j) --j;
    if (j < 0) break;
    ++idx[static_cast<size_t>(j)];
    for (int l = j + 1; l < take; ++l)
      idx[static_cast<size_t>(l)] = idx[static_cast<size_t>(l - 1)] + 1;
  }
}

}  // namespace

ShuffleSet shuffles(const std::vector<int>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "empty composition");
  int n = 0;
  for (int p : parts) {
    if (p < 1) fail(ErrorCode::InvalidArgument, "composition entries must be >= 1");
    n += p;
  }
  std::vector<int> remaining(static_cast<size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  ShuffleSet s;
  s.parts = parts;
  std::vector<int> images;
  shuffles_rec(parts, 0, remaining, images, s.members);
  for (const Perm& w : s.members) {
    int pos = 1;
    for (int p : parts) {
      for (int i = pos; i < pos + p - 1; ++i)
        if (w(i) >= w(i + 1))
          fail(ErrorCode::InvalidArgument, "shuffle enumeration broke runs");
      pos += p;
    }
  }
  return s;
}

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm embed_at(const Perm& w, int offset, int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = 1; i <= w.degree(); ++i)
    v[static_cast<size_t>(offset + i - 1)] = offset + w(i);
  return Perm(std::move(v));
}

std::vector<Perm> young_subgroup(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::vector<Perm> acc{Perm::identity(n)};
  int offset = 0;
  for (int p : parts) {
    std::vector<Perm> block = symmetric_group(p);
    std::vector<Perm> next;
    next.reserve(acc.size() * block.size());
    for (const Perm& a : acc)
      for (const Perm& b : block) next.push_back(a * embed_at(b, offset, n));
    acc = std::move(next);
    offset += p;
  }
  return acc;
}

bool is_reduced_decomposition(const std::vector<Perm>& s1,
                              const std::vector<Perm>& s2,
                              const std::vector<Perm>& s3) {
  if (s1.empty() || s2.empty()) return s3.empty();
  std::set<Perm> target(s3.begin(), s3.end());
  if (s1.size() * s2.size() != target.size()) return false;
  std::set<Perm> seen;
  for (const Perm& a : s1) {
    for (const Perm& b : s2) {
      Perm p = a * b;
      if (length(p) != length(a) + length(b)) return false;
      if (!target.count(p)) return false;
      if (!seen.insert(p).second) return false;
    }
  }
  return seen.size() == target.size();
}

Perm chi(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidArgument, "chi needs m,n >= 1");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(m + n));
  for (int i = 1; i <= m; ++i) v.push_back(n + i);
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return Perm(std::move(v));
}

Perm longest_element(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i - 1)] = n + 1 - i;
  return Perm(std::move(v));
}

int set_inversions(const std::vector<int>& J, const std::vector<int>& K) {
  int count = 0;
  for (int j : J)
    for (int k : K)
      if (j > k) ++count;
  return count;
}

}  // namespace qdet
