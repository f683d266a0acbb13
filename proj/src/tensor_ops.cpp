#include "qdet/tensor_ops.hpp"

#include <sstream>

#include "qdet/braiding.hpp"
#include "space_caches.hpp"

namespace qdet {

int64_t pack_word(const TensorWord& w, int alphabet) {
  int64_t code = 0;
  for (int letter : w) code = code * alphabet + (letter - 1);
  return code;
}

TensorWord unpack_word(int64_t code, int alphabet, int length) {
  TensorWord w(static_cast<size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<int>(code % alphabet) + 1;
    code /= alphabet;
  }
  return w;
}

TensorVector TensorVector::basis_vector(TensorWord w) {
  TensorVector v(static_cast<int>(w.size()));
  v.terms_[std::move(w)] = RatFunc(1);
  return v;
}

RatFunc TensorVector::coeff(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void TensorVector::add_term(const TensorWord& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
  if (degree_ != o.degree_) fail(ErrorCode::DegreeMismatch, "tensor degree mismatch");
  TensorVector r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
  if (degree_ != o.degree_) fail(ErrorCode::DegreeMismatch, "tensor degree mismatch");
  TensorVector r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

TensorVector TensorVector::scaled(const RatFunc& c) const {
  TensorVector r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
  return r;
}

TensorVector TensorVector::tensor(const TensorVector& o) const {
  TensorVector r(degree_ + o.degree_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      TensorWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  }
  return r;
}

std::string TensorVector::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
               c.is_laurent() && c.num().coeffs().size() == 1;
    if (first) {
      first = false;
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    bool trivial = (cs == "1");
    if (!trivial) {
      if (!c.is_laurent() || c.num().coeffs().size() > 1) {
        os << "(" << cs << ") * ";
      } else {
        os << cs << " * ";
      }
    }
    bool fw = true;
    for (int letter : w) {
      if (!fw) os << ".";
      fw = false;
      os << "v" << letter;
    }
  }
  return os.str();
}

SparseOperator SparseOperator::identity(int alphabet, int degree) {
  SparseOperator op(degree);
  for (TensorWord& w : all_words(alphabet, degree)) {
    TensorVector v = TensorVector::basis_vector(w);
    op.rows_[std::move(w)] = std::move(v);
  }
  return op;
}

void SparseOperator::set_row(const TensorWord& w, TensorVector image) {
  if (image.is_zero())
    rows_.erase(w);
  else
    rows_[w] = std::move(image);
}

void SparseOperator::add_to_row(const TensorWord& w, const TensorVector& image) {
  auto it = rows_.find(w);
  if (it == rows_.end()) {
    if (!image.is_zero()) rows_[w] = image;
    return;
  }
  TensorVector v = it->second + image;
  if (v.is_zero())
    rows_.erase(it);
  else
    it->second = std::move(v);
}

TensorVector SparseOperator::apply(const TensorVector& x) const {
  TensorVector out(degree_);
  for (const auto& [w, c] : x.terms()) {
    auto it = rows_.find(w);
    if (it == rows_.end()) continue;
    for (const auto& [t, k] : it->second.terms()) out.add_term(t, c * k);
  }
  return out;
}

TensorVector SparseOperator::apply_word(const TensorWord& w) const {
  auto it = rows_.find(w);
  return it == rows_.end() ? TensorVector(degree_) : it->second;
}

SparseOperator SparseOperator::compose(const SparseOperator& g) const {
  if (degree_ != g.degree_)
    fail(ErrorCode::DegreeMismatch, "operator degree mismatch");
  SparseOperator out(degree_);
  for (const auto& [w, img] : g.rows_) {
    TensorVector v = apply(img);
    if (!v.is_zero()) out.rows_[w] = std::move(v);
  }
  return out;
}

SparseOperator SparseOperator::tensor(const SparseOperator& o) const {
  SparseOperator out(degree_ + o.degree_);
  for (const auto& [w1, v1] : rows_) {
    for (const auto& [w2, v2] : o.rows_) {
      TensorWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.rows_[std::move(w)] = v1.tensor(v2);
    }
  }
  return out;
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  if (degree_ != o.degree_)
    fail(ErrorCode::DegreeMismatch, "operator degree mismatch");
  SparseOperator out = *this;
  for (const auto& [w, v] : o.rows_) out.add_to_row(w, v);
  return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  return *this + o.scaled(RatFunc(-1));
}

SparseOperator SparseOperator::scaled(const RatFunc& c) const {
  SparseOperator out(degree_);
  if (c.is_zero()) return out;
  for (const auto& [w, v] : rows_) out.rows_[w] = v.scaled(c);
  return out;
}

std::vector<TensorWord> all_words(int alphabet, int length) {
  std::vector<TensorWord> out;
  int64_t total = 1;
  for (int i = 0; i < length; ++i) total *= alphabet;
  out.reserve(static_cast<size_t>(total));
  for (int64_t code = 0; code < total; ++code)
    out.push_back(unpack_word(code, alphabet, length));
  return out;
}

SparseOperator sigma_i(const BraidedSpace& space, int k, int i) {
  if (i < 1 || i > k - 1)
    fail(ErrorCode::InvalidArgument, "sigma_i position out of range");
  int N = space.dim();
  SparseOperator op(k);
  for (TensorWord& w : all_words(N, k)) {
    const TensorVector* row =
        space.sigma_row(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    if (!row) continue;
    TensorVector img(k);
    for (const auto& [pair, c] : row->terms()) {
      TensorWord t = w;
      t[static_cast<size_t>(i - 1)] = pair[0];
      t[static_cast<size_t>(i)] = pair[1];
      img.add_term(t, c);
    }
    op.set_row(w, std::move(img));
  }
  return op;
}

SparseOperator sigma_word(const BraidedSpace& space, int k,
                          const std::vector<int>& word) {
  SparseOperator acc = SparseOperator::identity(space.dim(), k);
  for (int i : word) acc = acc.compose(sigma_i(space, k, i));
  return acc;
}

SparseOperator sigma_w(const BraidedSpace& space, int k, const Perm& w) {
  if (w.degree() != k)
    fail(ErrorCode::InvalidArgument, "permutation degree must equal k");
  auto key = std::make_pair(k, w.images());
  SpaceCaches& caches = space.caches();
  {
    std::lock_guard lock(caches.mutex);
    auto it = caches.sigma_w.find(key);
    if (it != caches.sigma_w.end()) return *it->second;
  }
  SparseOperator op = sigma_word(space, k, reduced_word(w));
  auto shared = std::make_shared<const SparseOperator>(op);
  std::lock_guard lock(caches.mutex);
  caches.sigma_w.emplace(std::move(key), std::move(shared));
  return op;
}

SparseOperator shuffle_op(const BraidedSpace& space,
                          const std::vector<int>& parts, ShuffleSign sign) {
  int total = 0;
  for (int p : parts) total += p;
  RatFunc nu = RatFunc::q_power(-2);
  RatFunc prefactor(1);
  for (int p : parts) prefactor *= quantum_factorial(p, nu);
  prefactor = prefactor / quantum_factorial(total, nu);

  SparseOperator acc(total);
  for (const Perm& w : shuffles(parts).members) {
    int l = length(w);
    RatFunc coeff = RatFunc::q_power(-l);
    if (l % 2 == 1) coeff = -coeff;
    const Perm& use = sign == ShuffleSign::Plus ? w : w.inverse();
    acc = acc + sigma_w(space, total, use).scaled(coeff);
  }
  return acc.scaled(prefactor);
}

SparseOperator antisymmetrizer(const BraidedSpace& space, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "antisymmetrizer degree must be >= 1");
  SpaceCaches& caches = space.caches();
  {
    std::lock_guard lock(caches.mutex);
    auto it = caches.antisym.find(k);
    if (it != caches.antisym.end()) return *it->second;
  }
  SparseOperator op(k);
  if (k == 1) {
    op = SparseOperator::identity(space.dim(), 1);
  } else {
    SparseOperator prev = antisymmetrizer(space, k - 1);
    SparseOperator lifted =
        prev.tensor(SparseOperator::identity(space.dim(), 1));
    op = shuffle_op(space, {k - 1, 1}, ShuffleSign::Plus).compose(lifted);
  }
  auto shared = std::make_shared<const SparseOperator>(op);
  std::lock_guard lock(caches.mutex);
  caches.antisym.emplace(k, std::move(shared));
  return op;
}

}  // namespace qdet
