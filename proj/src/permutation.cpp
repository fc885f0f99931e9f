#include "tgp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tgp/error.hpp"

namespace tgp {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
      throw precondition_error("not a permutation");
    seen[x - 1] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int d, int i) {
  if (i < 1 || i >= d) throw precondition_error("transposition index out of range");
  Permutation p = identity(d);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree())
    throw precondition_error("permutation degree mismatch");
  std::vector<int> v(img_.size());
  for (size_t j = 0; j < img_.size(); ++j) v[j] = q.img_[img_[j] - 1];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t j = 0; j < img_.size(); ++j) v[img_[j] - 1] = static_cast<int>(j) + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (size_t j = 0; j < img_.size(); ++j)
    if (img_[j] != static_cast<int>(j) + 1) return false;
  return true;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lens;
  for (size_t j = 0; j < img_.size(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    size_t k = j;
    while (!seen[k]) {
      seen[k] = true;
      k = img_[k] - 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type().parts())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble-sort the image list to the identity with position swaps; each
  // swap at positions (i, i+1) is a left factor s_i, and the collected
  // word multiplies back left to right to *this.
  std::vector<int> v = img_;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return word;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << "[";
  for (int j = 1; j <= p.degree(); ++j) {
    if (j > 1) os << " ";
    os << p(j);
  }
  return os << "]";
}

Permutation class_representative(const Partition& cycle_type) {
  int d = cycle_type.size();
  std::vector<int> v(d);
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int k = 0; k < len; ++k) v[start + k] = start + 1 + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(v));
}

}  // namespace tgp
