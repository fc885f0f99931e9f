#include "tgp/character.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace tgp {

namespace {

/// Murnaghan-Nakayama via beta-sets: removing a border strip of length k
/// is subtracting k from one beta number while keeping them distinct; the
/// height of the strip is the number of beta numbers jumped over.
long long mn_value(const Partition& lam, const std::vector<int>& cycle,
                   size_t ci, std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (ci == cycle.size()) return lam.size() == 0 ? 1 : 0;
  auto key = std::make_pair(lam, ci);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int k = cycle[ci];
  int l = lam.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lam.part(i + 1) + (l - 1 - i);
  // beta is strictly decreasing.
  long long total = 0;
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    bool clash = false;
    int jumped = 0;
    for (int j = 0; j < l; ++j) {
      if (j == i) continue;
      if (beta[j] == nb) {
        clash = true;
        break;
      }
      if (beta[j] > nb && beta[j] < beta[i]) ++jumped;
    }
    if (clash) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts(l);
    for (int j = 0; j < l; ++j) parts[j] = nbeta[j] - (l - 1 - j);
    Partition next(parts);
    long long sub = mn_value(next, cycle, ci + 1, memo);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

long long centralizer_order(const Partition& cls) {
  long long z = 1;
  std::map<int, int> mult;
  for (int p : cls.parts()) ++mult[p];
  for (auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

}  // namespace

CharacterTable::CharacterTable(int d) : d_(d) {
  labels_ = partitions_of(d);
  int n = static_cast<int>(labels_.size());
  chi_.assign(n, std::vector<long long>(n, 0));
  class_size_.assign(n, 0);
  long long dfact = factorial(d);
  for (int c = 0; c < n; ++c) class_size_[c] = dfact / centralizer_order(labels_[c]);
  for (int r = 0; r < n; ++r) {
    std::map<std::pair<Partition, size_t>, long long> memo;
    for (int c = 0; c < n; ++c)
      chi_[r][c] = mn_value(labels_[r], labels_[c].parts(), 0, memo);
  }
}

const CharacterTable& CharacterTable::get(int d) {
  if (d < 1 || d > 8)
    throw precondition_error("character table supported for 1 <= d <= 8");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end())
    it = cache.emplace(d, std::unique_ptr<CharacterTable>(new CharacterTable(d))).first;
  return *it->second;
}

int CharacterTable::index_of(const Partition& p) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == p) return static_cast<int>(i);
  throw precondition_error("partition is not a label of S_" + std::to_string(d_));
}

long long CharacterTable::value(const Partition& irrep, const Partition& cls) const {
  return chi_[index_of(irrep)][index_of(cls)];
}

long long CharacterTable::class_size(const Partition& cls) const {
  return class_size_[index_of(cls)];
}

Rat ClassFunction::at(const Partition& cls) const {
  auto it = values.find(cls);
  return it == values.end() ? Rat(0) : it->second;
}

long long CharacterVector::at(const Partition& p) const {
  auto it = mult.find(p);
  return it == mult.end() ? 0 : it->second;
}

void CharacterVector::add(const Partition& p, long long m) {
  if (m == 0) return;
  auto it = mult.find(p);
  if (it == mult.end()) {
    mult.emplace(p, m);
  } else {
    it->second += m;
    if (it->second == 0) mult.erase(it);
  }
}

bool CharacterVector::operator==(const CharacterVector& o) const {
  return d == o.d && mult == o.mult;
}

std::string CharacterVector::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, m] : mult) {
    if (!first) os << ", ";
    first = false;
    os << "(" << p.str() << "): " << m;
  }
  os << "}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CharacterVector& v) {
  return os << v.str();
}

CharacterVector trivial_character(int d) {
  CharacterVector v;
  v.d = d;
  v.add(Partition({d}), 1);
  return v;
}

CharacterVector sign_character(int d) {
  CharacterVector v;
  v.d = d;
  v.add(Partition(std::vector<int>(d, 1)), 1);
  return v;
}

CharacterVector irreducible_character(const Partition& lam) {
  CharacterVector v;
  v.d = lam.size();
  v.add(lam, 1);
  return v;
}

ClassFunction to_class_function(const CharacterVector& v) {
  const CharacterTable& T = CharacterTable::get(v.d);
  ClassFunction phi;
  phi.d = v.d;
  for (const Partition& cls : T.labels()) {
    Rat val(0);
    for (const auto& [mu, m] : v.mult) val += rat_ll(m) * rat_ll(T.value(mu, cls));
    phi.values[cls] = val;
  }
  return phi;
}

CharacterVector decompose(const ClassFunction& phi) {
  const CharacterTable& T = CharacterTable::get(phi.d);
  long long dfact = factorial(phi.d);
  CharacterVector v;
  v.d = phi.d;
  for (const Partition& lam : T.labels()) {
    Rat m(0);
    for (const Partition& cls : T.labels())
      m += rat_ll(T.class_size(cls)) * phi.at(cls) * rat_ll(T.value(lam, cls));
    m /= rat_ll(dfact);
    if (m == 0) continue;
    if (!is_integer(m) || m < 0)
      throw integrity_error("multiplicity of (" + lam.str() +
                            ") is not a non-negative integer: " + rat_str(m));
    v.add(lam, rat_to_ll(m));
  }
  return v;
}

CharacterVector sign_twist(const CharacterVector& v) {
  CharacterVector out;
  out.d = v.d;
  for (const auto& [mu, m] : v.mult) out.add(transpose(mu), m);
  return out;
}

namespace {

/// Distinct splittings of the cycle-type multiset `rho` into a sub-multiset
/// of total d1 and its complement, with the product of binomial(m_k, j_k)
/// factors. Calls f(rho1, rho2, ways).
template <typename F>
void split_cycle_type(const Partition& rho, int d1, F&& f) {
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
  std::vector<int> take(items.size(), 0);
  auto rec = [&](auto&& self, size_t idx, int remaining, long long ways) -> void {
    if (idx == items.size()) {
      if (remaining != 0) return;
      std::vector<int> p1, p2;
      for (size_t i = 0; i < items.size(); ++i) {
        for (int k = 0; k < take[i]; ++k) p1.push_back(items[i].first);
        for (int k = 0; k < items[i].second - take[i]; ++k) p2.push_back(items[i].first);
      }
      std::sort(p1.rbegin(), p1.rend());
      std::sort(p2.rbegin(), p2.rend());
      f(Partition(p1), Partition(p2), ways);
      return;
    }
    auto [part, m] = items[idx];
    for (int j = 0; j <= m && j * part <= remaining; ++j) {
      take[idx] = j;
      self(self, idx + 1, remaining - j * part, ways * binomial(m, j));
    }
    take[idx] = 0;
  };
  rec(rec, 0, d1, 1);
}

}  // namespace

CharacterVector induced_character(const CharacterVector& v1,
                                  const CharacterVector& v2) {
  int d1 = v1.d, d2 = v2.d, d = d1 + d2;
  if (d1 == 0) return v2;
  if (d2 == 0) return v1;
  ClassFunction phi1 = to_class_function(v1);
  ClassFunction phi2 = to_class_function(v2);
  ClassFunction ind;
  ind.d = d;
  for (const Partition& rho : partitions_of(d)) {
    Rat val(0);
    split_cycle_type(rho, d1, [&](const Partition& r1, const Partition& r2,
                                  long long ways) {
      val += rat_ll(ways) * phi1.at(r1) * phi2.at(r2);
    });
    ind.values[rho] = val;
  }
  return decompose(ind);
}

long long character_dimension(const CharacterVector& v) {
  long long dim = 0;
  for (const auto& [mu, m] : v.mult) dim += m * hook_dimension(mu);
  return dim;
}

CharacterVector young_rule_character(const Partition& content) {
  CharacterVector v;
  v.d = content.size();
  for (const Partition& mu : partitions_of(content.size()))
    v.add(mu, kostka_number(mu, content));
  return v;
}

}  // namespace tgp
