#include "tgp/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tgp {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw precondition_error("partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw precondition_error("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  d_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  if (s.empty()) return Partition{};
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad partition: " + s);
    parts.push_back(std::stoi(tok));
  }
  try {
    return Partition(std::move(parts));
  } catch (const precondition_error& e) {
    throw parse_error(std::string("bad partition: ") + s + " (" + e.what() + ")");
  }
}

std::string Partition::str() const {
  std::string s;
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << "(" << p.str() << ")";
}

Partition transpose(const Partition& lam) {
  std::vector<int> t;
  for (int i = 1; i <= lam.part(1); ++i) {
    int c = 0;
    for (int p : lam.parts())
      if (p >= i) ++c;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw precondition_error("dominance compares partitions of equal size");
  long long sl = 0, sm = 0;
  int k = std::max(lam.length(), mu.length());
  for (int i = 1; i <= k; ++i) {
    sl += lam.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

int m_lambda(const Partition& lam, int n) {
  if (n < 0 || n >= lam.length())
    throw precondition_error("m_lambda index out of range");
  int m = 0;
  for (int i = n + 1; i <= lam.length(); ++i) m += lam.part(i);
  return m;
}

long long n_stat(const Partition& mu) {
  long long n = 0;
  for (int j = 1; j <= mu.length(); ++j) n += static_cast<long long>(mu.part(j)) * (j - 1);
  return n;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw precondition_error("partitions_of: negative d");
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(d, d == 0 ? 1 : d, cur, out);
  return cache.emplace(d, std::move(out)).first->second;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

long long hook_dimension(const Partition& lam) {
  // d! divided by the product of hook lengths.
  long long num = factorial(lam.size());
  Partition t = transpose(lam);
  long long hooks = 1;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      hooks *= (lam.part(i) - j) + (t.part(j) - i) + 1;
  return num / hooks;
}

Word::Word(std::vector<int> letters) {
  for (int x : letters)
    if (x <= 0) throw precondition_error("word letters must be positive");
  letters_ = std::move(letters);
}

Word Word::parse(const std::string& s) {
  std::vector<int> letters;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad word: " + s);
    letters.push_back(std::stoi(tok));
  }
  try {
    return Word(std::move(letters));
  } catch (const precondition_error&) {
    throw parse_error("bad word: " + s);
  }
}

std::string Word::str() const {
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(letters_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

std::vector<int> Word::content() const {
  int mx = 0;
  for (int x : letters_) mx = std::max(mx, x);
  std::vector<int> c(mx, 0);
  for (int x : letters_) ++c[x - 1];
  return c;
}

Partition Word::content_partition() const {
  std::vector<int> c = content();
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1])
      throw precondition_error("word content is not a partition: " + str());
  for (int x : c)
    if (x == 0)
      throw precondition_error("word content is not a partition: " + str());
  return Partition(std::move(c));
}

std::vector<Word> standard_subwords(const Word& w) {
  Partition content = w.content_partition();
  int rounds = content.part(1);
  std::vector<int> letters = w.letters();
  std::vector<bool> used(letters.size(), false);
  std::vector<Word> subwords;
  for (int round = 0; round < rounds; ++round) {
    std::vector<int> picked;  // positions, in selection order
    // Rightmost 1 among unused letters.
    int pos = -1;
    for (int i = static_cast<int>(letters.size()) - 1; i >= 0; --i)
      if (!used[i] && letters[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    picked.push_back(pos);
    for (int v = 2;; ++v) {
      int next = -1;
      for (int i = pos - 1; i >= 0; --i)
        if (!used[i] && letters[i] == v) {
          next = i;
          break;
        }
      if (next < 0) {
        for (int i = static_cast<int>(letters.size()) - 1; i >= 0; --i)
          if (!used[i] && letters[i] == v) {
            next = i;
            break;
          }
      }
      if (next < 0) break;
      picked.push_back(next);
      pos = next;
    }
    std::sort(picked.begin(), picked.end());
    std::vector<int> sub;
    for (int i : picked) {
      used[i] = true;
      sub.push_back(letters[i]);
    }
    subwords.push_back(Word(std::move(sub)));
  }
  return subwords;
}

namespace {

long long cocharge_standard(const Word& w) {
  // Position of each value in the standard word.
  const auto& letters = w.letters();
  int k = static_cast<int>(letters.size());
  std::vector<int> pos(k + 1, -1);
  for (int i = 0; i < k; ++i) pos[letters[i]] = i;
  long long total = 0, cur = 0;
  for (int v = 2; v <= k; ++v) {
    if (pos[v] < pos[v - 1]) ++cur;  // v lies to the left of v-1
    total += cur;
  }
  return total;
}

}  // namespace

long long cocharge(const Word& w) {
  long long total = 0;
  for (const Word& sub : standard_subwords(w)) total += cocharge_standard(sub);
  return total;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw precondition_error("tableau row count does not match shape");
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.part(i + 1))
      throw precondition_error("tableau row length does not match shape");
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] <= 0) throw precondition_error("tableau entries must be positive");
      if (j > 0 && rows_[i][j - 1] > rows_[i][j])
        throw precondition_error("tableau rows must weakly increase");
      if (i > 0 && j < rows_[i - 1].size() && rows_[i - 1][j] >= rows_[i][j])
        throw precondition_error("tableau columns must strictly increase");
    }
  }
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  for (size_t i = 0; i < t.rows().size(); ++i) {
    if (i) os << " / ";
    for (size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j) os << " ";
      os << t.rows()[i][j];
    }
  }
  return os;
}

Word reading_word(const Tableau& t) {
  std::vector<int> letters;
  for (int i = static_cast<int>(t.rows().size()) - 1; i >= 0; --i)
    for (int x : t.rows()[i]) letters.push_back(x);
  return Word(std::move(letters));
}

namespace {

/// SSYT of shape lam and content mu are chains of nested partitions where
/// step i adds a horizontal strip of mu_i boxes; the chain determines the
/// filling. Enumerate chains recursively, assigning value i to strip i.
void extend_chain(const Partition& lam, const Partition& mu, int step,
                  std::vector<int>& shape,  // current row lengths, length l(lam)
                  std::vector<std::vector<int>>& rows,
                  std::vector<Tableau>& out) {
  if (step > mu.length()) {
    for (int i = 0; i < lam.length(); ++i)
      if (shape[i] != lam.part(i + 1)) return;
    out.push_back(Tableau(lam, rows));
    return;
  }
  // Choose a horizontal strip of size mu_step on top of `shape` inside lam:
  // per row i, add add_i boxes with shape[i] + add_i <= lam_i, and no box may
  // sit above a box added in the same step: add_i limited by the previous
  // row's old length.
  int need = mu.part(step);
  int rowsn = lam.length();
  std::vector<int> add(rowsn, 0);
  // Recursive row-by-row choice, top row first.
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == rowsn) {
      if (remaining != 0) return;
      for (int i = 0; i < rowsn; ++i)
        for (int k = 0; k < add[i]; ++k) rows[i].push_back(step);
      for (int i = 0; i < rowsn; ++i) shape[i] += add[i];
      extend_chain(lam, mu, step + 1, shape, rows, out);
      for (int i = 0; i < rowsn; ++i) shape[i] -= add[i];
      for (int i = 0; i < rowsn; ++i)
        for (int k = 0; k < add[i]; ++k) rows[i].pop_back();
      return;
    }
    // Horizontal strip: new length of this row may not exceed the previous
    // row's length before this step.
    int cap = lam.part(row + 1) - shape[row];
    if (row > 0) cap = std::min(cap, shape[row - 1] - shape[row]);
    cap = std::min(cap, remaining);
    for (int a = 0; a <= cap; ++a) {
      add[row] = a;
      self(self, row + 1, remaining - a);
    }
    add[row] = 0;
  };
  rec(rec, 0, need);
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                    const Partition& content) {
  if (shape.size() != content.size())
    throw precondition_error("enumerate_ssyt: size mismatch");
  std::vector<Tableau> out;
  if (shape.size() == 0) {
    out.push_back(Tableau(shape, {}));
    return out;
  }
  if (!dominance_leq(content, shape)) return out;  // K = 0 unless mu <= lam
  std::vector<int> cur(shape.length(), 0);
  std::vector<std::vector<int>> rows(shape.length());
  extend_chain(shape, content, 1, cur, rows, out);
  return out;
}

long long kostka_number(const Partition& lam, const Partition& mu) {
  return static_cast<long long>(enumerate_ssyt(lam, mu).size());
}

QPoly::QPoly(std::vector<long long> coeff) : coeff_(std::move(coeff)) {
  for (long long c : coeff_)
    if (c < 0) throw precondition_error("QPoly coefficients must be >= 0");
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

QPoly QPoly::monomial(int degree, long long c) {
  std::vector<long long> v(degree + 1, 0);
  v[degree] = c;
  return QPoly(std::move(v));
}

long long QPoly::at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeff_.size())) return 0;
  return coeff_[degree];
}

long long QPoly::eval_at_one() const {
  long long s = 0;
  for (long long c : coeff_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), 0);
  for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

std::string QPoly::str() const {
  if (coeff_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(coeff_[i]);
    } else {
      if (coeff_[i] != 1) s += std::to_string(coeff_[i]) + "*";
      s += "q";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << p.str();
}

QPoly modified_kostka(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw precondition_error("modified_kostka: size mismatch");
  QPoly result;
  for (const Tableau& t : enumerate_ssyt(lam, mu))
    result += QPoly::monomial(static_cast<int>(cocharge(reading_word(t))));
  return result;
}

}  // namespace tgp
