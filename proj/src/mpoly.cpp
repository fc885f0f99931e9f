#include "tgp/mpoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace tgp {

namespace {
// Canonical internal term order: degrevlex descending.
bool term_before(const Monomial& a, const Monomial& b) {
  return mono_cmp(a, b, MonomialOrder::degrevlex) > 0;
}
}  // namespace

void MPoly::check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw precondition_error("ring dimension out of range (max " +
                             std::to_string(kMaxVars) + ")");
}

void MPoly::normalize(std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.first.nvars != nvars_)
      throw precondition_error("monomial/ring dimension mismatch");
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return term_before(x.first, y.first); });
  terms_.clear();
  for (Term& t : terms) {
    if (t.second == 0) continue;
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
    if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
  }
}

MPoly::MPoly(int nvars, std::vector<Term> terms) : nvars_(nvars) {
  check_nvars(nvars);
  normalize(std::move(terms));
}

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial::one(nvars), c});
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  p.terms_.push_back({Monomial::var(nvars, i), 1});
  return p;
}

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  MPoly p(m.nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.first.deg);
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.first.deg != terms_.front().first.deg) return false;
  return true;
}

Rat MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return term_before(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rat(0);
}

const MPoly::Term& MPoly::leading(MonomialOrder ord) const {
  if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
  if (ord == MonomialOrder::degrevlex) return terms_.front();
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (mono_cmp(terms_[i].first, terms_[best].first, ord) > 0) best = i;
  return terms_[best];
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (Term& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw precondition_error("ring dimension mismatch");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].first, o.terms_[j].first, MonomialOrder::degrevlex);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].second + o.terms_[j].second;
      if (s != 0) merged.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly MPoly::operator*(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw precondition_error("ring dimension mismatch");
  std::map<Monomial, Rat, MonoLess> acc{MonoLess{MonomialOrder::degrevlex}};
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc[mono_mul(a.first, b.first)] += a.second * b.second;
  MPoly r(nvars_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.terms_.push_back({it->first, it->second});
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  if (c == 0) return MPoly(nvars_);
  MPoly r = *this;
  for (Term& t : r.terms_) t.second *= c;
  return r;
}

void MPoly::add_scaled(const Rat& c, const Monomial& m, const MPoly& g) {
  MPoly shifted(g.nvars_);
  shifted.terms_.reserve(g.terms_.size());
  for (const Term& t : g.terms_)
    shifted.terms_.push_back({mono_mul(t.first, m), t.second * c});
  *this += shifted;
}

MPoly MPoly::apply_permutation(const Permutation& sigma) const {
  if (sigma.degree() != nvars_)
    throw precondition_error("permutation degree does not match ring dimension");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m = Monomial::one(nvars_);
    for (int j = 1; j <= nvars_; ++j) m.e[sigma(j) - 1] = t.first.e[j - 1];
    m.deg = t.first.deg;
    terms.push_back({m, t.second});
  }
  return MPoly(nvars_, std::move(terms));
}

MPoly MPoly::shift_scale(const Rat& b, const Rat& c) const {
  if (b == 0) throw precondition_error("shift_scale requires b != 0");
  MPoly result(nvars_);
  for (const Term& t : terms_) {
    // Expand coeff * prod_k (b t_k + c)^{e_k}.
    MPoly prod = MPoly::constant(nvars_, t.second);
    for (int k = 1; k <= nvars_; ++k) {
      int e = t.first.e[k - 1];
      if (e == 0) continue;
      MPoly lin = MPoly::variable(nvars_, k) * b + MPoly::constant(nvars_, c);
      for (int p = 0; p < e; ++p) prod = prod * lin;
    }
    result += prod;
  }
  return result;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw precondition_error("evaluation point has wrong dimension");
  Rat total = 0;
  for (const Term& t : terms_) {
    Rat v = t.second;
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < t.first.e[k]; ++p) v *= point[k];
    total += v;
  }
  return total;
}

MPoly MPoly::coefficient_of_var(int var, int power) const {
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    if (t.first.e[var - 1] != power) continue;
    Monomial m = t.first;
    m.deg -= m.e[var - 1];
    m.e[var - 1] = 0;
    terms.push_back({m, t.second});
  }
  return MPoly(nvars_, std::move(terms));
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rat a = abs(c);
    bool need_coeff = (a != 1) || t.first.is_one();
    if (need_coeff) os << rat_str(a);
    bool printed_var = false;
    for (int k = 0; k < nvars_; ++k) {
      if (t.first.e[k] == 0) continue;
      if (need_coeff || printed_var) os << "*";
      os << "t" << (k + 1);
      if (t.first.e[k] > 1) os << "^" << t.first.e[k];
      printed_var = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

MPoly elementary_symmetric(const std::vector<int>& J, int r, int nvars) {
  if (r < 0) throw precondition_error("elementary_symmetric: r < 0");
  for (int j : J)
    if (j < 1 || j > nvars) throw precondition_error("index set out of range");
  if (r == 0) return MPoly::one(nvars);
  if (r > static_cast<int>(J.size())) return MPoly::zero(nvars);
  // DP over the elements of J: e_r of a growing variable set.
  std::vector<MPoly> e(r + 1, MPoly::zero(nvars));
  e[0] = MPoly::one(nvars);
  for (size_t idx = 0; idx < J.size(); ++idx) {
    MPoly tj = MPoly::variable(nvars, J[idx]);
    for (int k = std::min<int>(r, static_cast<int>(idx) + 1); k >= 1; --k)
      e[k] += e[k - 1] * tj;
  }
  return e[r];
}

Rat complete_homogeneous_eval(const std::vector<Rat>& a, int k) {
  if (k < 0) throw precondition_error("complete_homogeneous_eval: k < 0");
  if (k == 0) return Rat(1);
  // h_j over growing prefixes: h[j](a_1..a_i) = h[j](a_1..a_{i-1}) + a_i*h[j-1](a_1..a_i).
  std::vector<Rat> h(k + 1, Rat(0));
  h[0] = 1;
  for (const Rat& x : a)
    for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  return h[k];
}

}  // namespace tgp
