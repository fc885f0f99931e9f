#include "tgp/schurweyl.hpp"

#include <ostream>
#include <sstream>

namespace tgp {

long long GDecomposition::at(const Partition& p) const {
  auto it = mult.find(p);
  return it == mult.end() ? 0 : it->second;
}

void GDecomposition::add(const Partition& p, long long m) {
  if (m == 0) return;
  auto it = mult.find(p);
  if (it == mult.end())
    mult.emplace(p, m);
  else
    it->second += m;
}

std::string GDecomposition::str() const {
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

std::ostream& operator<<(std::ostream& os, const GDecomposition& g) {
  return os << g.str();
}

long long gmodule_dimension(const Partition& lam, int n) {
  if (lam.length() > n)
    throw precondition_error("weight has more than n parts");
  // Hook content formula: prod over cells (n+1 + j - i) / hook(i,j).
  Partition t = transpose(lam);
  long long num = 1, den = 1;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = 1; j <= lam.part(i); ++j) {
      num *= n + 1 + j - i;
      den *= (lam.part(i) - j) + (t.part(j) - i) + 1;
    }
  return num / den;
}

GDecomposition pieri_column_step(const GDecomposition& dec, int k) {
  GDecomposition out;
  out.rank = dec.rank;
  for (const auto& [nu, m] : dec.mult) {
    // Add a vertical strip of k boxes: at most one box per row, rows
    // bounded by the rank.
    int rows = nu.length() + k;  // strips never need more rows than this
    std::vector<int> cur(rows);
    for (int i = 0; i < rows; ++i) cur[i] = nu.part(i + 1);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
      if (remaining == 0) {
        std::vector<int> parts = cur;
        Partition mu(parts);
        if (mu.length() <= out.rank) out.add(mu, m);
        return;
      }
      if (row >= rows) return;
      // Option: no box in this row.
      self(self, row + 1, remaining);
      // Option: one box, keeping the shape a partition.
      int above = row == 0 ? cur[0] + 1 : cur[row - 1];
      if (cur[row] + 1 <= above) {
        // The added box must not sit on top of a box added lower in the
        // same strip; adding top-down with at most one per row is safe
        // as long as the shape stays a partition.
        ++cur[row];
        self(self, row + 1, remaining - 1);
        --cur[row];
      }
    };
    rec(rec, 0, k);
  }
  return out;
}

GDecomposition weyl_gmodule_decomposition(const Partition& lam, int n) {
  if (lam.size() > n)
    throw precondition_error("stable range requires |lambda| <= n");
  GDecomposition dec;
  dec.rank = n;
  dec.add(Partition{}, 1);
  for (int col = 1; col <= lam.part(1); ++col)
    dec = pieri_column_step(dec, transpose(lam).part(col));
  return dec;
}

GDecomposition schur_weyl_image(const CharacterVector& v, int n) {
  if (v.d > n)
    throw precondition_error("Schur-Weyl image requires d <= n");
  GDecomposition out;
  out.rank = n;
  for (const auto& [mu, m] : v.mult) out.add(mu, m);
  return out;
}

bool dualweyl_check(const Partition& lam, const EvalParams& a, int n) {
  if (lam.size() > n)
    throw precondition_error("stable range requires |lambda| <= n");
  TGPAlgebra R = build_quotient(lam, a);
  GDecomposition image = schur_weyl_image(sign_twist(algebra_character(R)), n);
  return image == weyl_gmodule_decomposition(lam, n);
}

}  // namespace tgp
