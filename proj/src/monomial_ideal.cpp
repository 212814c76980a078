#include "avkit/monomial_ideal.hpp"

#include <algorithm>

namespace avkit {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars), gens_(std::move(gens)) {
  for (const Monomial& g : gens_)
    if (g.nvars() != nvars_) throw DimensionError("generator from a different ring");
  minimalize();
}

void MonomialIdeal::minimalize() {
  std::sort(gens_.begin(), gens_.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens_) {
    bool redundant = false;
    for (const Monomial& m : minimal)
      if (m.divides(g)) { redundant = true; break; }
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), LexDesc{});
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  gens_ = std::move(minimal);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

long long MonomialIdeal::standard_monomial_count(int t) const {
  long long count = 0;
  for_each_monomial_of_degree(nvars_, t, [&](const Monomial& m) {
    if (!contains(m)) ++count;
    return true;
  });
  return count;
}

long long MonomialIdeal::graded_dim(int t) const {
  long long total = 0;
  for_each_monomial_of_degree(nvars_, t, [&](const Monomial&) {
    ++total;
    return true;
  });
  return total - standard_monomial_count(t);
}

MonomialIdeal MonomialIdeal::colon_x0_power(int k) const {
  Monomial u(nvars_);
  u.set_exp(0, k);
  return colon_monomial(u);
}

MonomialIdeal MonomialIdeal::colon_monomial(const Monomial& u) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) out.push_back(g.colon(u));
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& o) const {
  if (o.gens_.empty()) throw DimensionError("colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc(nvars_);
  for (const Monomial& u : o.gens_) {
    MonomialIdeal c = colon_monomial(u);
    acc = first ? c : acc.intersect(c);
    first = false;
  }
  return acc;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size() * o.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : o.gens_) out.push_back(a.lcm(b));
  return MonomialIdeal(nvars_, std::move(out));
}

int MonomialIdeal::min_degree() const {
  int d = -1;
  for (const Monomial& g : gens_)
    if (d < 0 || g.degree() < d) d = g.degree();
  return d;
}

int MonomialIdeal::max_degree() const {
  int d = -1;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::is_artinian() const {
  for (int i = 0; i < nvars_; ++i) {
    bool pure = false;
    for (const Monomial& g : gens_) {
      if (g.degree() == g.exp(i)) { pure = true; break; }
    }
    if (!pure) return false;
  }
  return true;
}

bool MonomialIdeal::is_borel_fixed() const {
  for (const Monomial& g : gens_) {
    for (int j = 1; j < nvars_; ++j) {
      if (g.exp(j) == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial swapped = g;
        swapped.set_exp(j, g.exp(j) - 1);
        swapped.set_exp(i, g.exp(i) + 1);
        if (!contains(swapped)) return false;
      }
    }
  }
  return true;
}

bool MonomialIdeal::is_lex_segment(int t) const {
  // monomials_of_degree enumerates lex-descending: members must be a prefix
  bool left_segment = false;
  bool ok = true;
  for_each_monomial_of_degree(nvars_, t, [&](const Monomial& m) {
    bool in = contains(m);
    if (in && left_segment) { ok = false; return false; }
    if (!in) left_segment = true;
    return true;
  });
  return ok;
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += monomial_str(gens_[i]);
  }
  return s + ")";
}

}  // namespace avkit
