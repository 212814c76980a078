#include "avkit/monomial.hpp"

namespace avkit {

namespace {

bool enumerate(Monomial& m, int var, int remaining, const std::function<bool(const Monomial&)>& f) {
  if (var == m.nvars() - 1) {
    m.set_exp(var, remaining);
    bool keep = f(m);
    m.set_exp(var, 0);
    return keep;
  }
  for (int e = remaining; e >= 0; --e) {
    m.set_exp(var, e);
    if (!enumerate(m, var + 1, remaining - e, f)) {
      m.set_exp(var, 0);
      return false;
    }
  }
  m.set_exp(var, 0);
  return true;
}

}  // namespace

void for_each_monomial_of_degree(int nvars, int d, const std::function<bool(const Monomial&)>& f) {
  Monomial m(nvars);
  if (d == 0) {
    f(m);
    return;
  }
  enumerate(m, 0, d, f);
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(nvars, d, [&](const Monomial& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::string monomial_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
  }
  return s;
}

}  // namespace avkit
