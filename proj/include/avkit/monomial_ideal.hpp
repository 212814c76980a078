#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avkit/monomial.hpp"

namespace avkit {

// Monomial ideal stored by its minimal generators (an antichain under
// divisibility), sorted lex-descending.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool contains_one() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;

  // number of degree-t monomials NOT in the ideal, i.e. dim [R/M]_t
  long long standard_monomial_count(int t) const;
  // dim [M]_t
  long long graded_dim(int t) const;

  // M : x0^k
  MonomialIdeal colon_x0_power(int k) const;
  // M : u for a monomial u
  MonomialIdeal colon_monomial(const Monomial& u) const;
  // M : N, combinatorial
  MonomialIdeal colon(const MonomialIdeal& o) const;
  // M cap N via pairwise lcms
  MonomialIdeal intersect(const MonomialIdeal& o) const;

  // lowest generator degree; -1 for the zero ideal
  int min_degree() const;
  int max_degree() const;

  // true iff R/M is finite dimensional over K when restricted to the
  // generators listed (a pure power of every variable occurs).
  bool is_artinian() const;

  // char-0 strongly stable test: for every generator m with x_j | m, the swap
  // m*x_i/x_j lies in the ideal for all i < j.
  bool is_borel_fixed() const;

  // true iff the degree-t monomials of M form a lex-initial segment
  bool is_lex_segment(int t) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

  std::string str() const;

 private:
  void minimalize();
  int nvars_;
  std::vector<Monomial> gens_;
};

}  // namespace avkit
