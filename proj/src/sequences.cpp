#include "avkit/sequences.hpp"

#include <stdexcept>

namespace avkit {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at each step
  }
  return r;
}

long long IntSequence::at(int i) const {
  if (i < offset) return 0;
  int idx = i - offset;
  if (idx < static_cast<int>(values.size())) return values[static_cast<std::size_t>(idx)];
  switch (tail) {
    case Tail::Zero: return 0;
    case Tail::Constant: return tail_value;
    case Tail::Unknown: throw std::out_of_range("sequence tail is unknown");
  }
  return 0;
}

std::vector<long long> IntSequence::positive_support() const {
  std::size_t lo = 0, hi = values.size();
  while (lo < hi && values[lo] == 0) ++lo;
  while (hi > lo && values[hi - 1] == 0) --hi;
  return std::vector<long long>(values.begin() + static_cast<std::ptrdiff_t>(lo),
                                values.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::string IntSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  if (tail == Tail::Constant && tail_value != 0)
    s += (values.empty() ? "" : ", ") + std::to_string(tail_value) + ", ...";
  else if (tail == Tail::Unknown)
    s += (values.empty() ? "?" : ", ?");
  return s + ")";
}

std::vector<std::pair<long long, int>> macaulay_rep(long long a, int d) {
  std::vector<std::pair<long long, int>> rep;
  long long rem = a;
  for (int i = d; i >= 1 && rem > 0; --i) {
    long long k = i;
    while (binomial(k + 1, i) <= rem) ++k;
    rep.emplace_back(k, i);
    rem -= binomial(k, i);
  }
  return rep;
}

long long macaulay_growth(long long a, int d) {
  long long g = 0;
  for (const auto& [k, i] : macaulay_rep(a, d)) g += binomial(k + 1, i + 1);
  return g;
}

OSequenceCheck is_O_sequence(const IntSequence& s) {
  OSequenceCheck r;
  if (s.at(0) == 0) {
    // the zero function is the Hilbert function of the zero ring
    for (int d = 0; d < s.end_index(); ++d)
      if (s.at(d) != 0) {
        r.ok = false;
        r.violation_index = d;
        return r;
      }
    if (s.tail == IntSequence::Tail::Constant && s.tail_value != 0) {
      r.ok = false;
      r.violation_index = s.end_index();
    }
    return r;
  }
  if (s.at(0) != 1) {
    r.ok = false;
    r.violation_index = 0;
    return r;
  }
  int last = s.end_index() - 1;
  int extra = (s.tail == IntSequence::Tail::Constant) ? 1 : 0;  // one tail step
  for (int d = 0; d <= last + extra; ++d) {
    long long cur = s.at(d);
    if (cur < 0) {
      r.ok = false;
      r.violation_index = d;
      return r;
    }
    if (d == 0) continue;  // s(1) is unconstrained
    long long next;
    if (d + 1 <= last) {
      next = s.at(d + 1);
    } else if (s.tail != IntSequence::Tail::Unknown) {
      next = s.at(d + 1);
    } else {
      break;
    }
    if (next > macaulay_growth(cur, d)) {
      r.ok = false;
      r.violation_index = d;
      return r;
    }
  }
  return r;
}

IntSequence first_difference(const IntSequence& s) {
  IntSequence out;
  out.offset = s.offset;
  long long prev = 0;
  for (long long v : s.values) {
    out.values.push_back(v - prev);
    prev = v;
  }
  if (s.tail == IntSequence::Tail::Constant) {
    out.values.push_back(s.tail_value - prev);
    out.tail = IntSequence::Tail::Zero;
  } else {
    out.tail = s.tail;
  }
  return out;
}

bool is_unimodal(const IntSequence& s) {
  auto v = s.positive_support();
  bool descending = false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) {
      if (descending) return false;
    } else if (v[i] < v[i - 1]) {
      descending = true;
    }
  }
  return true;
}

bool is_symmetric(const IntSequence& s) {
  if (s.tail == IntSequence::Tail::Constant && s.tail_value != 0) return false;
  auto v = s.positive_support();
  for (std::size_t i = 0, j = v.size(); i < j; ++i)
    if (v[i] != v[--j]) return false;
  return true;
}

std::optional<bool> is_finite(const IntSequence& s) {
  switch (s.tail) {
    case IntSequence::Tail::Zero: return true;
    case IntSequence::Tail::Constant: return s.tail_value == 0;
    case IntSequence::Tail::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

SICheck is_SI_sequence(const IntSequence& s) {
  SICheck r;
  auto fin = is_finite(s);
  if (!fin.has_value()) {
    r.reason = "tail behaviour unknown";
    return r;
  }
  if (!*fin) {
    r.verdict = false;
    r.reason = "not finite";
    return r;
  }
  auto v = s.positive_support();
  if (v.empty()) {
    r.verdict = false;
    r.reason = "zero sequence";
    return r;
  }
  if (!is_symmetric(s)) {
    r.verdict = false;
    r.reason = "not symmetric";
    return r;
  }
  OSequenceCheck full = is_O_sequence(IntSequence::of(v));
  if (!full.ok) {
    r.verdict = false;
    r.reason = "not an O-sequence (index " + std::to_string(full.violation_index) + ")";
    return r;
  }
  std::size_t half_len = (v.size() + 1) / 2;
  IntSequence half = IntSequence::of(std::vector<long long>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(half_len)));
  OSequenceCheck diff = is_O_sequence(first_difference(half));
  if (!diff.ok) {
    r.verdict = false;
    r.reason = "first half not differentiable (index " + std::to_string(diff.violation_index) + ")";
    return r;
  }
  r.verdict = true;
  r.reason = "SI-sequence";
  return r;
}

}  // namespace avkit
