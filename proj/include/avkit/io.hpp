#pragma once

#include <istream>
#include <optional>

#include "avkit/groebner.hpp"

namespace avkit {

// Parse failure with 1-based location info.
struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

namespace iodetail {

struct RawTerm {
  std::int64_t num = 1, den = 1;
  std::vector<int> exps;  // indexed by variable
};

// Field-agnostic parse of the shared polynomial grammar: variables x0..x7
// (x, y, z, w alias the first four), integer or p/q coefficients, optional
// '*', '^' exponents, '+'/'-' separators.
std::vector<RawTerm> parse_poly_text(const std::string& text, int nvars, int line_no);

std::string variable_name(int i, int nvars);

}  // namespace iodetail

template <typename K>
Polynomial<K> parse_polynomial(const std::string& text, int nvars, int line_no = 1) {
  std::vector<typename Polynomial<K>::Term> terms;
  for (const auto& rt : iodetail::parse_poly_text(text, nvars, line_no))
    terms.emplace_back(Monomial(nvars, rt.exps), K::from_fraction(rt.num, rt.den));
  return Polynomial<K>::from_terms(nvars, std::move(terms));
}

// Prints with alias names (x,y,z,w) for up to four variables, x0..x7 beyond;
// round-trips through parse_polynomial.
template <typename K>
std::string print_polynomial(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string vars;
    for (int i = 0; i < m.nvars(); ++i) {
      int e = m.exp(i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += iodetail::variable_name(i, m.nvars());
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty())
      out += cs;
    else if (cs == "1")
      out += vars;
    else
      out += cs + "*" + vars;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal files: `ring: n=<nvars> field=<rationals|fp:p>` header, one generator
// per line, '#' comments. Points files: one point per line, whitespace-
// separated coordinates (integers or p/q), '#' comments, no header.
// ---------------------------------------------------------------------------

struct IdealFileData {
  int nvars = 0;
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::pair<int, std::string>> generator_lines;  // (line number, text)
};

IdealFileData read_ideal_file(std::istream& in);
IdealFileData read_ideal_file_path(const std::string& path);

template <typename K>
Ideal<K> build_ideal(const IdealFileData& data) {
  std::vector<Polynomial<K>> gens;
  for (const auto& [ln, text] : data.generator_lines) {
    Polynomial<K> f = parse_polynomial<K>(text, data.nvars, ln);
    if (!f.is_homogeneous()) throw ParseError("generator is not homogeneous", ln, 1);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal<K>(data.nvars, std::move(gens));
}

template <typename K>
void write_ideal_file(std::ostream& out, const Ideal<K>& I) {
  out << "ring: n=" << I.nvars() << " field=" << field_spec_of<K>().str() << "\n";
  for (const auto& g : I.generators()) out << print_polynomial(g) << "\n";
}

struct PointsFileData {
  int ncoords = 0;
  // (line number, coordinate tokens)
  std::vector<std::pair<int, std::vector<std::string>>> rows;
};

PointsFileData read_points_file(std::istream& in);
PointsFileData read_points_file_path(const std::string& path);

std::pair<std::int64_t, std::int64_t> parse_fraction_token(const std::string& tok, int line_no,
                                                           int col);

template <typename K>
std::vector<std::vector<K>> build_points(const PointsFileData& data) {
  std::vector<std::vector<K>> pts;
  for (const auto& [ln, toks] : data.rows) {
    std::vector<K> c;
    c.reserve(toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      auto [num, den] = parse_fraction_token(toks[i], ln, static_cast<int>(i) + 1);
      c.push_back(K::from_fraction(num, den));
    }
    pts.push_back(std::move(c));
  }
  return pts;
}

}  // namespace avkit
