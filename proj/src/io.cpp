#include "avkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace avkit {
namespace iodetail {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  int line;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  int col() const { return static_cast<int>(i) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col()); }
};

std::int64_t read_integer(Cursor& c) {
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected a number");
  try {
    return std::stoll(c.s.substr(start, c.i - start));
  } catch (const std::out_of_range&) {
    c.i = start;
    c.fail("integer literal too large");
  }
}

// x0..x7, or x/y/z/w for the first four variables
int read_variable(Cursor& c, int nvars) {
  int col = c.col();
  char ch = c.s[c.i];
  int var = -1;
  if (ch == 'x' && c.i + 1 < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i + 1]))) {
    c.i += 1;
    var = static_cast<int>(read_integer(c));
  } else {
    switch (ch) {
      case 'x': var = 0; break;
      case 'y': var = 1; break;
      case 'z': var = 2; break;
      case 'w': var = 3; break;
      default: c.fail(std::string("unexpected character '") + ch + "'");
    }
    c.i += 1;
  }
  if (var < 0 || var >= nvars)
    throw ParseError("variable index out of range for a " + std::to_string(nvars) +
                         "-variable ring",
                     c.line, col);
  return var;
}

}  // namespace

std::string variable_name(int i, int nvars) {
  static const char* alias[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return alias[i];
  return "x" + std::to_string(i);
}

std::vector<RawTerm> parse_poly_text(const std::string& text, int nvars, int line_no) {
  if (nvars < 1 || nvars > kMaxUserVars)
    throw ParseError("variable count out of range", line_no, 1);
  Cursor c{text, 0, line_no};
  std::vector<RawTerm> terms;
  c.skip_ws();
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) {
      if (first) c.fail("empty polynomial");
      break;
    }
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.i;
      c.skip_ws();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    if (c.done()) c.fail("dangling sign");
    first = false;

    RawTerm t;
    t.exps.assign(static_cast<std::size_t>(nvars), 0);
    t.num = sign;
    bool saw_factor = false;
    bool expect_factor = false;  // a '*' was just consumed
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      t.num = sign * read_integer(c);
      c.skip_ws();
      if (!c.done() && c.peek() == '/') {
        ++c.i;
        c.skip_ws();
        if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
          c.fail("expected a denominator");
        t.den = read_integer(c);
        if (t.den == 0) c.fail("zero denominator");
      }
      saw_factor = true;
    }
    while (true) {
      c.skip_ws();
      if (c.done()) break;
      char ch = c.peek();
      if (ch == '+' || ch == '-') {
        if (expect_factor) c.fail("expected a factor after '*'");
        break;
      }
      if (ch == '*') {
        if (!saw_factor) c.fail("'*' without a preceding factor");
        ++c.i;
        expect_factor = true;
        continue;
      }
      int var = read_variable(c, nvars);
      int exp = 1;
      c.skip_ws();
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        c.skip_ws();
        if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
          c.fail("expected an exponent");
        std::int64_t e = read_integer(c);
        if (e < 0 || e > 1000) c.fail("exponent out of range");
        exp = static_cast<int>(e);
      }
      t.exps[static_cast<std::size_t>(var)] += exp;
      saw_factor = true;
      expect_factor = false;
    }
    if (expect_factor) c.fail("expected a factor after '*'");
    if (!saw_factor) c.fail("empty term");
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace iodetail

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string without_comment(const std::string& s) {
  std::size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

IdealFileData read_ideal_file(std::istream& in) {
  IdealFileData data;
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(without_comment(raw));
    if (line.empty()) continue;
    if (!saw_header) {
      // ring: n=<nvars> field=<rationals|fp:p>
      std::istringstream hs(line);
      std::string kw, nspec, fspec;
      hs >> kw >> nspec >> fspec;
      if (kw != "ring:" || nspec.rfind("n=", 0) != 0 || fspec.rfind("field=", 0) != 0)
        throw ParseError("expected header 'ring: n=<nvars> field=<rationals|fp:p>'", line_no, 1);
      try {
        data.nvars = std::stoi(nspec.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad variable count in header", line_no, 1);
      }
      if (data.nvars < 1 || data.nvars > kMaxUserVars)
        throw ParseError("variable count out of range", line_no, 1);
      std::string f = fspec.substr(6);
      if (f == "rationals") {
        data.field = FieldSpec::rationals();
      } else if (f.rfind("fp:", 0) == 0) {
        try {
          data.field = FieldSpec::prime_field(std::stoull(f.substr(3)));
        } catch (const FieldError& e) {
          throw ParseError(e.what(), line_no, 1);
        } catch (const std::exception&) {
          throw ParseError("bad prime in header", line_no, 1);
        }
      } else {
        throw ParseError("unknown field '" + f + "'", line_no, 1);
      }
      saw_header = true;
      continue;
    }
    data.generator_lines.emplace_back(line_no, line);
  }
  if (!saw_header) throw ParseError("missing ring header", line_no ? line_no : 1, 1);
  if (data.generator_lines.empty()) throw ParseError("ideal file has no generators", line_no, 1);
  return data;
}

IdealFileData read_ideal_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 1, 1);
  return read_ideal_file(in);
}

PointsFileData read_points_file(std::istream& in) {
  PointsFileData data;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(without_comment(raw));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (data.ncoords == 0)
      data.ncoords = static_cast<int>(toks.size());
    else if (static_cast<int>(toks.size()) != data.ncoords)
      throw ParseError("inconsistent coordinate count", line_no, 1);
    data.rows.emplace_back(line_no, std::move(toks));
  }
  if (data.rows.empty()) throw ParseError("points file is empty", line_no ? line_no : 1, 1);
  if (data.ncoords < 2 || data.ncoords > kMaxUserVars)
    throw ParseError("coordinate count out of range", data.rows.front().first, 1);
  return data;
}

PointsFileData read_points_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 1, 1);
  return read_points_file(in);
}

std::pair<std::int64_t, std::int64_t> parse_fraction_token(const std::string& tok, int line_no,
                                                           int col) {
  std::size_t slash = tok.find('/');
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + tok + "'", line_no, col);
    }
    if (pos != s.size()) throw ParseError("bad number '" + tok + "'", line_no, col);
    return v;
  };
  if (slash == std::string::npos) return {to_int(tok), 1};
  std::int64_t den = to_int(tok.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator", line_no, col);
  return {to_int(tok.substr(0, slash)), den};
}

}  // namespace avkit
