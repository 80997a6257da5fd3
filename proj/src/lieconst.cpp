#include "lieschur/lieconst.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "lieschur/error.hpp"

namespace lieschur {

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t count() {
    const std::string d = digits();
    if (d.size() > 6) fail("number too large");
    return std::stoul(d);
  }

  /// e<k>, returned 1-based as written.
  std::size_t basis_index() {
    if (!accept('e')) fail("expected basis element 'e<k>'");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected index after 'e'");
    return count();
  }

  /// Unsigned p or p/q.
  Rational magnitude() {
    std::string num = digits();
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected denominator");
      den = digits();
    }
    mpz_class d(den, 10);
    if (d == 0) fail("zero denominator");
    Rational q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, pos_ + 1, msg); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::size_t to_zero_based(std::size_t idx, std::size_t dim) {
  if (idx < 1 || idx > dim)
    throw Error(ErrorKind::IndexOutOfRange,
                "basis element e" + std::to_string(idx) + " outside 1.." + std::to_string(dim));
  return idx - 1;
}

BracketSpec parse_bracket(LineCursor& cur, std::size_t dim) {
  cur.expect('[');
  const std::size_t i = cur.basis_index();
  cur.expect(',');
  const std::size_t j = cur.basis_index();
  cur.expect(']');
  cur.expect('=');

  BracketSpec spec{to_zero_based(i, dim), to_zero_based(j, dim), zero_vector(dim)};
  if (spec.i >= spec.j)
    throw Error(ErrorKind::IndexOutOfRange, "bracket [e" + std::to_string(i) + ",e" +
                                                std::to_string(j) + "] must have i < j");

  if (cur.accept('0')) {
    if (!cur.at_end()) cur.fail("unexpected text after '0'");
    return spec;
  }

  bool first = true;
  while (true) {
    Rational sign = 1;
    if (cur.accept('-')) sign = -1;
    else if (!cur.accept('+') && !first) cur.fail("expected '+' or '-' between terms");
    first = false;

    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.magnitude();
      cur.accept('*');
    }
    const std::size_t k = to_zero_based(cur.basis_index(), dim);
    spec.coeffs[k] += sign * coeff;
    if (cur.at_end()) break;
  }
  return spec;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

}  // namespace

LieAlgebra parse_lieconst(std::string_view text) {
  std::optional<std::size_t> dim;
  std::vector<BracketSpec> specs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = strip_comment(text.substr(start, end - start));
    start = end + 1;

    LineCursor cur(line, line_no);
    if (cur.at_end()) continue;
    if (!dim) {
      if (!cur.accept_word("dim")) cur.fail("expected header 'dim N'");
      dim = cur.count();
      if (!cur.at_end()) cur.fail("unexpected text after dimension");
      continue;
    }
    if (cur.peek() == 'd') cur.fail("duplicate 'dim' header");
    specs.push_back(parse_bracket(cur, *dim));
  }
  if (!dim) throw SyntaxError(line_no, 1, "missing 'dim N' header");
  return LieAlgebra::build(*dim, specs);
}

std::string render_lieconst(const LieAlgebra& L) {
  std::string out = "dim " + std::to_string(L.dim()) + "\n";
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.structure(i, j);
      if (is_zero(v)) continue;
      out += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        const bool negative = sgn(v[k]) < 0;
        Rational mag = abs(v[k]);
        if (first) out += negative ? " -" : " ";
        else out += negative ? " - " : " + ";
        if (mag != 1) out += mag.get_str() + " ";
        out += "e" + std::to_string(k + 1);
        first = false;
      }
      out += "\n";
    }
  return out;
}

}  // namespace lieschur
