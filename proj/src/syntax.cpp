#include "edr/syntax.hpp"

#include <cctype>
#include <map>

namespace edr {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
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
  bool accept_x() {
    char c = peek();
    if (c != 'x' && c != 'X') return false;
    ++pos_;
    return true;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

Element parse_element_at(Ring ring, std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  if (cur.done()) cur.fail("empty element");

  if (ring == Ring::Int) {
    bool neg = false;
    if (cur.accept('-')) neg = true;
    else cur.accept('+');
    mpz_class v(cur.digits());
    if (!cur.done()) cur.fail("INT accepts integer literals only");
    return Element(Ring::Int, neg ? mpz_class(-v) : v);
  }

  std::map<unsigned long, mpq_class> terms;
  bool first = true;
  while (true) {
    bool neg = false;
    if (first) {
      if (cur.accept('-')) neg = true;
      else cur.accept('+');
    } else {
      if (cur.done()) break;
      if (cur.accept('-')) neg = true;
      else if (!cur.accept('+')) cur.fail("expected '+' or '-'");
    }
    first = false;

    mpq_class coeff = 1;
    bool has_x = false;
    const char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(cur.digits());
      mpz_class den = 1;
      if (cur.accept('/')) {
        den = mpz_class(cur.digits());
        if (den == 0) cur.fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      if (cur.accept('*')) {
        if (!cur.accept_x()) cur.fail("expected 'x' after '*'");
        has_x = true;
      } else {
        has_x = cur.accept_x();
      }
    } else if (cur.accept_x()) {
      has_x = true;
    } else {
      cur.fail("expected a number or 'x'");
    }

    unsigned long degree = 0;
    if (has_x) {
      degree = 1;
      if (cur.accept('^')) {
        mpz_class e(cur.digits());
        if (e > kMaxExponent) cur.fail("exponent too large");
        degree = e.get_ui();
      }
    }
    terms[degree] += neg ? mpq_class(-coeff) : coeff;
  }

  std::vector<mpq_class> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [deg, c] : terms) coeffs[deg] = c;
  return Element::from_coeffs(ring, std::move(coeffs));
}

}  // namespace

Element parse_element(Ring ring, std::string_view text) { return parse_element_at(ring, text, 0); }

std::string format_element(const Element& e) {
  const auto& cs = e.poly().coeffs();
  if (cs.empty()) return "0";
  std::string out;
  for (std::size_t k = cs.size(); k-- > 0;) {
    const mpq_class& c = cs[k];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) out += '-';
    else if (!out.empty()) out += '+';
    mpq_class mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) {
      out += 'x';
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

Matrix parse_matrix(Ring ring, std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  };
  auto peek_is = [&](char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  };

  std::vector<std::vector<Element>> rows;
  expect('[');
  do {
    expect('[');
    std::vector<Element> row;
    do {
      skip_ws();
      std::size_t start, end;
      if (peek_is('"')) {
        start = ++pos;
        while (pos < text.size() && text[pos] != '"') ++pos;
        if (pos >= text.size()) throw ParseError(pos, "unterminated string");
        end = pos++;
      } else {
        start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
        end = pos;
      }
      row.push_back(parse_element_at(ring, text.substr(start, end - start), start));
      skip_ws();
    } while (pos < text.size() && text[pos] == ',' && ++pos);
    expect(']');
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(pos, "rows have different lengths");
    rows.push_back(std::move(row));
    skip_ws();
  } while (pos < text.size() && text[pos] == ',' && ++pos);
  expect(']');
  skip_ws();
  if (pos != text.size()) throw ParseError(pos, "trailing characters after matrix");
  return Matrix::from_rows(ring, rows);
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '"' + format_element(m(i, j)) + '"';
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace edr
