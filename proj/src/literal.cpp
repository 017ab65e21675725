#include "symtorsion/literal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "symtorsion/errors.hpp"

namespace symt {

std::string format_literal(const NovikovElement& x) {
  const Lattice& lat = x.lattice();
  std::vector<std::pair<Rational, const std::pair<const GroupElement, Rational>*>> sorted;
  for (const auto& kv : x.terms()) sorted.emplace_back(lat.weight(kv.first), &kv);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out;
  for (const auto& [w, kv] : sorted) {
    const auto& [g, c] = *kv;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += to_string(Rational(abs(c)));
    if (!g.is_identity()) {
      out += "*g(";
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(g[i]);
      }
      out += ")";
    }
  }
  if (out.empty()) out = "0";
  if (x.cutoff()) out += " @cutoff=" + to_string(*x.cutoff());
  return out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const LatticePtr& lattice, std::size_t line, std::size_t column)
      : text_(text), lattice_(lattice), line_(line), column_(column) {}

  NovikovElement parse() {
    NovikovElement::TermMap terms;
    Cutoff cutoff;
    skip_ws();
    if (at_end()) fail("empty literal");
    bool first = true;
    while (!at_end() && peek() != '@') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      auto [coefficient, element] = term();
      if (sign < 0) coefficient = -coefficient;
      auto [it, inserted] = terms.try_emplace(element, coefficient);
      if (!inserted) it->second += coefficient;
      first = false;
      skip_ws();
    }
    if (!at_end()) {
      expect("@cutoff=");
      cutoff = rational(/*allow_negative=*/true);
      skip_ws();
      if (!at_end()) fail("unexpected trailing text");
    }
    return NovikovElement(lattice_, std::move(terms), std::move(cutoff));
  }

 private:
  std::pair<Rational, GroupElement> term() {
    if (at_end()) fail("expected a term");
    if (peek() == 'g') return {Rational(1), element()};
    Rational c = rational();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      return {c, element()};
    }
    return {c, lattice_->identity()};
  }

  GroupElement element() {
    expect("g(");
    std::vector<std::int64_t> coords;
    skip_ws();
    if (!at_end() && peek() == ')') {
      ++pos_;
    } else {
      for (;;) {
        skip_ws();
        coords.push_back(integer());
        skip_ws();
        if (at_end()) fail("unterminated group element");
        if (peek() == ')') {
          ++pos_;
          break;
        }
        expect(",");
      }
    }
    if (coords.size() != lattice_->rank()) {
      fail("group element has " + std::to_string(coords.size()) + " coordinates but the lattice has rank " +
           std::to_string(lattice_->rank()));
    }
    return GroupElement(std::move(coords));
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec == std::errc::result_out_of_range) fail_at(start, "coordinate out of range");
    if (ec != std::errc() || ptr != text_.data() + pos_) fail_at(start, "expected an integer");
    return v;
  }

  Rational rational(bool allow_negative = false) {
    if (allow_negative && !at_end() && peek() == '-') {
      ++pos_;
      return -rational();
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail_at(start, std::string("expected a rational: ") + e.what());
    }
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
    throw ParseError(line_, column_ + pos, what);
  }

  std::string_view text_;
  const LatticePtr& lattice_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

NovikovElement parse_literal(std::string_view text, const LatticePtr& lattice, std::size_t line,
                             std::size_t column) {
  return LiteralParser(text, lattice, line, column).parse();
}

}  // namespace symt
