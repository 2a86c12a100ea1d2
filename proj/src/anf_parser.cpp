#include "bfkit/anf_parser.hpp"

#include <cctype>

namespace bfkit {

namespace {

class Parser {
public:
  Parser(std::string_view src, int n_vars) : src_(src), n_(n_vars) {}

  AnfExpr run() {
    AnfExpr e = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw AnfParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AnfExpr expr() {
    AnfExpr lhs = term();
    for (;;) {
      skip_ws();
      if (!eat('+') && !eat('^')) return lhs;
      AnfExpr node{AnfExpr::Kind::Xor, 0, nullptr, nullptr};
      node.lhs = std::make_unique<AnfExpr>(std::move(lhs));
      node.rhs = std::make_unique<AnfExpr>(term());
      lhs = std::move(node);
    }
  }

  AnfExpr term() {
    AnfExpr lhs = factor();
    while (eat('*')) {
      AnfExpr node{AnfExpr::Kind::And, 0, nullptr, nullptr};
      node.lhs = std::make_unique<AnfExpr>(std::move(lhs));
      node.rhs = std::make_unique<AnfExpr>(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  AnfExpr factor() {
    skip_ws();
    if (pos_ >= src_.size()) throw AnfParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return AnfExpr{AnfExpr::Kind::Constant, c - '0', nullptr, nullptr};
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      AnfExpr inner = expr();
      if (!eat(')')) throw AnfParseError("unclosed '('", open);
      return inner;
    }
    if (c == 'x' || c == 'X') {
      const std::size_t start = pos_++;
      std::size_t len = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++len;
      }
      if (len == 0) throw AnfParseError("variable needs an index", start);
      if (len > 9) throw AnfParseError("variable index too large", start);
      const int idx = std::stoi(std::string(src_.substr(start + 1, len)));
      if (idx < 1 || idx > n_)
        throw AnfParseError("variable x" + std::to_string(idx) +
                                " out of range for n=" + std::to_string(n_),
                            start);
      return AnfExpr{AnfExpr::Kind::Variable, idx, nullptr, nullptr};
    }
    throw AnfParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view src_;
  int n_;
  std::size_t pos_ = 0;
};

TruthTable eval_node(const AnfExpr& e, int n_vars) {
  switch (e.kind) {
    case AnfExpr::Kind::Constant:
      return TruthTable::constant(n_vars, e.value);
    case AnfExpr::Kind::Variable:
      return TruthTable::variable(n_vars, e.value);
    case AnfExpr::Kind::Xor:
      return eval_node(*e.lhs, n_vars) ^ eval_node(*e.rhs, n_vars);
    case AnfExpr::Kind::And:
      return eval_node(*e.lhs, n_vars) & eval_node(*e.rhs, n_vars);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

AnfExpr parse_anf(std::string_view src, int n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars)
    throw std::invalid_argument("expression needs n_vars in [1, " +
                                std::to_string(kMaxVars) + "]");
  return Parser(src, n_vars).run();
}

TruthTable eval_to_table(const AnfExpr& e, int n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars)
    throw std::invalid_argument("expression needs n_vars in [1, " +
                                std::to_string(kMaxVars) + "]");
  return eval_node(e, n_vars);
}

std::string to_string(const Anf& a) {
  if (a.monomials().empty()) return "0";
  std::string out;
  const int n = a.n_vars();
  for (const auto m : a.monomials()) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      if ((m >> (n - i)) & 1) {
        if (!first) out += "*";
        out += "x" + std::to_string(i);
        first = false;
      }
    }
  }
  return out;
}

TruthTable table_from_string(std::string_view text, int n_vars) {
  constexpr std::string_view kAnfPrefix = "anf:";
  if (text.substr(0, kAnfPrefix.size()) == kAnfPrefix)
    return eval_to_table(parse_anf(text.substr(kAnfPrefix.size()), n_vars),
                         n_vars);
  return TruthTable::from_hex(n_vars, text);
}

}  // namespace bfkit
