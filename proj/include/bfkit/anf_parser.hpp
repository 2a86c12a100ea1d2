#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bfkit/transforms.hpp"
#include "bfkit/truth_table.hpp"

namespace bfkit {

// Grammar (whitespace-insensitive):
//   expr   := term (('+' | '^') term)*
//   term   := factor ('*' factor)*
//   factor := 'x' digits | '0' | '1' | '(' expr ')'
// Variables are 1-based; x1 is the most significant index bit.
struct AnfParseError : std::runtime_error {
  AnfParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct AnfExpr {
  enum class Kind { Constant, Variable, Xor, And };
  Kind kind;
  int value = 0;  // Constant: 0/1; Variable: 1-based index
  std::unique_ptr<AnfExpr> lhs, rhs;
};

// n_vars >= 1; every variable mentioned must satisfy 1 <= i <= n_vars.
AnfExpr parse_anf(std::string_view src, int n_vars);
TruthTable eval_to_table(const AnfExpr& e, int n_vars);

// Canonical form: monomials ascending by mask, variables joined with '*',
// mask 0 prints as "1", the empty ANF as "0", monomials joined with " + ".
std::string to_string(const Anf& a);

// "deadbeef"-style hex, or "anf:<expr>"; the one-stop argument parser used by
// the CLI and the bindings.
TruthTable table_from_string(std::string_view text, int n_vars);

}  // namespace bfkit
