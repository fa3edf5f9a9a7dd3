#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kflat/dual.hpp"

namespace kflat {

// Syntax or semantic error in an input expression, with the byte offset of
// the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(size_t offset, const std::string& msg)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

// Parsing environment: declared polynomial variables (the base ring), an
// optional Laurent variable (the only name allowed to carry negative
// exponents), and whether the symbol `eps` (with eps^2 = 0) is accepted.
struct ParseEnv {
  RingPtr baseRing;
  std::optional<std::string> laurentVar;
  bool allowEps = false;
};

// Grammar, tightest first: ^, unary -, * and juxtaposition, binary + and -.
// Rational literals are written a/b; `/` is not accepted anywhere else.
DualLaurent parse_value(const std::string& src, const ParseEnv& env);

Poly parse_poly(const std::string& src, const RingPtr& ring);
LaurentPoly parse_laurent(const std::string& src, const RingPtr& base,
                          const std::string& lvar);
DualPoly parse_dual_poly(const std::string& src, const RingPtr& ring);
DualLaurent parse_dual_laurent(const std::string& src, const RingPtr& base,
                               const std::string& lvar);

}  // namespace kflat
