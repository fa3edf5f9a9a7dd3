#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kflat/groebner.hpp"
#include "kflat/parse.hpp"

namespace kt {

using namespace kflat;

inline RingPtr qring(std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(FieldSpec::rationals(), std::move(vars), order);
}

inline Poly pp(const RingPtr& r, const std::string& src) { return parse_poly(src, r); }

inline Ideal ideal(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Poly> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, std::move(g));
}

}  // namespace kt
