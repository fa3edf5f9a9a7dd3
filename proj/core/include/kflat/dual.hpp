#pragma once

#include <string>

#include "kflat/laurent.hpp"
#include "kflat/poly.hpp"

namespace kflat {

// Value over the dual numbers k[eps]/(eps^2): body + eps * part.
template <class R>
struct Dual {
  R body;
  R eps;

  Dual() = default;
  Dual(R b, R e) : body(std::move(b)), eps(std::move(e)) {}

  bool isZero() const { return body.isZero() && eps.isZero(); }

  Dual operator-() const { return Dual(-body, -eps); }
  Dual operator+(const Dual& o) const { return Dual(body + o.body, eps + o.eps); }
  Dual operator-(const Dual& o) const { return Dual(body - o.body, eps - o.eps); }
  Dual operator*(const Dual& o) const {
    return Dual(body * o.body, body * o.eps + eps * o.body);
  }
  bool operator==(const Dual& o) const { return body == o.body && eps == o.eps; }
  bool operator!=(const Dual& o) const { return !(*this == o); }

  Dual pow(unsigned long n) const {
    Dual r = *this;  // placeholder; reset below with correct one
    r.body = onePart();
    r.eps = zeroPart();
    Dual b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  std::string str() const {
    if (eps.isZero()) return body.str();
    std::string e = "(" + eps.str() + ")*eps";
    if (body.isZero()) return e;
    return body.str() + " + " + e;
  }

private:
  R zeroPart() const;
  R onePart() const;
};

template <>
inline Poly Dual<Poly>::zeroPart() const {
  return Poly::zero(body.ring());
}
template <>
inline Poly Dual<Poly>::onePart() const {
  return Poly::constant(body.ring(), 1);
}
template <>
inline LaurentPoly Dual<LaurentPoly>::zeroPart() const {
  return LaurentPoly::zero(body.base(), body.lvar());
}
template <>
inline LaurentPoly Dual<LaurentPoly>::onePart() const {
  return LaurentPoly::constant(body.base(), body.lvar(), 1);
}

using DualPoly = Dual<Poly>;
using DualLaurent = Dual<LaurentPoly>;

}  // namespace kflat
