#include "sck/minkowski.hpp"

#include "sck/error.hpp"

namespace sck {

Rat minkowski_forward(const Rat& x) {
  if (x < 0 || x > 1) fail("OutOfRange", "expected a rational in [0,1]");
  if (x == 0) return Rat(0);
  if (x == 1) return Rat(1);
  // x = [0; a1, a2, ...];  ?(x) = sum_k (-1)^{k+1} 2^{1 - (a1 + ... + ak)}
  Int p = numerator(x), q = denominator(x);
  Rat out(0);
  Int acc = 0;
  int sign = 1;
  while (p != 0) {
    Int a = q / p, r = q % p;
    acc += a;
    Rat term = Rat(2) / Rat(Int(1) << acc.convert_to<unsigned>());
    out += sign > 0 ? term : -term;
    sign = -sign;
    q = p;
    p = r;
  }
  return out;
}

Rat minkowski_inverse(const Rat& y) {
  if (y < 0 || y > 1) fail("OutOfRange", "expected a rational in [0,1]");
  if (!is_dyadic(y)) fail("NonDyadicInput", "inverse is defined on dyadics");
  if (y == 0) return Rat(0);
  if (y == 1) return Rat(1);
  Int lp = 0, lq = 1, rp = 1, rq = 1;  // Stern-Brocot interval
  Rat ly(0), ry(1);
  for (;;) {
    Int mp = lp + rp, mq = lq + rq;
    Rat my = (ly + ry) / 2;
    if (y == my) return Rat(mp, mq);
    if (y < my) {
      rp = mp;
      rq = mq;
      ry = my;
    } else {
      lp = mp;
      lq = mq;
      ly = my;
    }
  }
}

}  // namespace sck
