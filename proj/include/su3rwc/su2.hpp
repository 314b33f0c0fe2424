#pragma once

#include "su3rwc/labels.hpp"
#include "su3rwc/surd.hpp"

namespace su3rwc {

// All spins are passed as twice their value so half-integers stay integral.

bool su2_triangle(int tj1, int tj2, int tj3);

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>; zero outside the triangle
// or when m != m1 + m2.
SurdSum su2_cg(int tj1, int tm1, int tj2, int tm2, int tj, int tm);

// Racah W(a b c d; e f); zero when any triangle fails.
SurdSum su2_racah_w(int ta, int tb, int tc, int td, int te, int tf);

// Unitary form U(a b c d; e f) = sqrt((2e+1)(2f+1)) W(a b c d; e f).
SurdSum su2_racah_unitary(int ta, int tb, int tc, int td, int te, int tf);

// Same coefficient with two-row U(2) labels, spin j = (q1 - q2)/2. Argument
// order follows the recoupling layout
//   | a  b  e |
//   | d  c  f |
// i.e. U(a b c d; e f) for the chains (a b) e, (e d) c versus (b d) f, (a f) c.
SurdSum su2_racah_unitary(const U2Label& a, const U2Label& b, const U2Label& e, const U2Label& c,
                          const U2Label& f, const U2Label& d);

}  // namespace su3rwc
