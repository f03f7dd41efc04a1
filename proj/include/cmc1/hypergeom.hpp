#ifndef CMC1_HYPERGEOM_HPP
#define CMC1_HYPERGEOM_HPP

namespace cmc1 {

// Pochhammer symbol (alpha)_i = alpha (alpha+1) ... (alpha+i-1), (alpha)_0 = 1.
double pochhammer(double alpha, int i);

// Terminating Gauss hypergeometric sum F(a, -p, c, x) with p a nonnegative
// integer.  The series has p+1 terms, so it is a polynomial in x and may be
// evaluated anywhere.  c must not be a nonpositive integer.
double hypergeom_terminating(double a, int p, double c, double x);

// Derivative in x of the same polynomial.
double hypergeom_terminating_dx(double a, int p, double c, double x);

}  // namespace cmc1

#endif
