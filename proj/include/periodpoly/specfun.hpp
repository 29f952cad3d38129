#ifndef PERIODPOLY_SPECFUN_HPP
#define PERIODPOLY_SPECFUN_HPP

namespace periodpoly::specfun {

// Accuracy goals for one special-function evaluation. The defaults leave
// roughly three orders of magnitude of headroom above the verification
// tolerances used downstream (1e-6 .. 1e-9).
struct PrecisionBudget {
    double target_abs_error = 1e-14;
    double target_rel_error = 1e-13;
};

// Gamma(s) for s > 0. Throws Domain for s <= 0 and Overflow once the value
// exceeds the double range (s > ~171.62); callers needing larger arguments
// must work with log_gamma.
double gamma(double s);

// ln Gamma(s) for s > 0. Absolute error is target_abs_error plus the
// unavoidable few-ulp term proportional to |ln Gamma(s)|.
double log_gamma(double s);

// Upper incomplete gamma Gamma(s, x), s > 0, x >= 0. Power series below the
// x = s + 1 switchover, continued fraction above it. Relative error within
// the default budget; Overflow is thrown when the value itself is not
// representable.
double upper_incomplete_gamma(double s, double x);

// Regularized Q(s, x) = Gamma(s, x) / Gamma(s) in [0, 1]. Never overflows;
// this is the quantity the two evaluation regions actually produce.
double upper_incomplete_gamma_regularized(double s, double x);

// Riemann zeta on the real ray s > 1, Euler-Maclaurin with an explicit tail
// bound; the cutoff is raised until the bound fits the budget.
double zeta(double s, const PrecisionBudget& budget = {});

}  // namespace periodpoly::specfun

#endif
