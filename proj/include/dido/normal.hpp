#ifndef DIDO_NORMAL_HPP
#define DIDO_NORMAL_HPP

namespace dido {

// Standard normal quantile function (probit). Accurate to ~1e-15 on (0,1);
// returns -inf/+inf at 0/1.
double probit(double p);

// Standard normal CDF.
double normal_cdf(double x);

}  // namespace dido

#endif  // DIDO_NORMAL_HPP
