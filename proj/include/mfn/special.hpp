#pragma once

#include <complex>
#include <stdexcept>

namespace mfn {

struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;
};

class GammaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ln Gamma(x) for x > 0. Relative error below 1e-12 on [0.5, 170].
double ln_gamma(double x);

// |Gamma(z)| with reflection for re <= 0.5. Throws GammaDomainError at the
// poles z = 0, -1, -2, ...
double abs_gamma(ComplexPoint z);

// ln |Gamma(z)|, same domain as abs_gamma; usable when |Gamma| would
// under/overflow as a double.
double ln_abs_gamma(ComplexPoint z);

}  // namespace mfn
