#ifndef MATASYM_SPECTRAL_HPP
#define MATASYM_SPECTRAL_HPP

#include <vector>

#include "matasym/matrix.hpp"

namespace matasym {

// Spectral data of a matrix that the asymptotic theory keys on.
//   omega        min Re(lambda) over the spectrum
//   mu           min eigenvalue of the Hermitian part (A + A^H)/2
//   delta_margin pi/2 - max |arg lambda|; negative when the spectrum leaves
//                every open right sector (singular matrices get -pi/2)
//   eta          mu / omega when omega > 0, NaN otherwise
//   n_p          ||P|| ||P^{-1}|| of the column-normalized eigenvector matrix
struct SpectralProfile {
  std::vector<Complex> eigenvalues;
  double omega = 0.0;
  double mu = 0.0;
  double delta_margin = 0.0;
  double eta = 0.0;
  double n_p = 1.0;
  bool is_normal = false;
  bool is_hermitian_pd = false;
};

// Sampled diagnostic of the resolvent power bound
//   ||(lambda I - A)^{-n}|| <= M (omega1 - lambda)^{-n},  lambda < omega1,
// over a grid of shifts and powers. Not a proof: a certificate for the
// sampled pairs only.
struct ResolventBoundReport {
  double m_bound = 0.0;
  double omega1 = 0.0;
  std::vector<double> lambda_samples;
  int n_max = 0;
  double worst_ratio = 0.0;
  bool passed = false;
};

// (A + A^H)/2, symmetrized entrywise so the result is exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// Full spectral profile. Throws NearDefective when the eigenvector
// conditioning gate (1e8) trips for a non-normal matrix.
SpectralProfile spectral_profile(const ComplexMatrix& a);

// min eigenvalue of the Hermitian part; defined for every square matrix.
double mu_lower_bound(const ComplexMatrix& a);

// min Re(lambda); defined for every square matrix.
double omega_min_real(const ComplexMatrix& a);

// True iff every eigenvalue is nonzero with |arg lambda| <= pi/2 - delta.
bool spectrum_in_sector(const ComplexMatrix& a, double delta);

// Evaluate the resolvent power bound on the sampled (lambda, n) grid.
// Throws SingularResolvent when a shift collides with an eigenvalue.
ResolventBoundReport sample_resolvent_bound(const ComplexMatrix& a, double m_bound,
                                            double omega1,
                                            const std::vector<double>& lambda_grid,
                                            int n_max);

}  // namespace matasym

#endif  // MATASYM_SPECTRAL_HPP
