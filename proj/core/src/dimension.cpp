#include "crjet/dimension.hpp"

#include <cmath>

#include <gmpxx.h>

#include "crjet/error.hpp"

namespace crjet {

namespace {

std::uint64_t checked(const mpz_class& value) {
  if (sgn(value) < 0) return 0;
  if (!value.fits_ulong_p()) throw Error(ErrorCode::overflow, "dimension exceeds 64 bits");
  return value.get_ui();
}

mpz_class binomial_mpz(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// #{monomials of total degree lo..hi in `vars` variables}
mpz_class monomial_count(unsigned long vars, unsigned long lo, unsigned long hi) {
  if (hi < lo) return 0;
  mpz_class upto_hi = binomial_mpz(vars + hi, hi);
  mpz_class below_lo = lo == 0 ? mpz_class(0) : binomial_mpz(vars + lo - 1, lo - 1);
  return upto_hi - below_lo;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return checked(binomial_mpz(n, k));
}

std::uint64_t dim_target(const CrSignature& s) {
  return checked(s.d * monomial_count(2 * s.m + s.d, 2, s.k));
}

std::uint64_t dim_source_maps(const CrSignature& s) {
  const unsigned long n = s.n();
  mpz_class f = s.m_prime * monomial_count(n, 1, s.k);
  mpz_class g = s.d * monomial_count(n, 2, s.k);
  return checked(2 * (f + g));
}

std::uint64_t dim_source_models(const CrSignature& s) {
  return checked(s.d * monomial_count(2 * s.n_prime(), 2, s.nu));
}

DimensionReport dimension_report(const CrSignature& s) {
  s.validate();
  DimensionReport r;
  r.signature = s;
  r.dim_target = dim_target(s);
  r.dim_source_maps = dim_source_maps(s);
  r.dim_source_models = dim_source_models(s);
  r.source_total = r.dim_source_maps + r.dim_source_models;
  r.estimate_maps = 2.0 * s.n_prime() * std::pow(s.k + 1.0, s.n());
  r.estimate_models = s.d * std::pow(s.nu + 1.0, s.n_prime());
  r.estimate_models_real = s.d * std::pow(s.nu + 1.0, 2.0 * s.n_prime());

  const unsigned long exponent = 2 * s.m + s.d;
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), exponent);
  r.growth_constant = s.d / factorial.get_d();
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), s.k, exponent);
  r.target_growth_bound = checked(mpz_class(s.d * power / factorial));

  r.implied_source_constant =
      static_cast<double>(r.source_total) / (r.estimate_maps + r.estimate_models);
  r.crossover = r.dim_target > r.source_total;
  return r;
}

std::optional<DimensionReport> crossover_order(const CrSignature& s, unsigned k_max) {
  if (s.m == 0) {
    throw Error(ErrorCode::precondition,
                "no crossover for m = 0: target and source grow at the same rate");
  }
  CrSignature at = s;
  for (unsigned k = 2; k <= k_max; ++k) {
    at.k = k;
    DimensionReport report = dimension_report(at);
    if (report.crossover) return report;
  }
  return std::nullopt;
}

}  // namespace crjet
