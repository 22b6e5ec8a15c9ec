#include <algorithm>
#include <array>
#include <cmath>

#include "crjet/error.hpp"
#include "crjet/experiments.hpp"

namespace crjet {

void ExperimentConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  if (!(fd_step > 0)) throw Error(ErrorCode::invalid_argument, "fd_step must be positive");
  if (!(sv_rel_tol > 0 && sv_rel_tol < 1)) {
    throw Error(ErrorCode::invalid_argument, "sv_rel_tol must lie in (0, 1)");
  }
  if (!(density > 0 && density <= 1)) {
    throw Error(ErrorCode::invalid_argument, "density must lie in (0, 1]");
  }
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % range);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

mpq_class Rng::rational(unsigned bound) {
  const auto b = static_cast<std::int64_t>(bound);
  const long num = integer(-b, b);
  const long den = integer(1, std::max<std::int64_t>(b, 1));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class Rng::nonzero_rational(unsigned bound) {
  mpq_class q;
  do {
    q = rational(std::max(bound, 1u));
  } while (sgn(q) == 0);
  return q;
}

std::vector<MultiIndex> enumerate_monomials(std::size_t vars, unsigned lo, unsigned hi) {
  std::vector<MultiIndex> out;
  if (vars == 0) {
    if (lo == 0) out.emplace_back(0);
    return out;
  }
  for (unsigned degree = lo; degree <= hi; ++degree) {
    // Compositions of `degree` into `vars` parts, first variable's exponent
    // descending, which is graded-lex order.
    MultiIndex current(vars);
    auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
      if (pos + 1 == vars) {
        current.set(pos, remaining);
        out.push_back(current);
        return;
      }
      for (unsigned e = remaining + 1; e-- > 0;) {
        current.set(pos, e);
        self(self, pos + 1, remaining - e);
      }
      current.set(pos, 0);
    };
    fill(fill, 0, degree);
  }
  return out;
}

namespace {

GaussianRational random_complex(Rng& rng, unsigned bound) {
  mpq_class re = rng.rational(bound);
  mpq_class im = rng.rational(bound);
  return {std::move(re), std::move(im)};
}

bool keep(Rng& rng, double density) { return density >= 1.0 || rng.unit() < density; }

}  // namespace

MapJet sample_map(const ExperimentConfig& config, Rng& rng) {
  const CrSignature& sig = config.signature;
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);
  const std::size_t n = sig.n();
  const auto linear = enumerate_monomials(n, 1, 1);
  const auto higher = enumerate_monomials(n, 2, sig.k);
  const unsigned bound = config.coefficient_bound;

  std::vector<std::vector<ExactSeries::Term>> f_terms(sig.m_prime);
  for (auto& terms : f_terms) {
    for (const auto& e : linear) terms.push_back({e, random_complex(rng, bound)});
  }
  auto f_linear_zero = [&] {
    return std::all_of(f_terms.begin(), f_terms.end(), [](const auto& terms) {
      return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.coeff.is_zero(); });
    });
  };
  while (f_linear_zero()) {
    for (auto& terms : f_terms) {
      for (auto& t : terms) t.coeff = random_complex(rng, std::max(bound, 1u));
    }
  }
  std::vector<ExactSeries> f;
  for (auto& terms : f_terms) {
    for (const auto& e : higher) {
      if (keep(rng, config.density)) terms.push_back({e, random_complex(rng, bound)});
    }
    f.push_back(ExactSeries::from_terms(spaces.source_holo, sig.k, std::move(terms)));
  }

  std::vector<ExactSeries> g;
  for (std::size_t j = 0; j < sig.d; ++j) {
    std::vector<ExactSeries::Term> terms;
    MultiIndex w(n);
    w.set(sig.m + j, 1);
    terms.push_back({w, GaussianRational(1)});
    for (const auto& e : higher) {
      if (keep(rng, config.density)) terms.push_back({e, random_complex(rng, bound)});
    }
    g.push_back(ExactSeries::from_terms(spaces.source_holo, sig.k, std::move(terms)));
  }
  return {sig, ExactSeriesVector(std::move(f)), ExactSeriesVector(std::move(g))};
}

MapJet sample_map(const ExperimentConfig& config) {
  Rng rng(config.seed);
  return sample_map(config, rng);
}

AlgebraicModel sample_model(const ExperimentConfig& config, Rng& rng) {
  const CrSignature& sig = config.signature;
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);
  const VariableSpace& target = *spaces.target_full;
  const unsigned order = std::max(sig.nu, sig.k);
  const auto monomials = enumerate_monomials(target.size(), 2, sig.nu);

  std::vector<ExactSeries> rho;
  for (std::size_t j = 0; j < sig.d; ++j) {
    std::vector<ExactSeries::Term> terms;
    std::vector<MultiIndex> seen;
    for (const auto& e : monomials) {
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      MultiIndex partner(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) partner.set(target.conjugate_of(i), e[i]);
      seen.push_back(partner);
      if (!keep(rng, config.density)) continue;
      if (partner == e) {
        terms.push_back({e, GaussianRational(rng.rational(config.coefficient_bound))});
      } else {
        GaussianRational c = random_complex(rng, config.coefficient_bound);
        terms.push_back({partner, c.conj()});
        terms.push_back({e, std::move(c)});
      }
    }
    rho.push_back(ExactSeries::from_terms(spaces.target_full, order, std::move(terms)));
  }
  return {sig, ExactSeriesVector(std::move(rho))};
}

AlgebraicModel sample_model(const ExperimentConfig& config) {
  Rng rng(config.seed);
  // Skip the map's draws so that sample_map/sample_model with one seed give
  // an independent-looking pair.
  rng.next();
  return sample_model(config, rng);
}

}  // namespace crjet
