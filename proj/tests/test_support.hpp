#ifndef VFCERT_TEST_SUPPORT_HPP
#define VFCERT_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "vfcert/parse.hpp"
#include "vfcert/poly.hpp"
#include "vfcert/ratfunc.hpp"

namespace vfcert::testing {

/// Deterministic generator for random exact objects used across the suites.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 4) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rational nonzero_rational(std::int64_t max_num = 9, std::int64_t max_den = 4) {
        Rational r = rational(max_num, max_den);
        while (r.is_zero()) r = rational(max_num, max_den);
        return r;
    }

    /// Random polynomial with the given max total degree; roughly `terms`
    /// draws, duplicates merge.
    Poly poly(const std::vector<std::string>& vars, int max_degree, int terms = 4) {
        Poly p(vars);
        for (int t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> e(vars.size(), 0);
            int budget = static_cast<int>(int_in(0, max_degree));
            for (int d = 0; d < budget; ++d)
                e[static_cast<std::size_t>(int_in(0, static_cast<std::int64_t>(vars.size()) - 1))]++;
            p.add_term(Monomial(e), rational());
        }
        return p;
    }

    Poly nonzero_poly(const std::vector<std::string>& vars, int max_degree, int terms = 4) {
        Poly p = poly(vars, max_degree, terms);
        while (p.is_zero()) p = poly(vars, max_degree, terms);
        return p;
    }

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace vfcert::testing

#endif
