#ifndef VFCERT_MONOMIAL_HPP
#define VFCERT_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vfcert {

/// Exponent vector, one entry per ambient variable.
class Monomial {
  public:
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    /// The monomial 1 (all exponents zero).
    static Monomial unit(std::size_t nvars) {
        return Monomial(std::vector<std::uint32_t>(nvars, 0));
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exps() const { return e_; }

    int degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0,
                               [](int a, std::uint32_t b) { return a + static_cast<int>(b); });
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
    }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient o / this. Caller guarantees divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    /// True when only variable i occurs (a pure power, possibly 1).
    bool is_pure_power_of(std::size_t i) const {
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (j != i && e_[j] > 0) return false;
        return e_[i] > 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  private:
    std::vector<std::uint32_t> e_;
};

/// Graded lexicographic: higher total degree wins, ties broken left to right.
inline int cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    return 0;
}

/// Graded reverse lexicographic.
inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
    return 0;
}

/// Storage order for term maps (any total order would do; grlex keeps the
/// map iteration aligned with the canonical printing order).
struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_grlex(a, b) < 0; }
};

}  // namespace vfcert

#endif
