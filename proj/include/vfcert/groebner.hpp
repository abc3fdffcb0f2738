#ifndef VFCERT_GROEBNER_HPP
#define VFCERT_GROEBNER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vfcert/poly.hpp"

namespace vfcert {

struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };
    Kind kind = Kind::GrevLex;
    std::size_t split = 0;  // Block: the first `split` variables are eliminated

    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const;
};

/// Polynomial ideal given by generators. Zero generators are dropped on
/// construction; an empty list is the zero ideal.
struct Ideal {
    std::vector<std::string> vars;
    std::vector<Poly> generators;

    static Ideal make(std::vector<std::string> vars, const std::vector<Poly>& gens);
};

class BudgetExhausted : public std::runtime_error {
  public:
    explicit BudgetExhausted(const std::string& where)
        : std::runtime_error("computation budget exhausted in " + where) {}
};

struct GroebnerOptions {
    std::uint64_t step_budget = 1'000'000;  // reduction steps
};

struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Poly> basis;  // reduced: monic, auto-reduced, sorted by leading monomial
};

/// Buchberger with the sugar selection strategy and the Gebauer-Moeller
/// pair criteria. Deterministic: identical inputs give byte-identical bases.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// Unique remainder of p modulo gb; zero iff p lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb, const GroebnerOptions& opts = {});

/// Elimination ideal: generators of ideal ∩ Q[keep], keep a sublist of the
/// ambient. Uses a block order placing the eliminated variables first.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep,
                const GroebnerOptions& opts = {});

/// Finite-standard-monomial criterion: every ambient variable has a pure
/// power among the leading monomials (trivially true for the unit ideal).
bool is_zero_dimensional(const GroebnerBasis& gb);

}  // namespace vfcert

#endif
