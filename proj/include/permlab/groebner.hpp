#pragma once

#include <map>
#include <vector>

#include "permlab/polyring.hpp"

namespace permlab {

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::degrevlex();
    // Hard resource caps; exceeding either throws BudgetError so callers can
    // report a clean "out of budget" outcome instead of hanging.
    size_t max_basis = 20000;
    uint32_t max_degree = 40;
    // When nonzero, s-pairs whose lcm degree exceeds this are discarded.  For
    // homogeneous generators the result still decides membership correctly
    // for polynomials of degree <= truncate_degree.
    uint32_t truncate_degree = 0;
};

// Index into f.terms() of the maximal term under `order`.  Terms are stored
// degrevlex-descending, so this is 0 unless a different order is requested.
size_t leading_index(const Poly& f, MonomialOrder order);

// Canonical remainder of f modulo basis: no term of the result is divisible
// by the leading monomial of any basis element.  When basis is a Groebner
// basis this is the unique normal form.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 MonomialOrder order = MonomialOrder::degrevlex());

Poly s_polynomial(const Poly& f, const Poly& g, MonomialOrder order);

// Buchberger completion with the Gebauer-Moller pair filters and degree-first
// pair selection, followed by autoreduction.  Output is the unique reduced
// monic Groebner basis, sorted leading-monomial descending.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens,
                                 const GroebnerOptions& opts = {});

struct MembershipResult {
    bool member = false;
    Poly remainder;
};

MembershipResult ideal_member(const Poly& f, const std::vector<Poly>& gb,
                              MonomialOrder order = MonomialOrder::degrevlex());

// True when every polynomial of `sub` reduces to zero modulo `gb`.
bool ideal_contains(const std::vector<Poly>& gb, const std::vector<Poly>& sub,
                    MonomialOrder order = MonomialOrder::degrevlex());

// Express f as sum coeff[k] * gens[k] by tracking the reduction trail against
// the generators themselves (not a Groebner basis).  Returns nothing if the
// naive trail leaves a remainder.
std::optional<std::vector<Poly>> lift_combination(const Poly& f, const std::vector<Poly>& gens,
                                                  MonomialOrder order = MonomialOrder::degrevlex());

/// Memoizes reduced bases keyed by ring, order, and generator text.
class GroebnerCache {
  public:
    const std::vector<Poly>& get(const std::vector<Poly>& gens, const GroebnerOptions& opts = {});
    size_t size() const { return store_.size(); }
    void clear() { store_.clear(); }
    static GroebnerCache& global();

  private:
    std::map<std::string, std::vector<Poly>> store_;
};

} // namespace permlab
