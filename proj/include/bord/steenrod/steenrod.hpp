#pragma once

#include "bord/ring/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bord::steenrod {

using ring::Polynomial;
using ring::RingPresentation;

/// Outcome of a family of checks: how many were evaluated and what failed.
struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Sq^i on each ring generator, extended to the whole ring by the Cartan formula.
///
/// Entries are optional: an absent Sq^i(g) with i < deg g is a cell the source leaves blank.
/// Sq^{deg g}(g) defaults to g^2 and Sq^{i > deg g}(g) is always zero; an absent entry that
/// a computation inside the degree bound would need raises DataError.
class SteenrodSpec {
public:
    /// squares[g] maps i >= 1 to Sq^i(generator g), as a polynomial in the free algebra.
    SteenrodSpec() = default;
    SteenrodSpec(RingPresentation ring, std::vector<std::map<int, Polynomial>> squares);

    const RingPresentation& ring() const { return ring_; }
    const std::map<int, Polynomial>& entries(std::size_t generator) const { return squares_.at(generator); }

    /// Sq^i(g) exactly as stored or implied by the axioms; nothing for a blank cell.
    std::optional<Polynomial> on_generator(std::size_t generator, int i) const;

    /// Sq^i(p) in normal form. p may be any homogeneous polynomial of the free algebra.
    Polynomial sq(int i, const Polynomial& p) const;
    /// Composite Sq^{ops[0]} Sq^{ops[1]} ... applied right to left.
    Polynomial sq_sequence(const std::vector<int>& ops, const Polynomial& p) const;

    /// Copy with one entry replaced (used to seed faults in tests).
    SteenrodSpec with_entry(std::size_t generator, int i, Polynomial value) const;

private:
    Polynomial sq_free(int i, const ring::Monomial& m) const;

    RingPresentation ring_;
    std::vector<std::map<int, Polynomial>> squares_;
};

/// Sq^{deg g}(g) = g^2, Sq^{i > deg g}(g) = 0, and every entry has degree deg g + i.
CheckReport verify_instability(const SteenrodSpec& spec);

/// Every Adem relation Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c (0 < a < 2b) on every
/// basis element of degree <= max_deg, wherever the result degree stays inside the bound.
CheckReport verify_adem(const SteenrodSpec& spec, int max_deg);

/// The five low relations singled out by name, on the same range as verify_adem.
CheckReport verify_low_adem(const SteenrodSpec& spec, int max_deg);

/// Sq^i of every relation reduces to zero wherever the degree allows.
CheckReport verify_relation_stability(const SteenrodSpec& spec);

/// Sq^1 squares to zero and is a derivation on all pairs of basis elements in range.
CheckReport verify_sq1_derivation(const SteenrodSpec& spec);

/// binom(n, k) mod 2 by Lucas' theorem; negative n via binom(n, k) = (-1)^k binom(k - n - 1, k).
bool binom_mod2(int n, int k);

} // namespace bord::steenrod
