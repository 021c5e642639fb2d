#pragma once

#include <optional>
#include <vector>

namespace qhcurve {

/// Membership sieve for the monoid generated by `generators` on [0, limit).
std::vector<bool> semigroup_sieve(const std::vector<int>& generators, int limit);

/// Conductor of <generators> (least c with [c, inf) inside), or nothing when
/// the gcd of the generators is not 1.
std::optional<int> monomial_conductor(const std::vector<int>& generators);

/// Minimal generators of a numerical semigroup given by membership on
/// [0, limit), where every integer >= conductor is a member and conductor +
/// min positive element <= limit.
std::vector<int> minimal_generators(const std::vector<bool>& members, int conductor);

}  // namespace qhcurve
