#pragma once

#include <cstddef>

#include "mgraph/graph_kind.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/poly.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

// kappa(mu, lambda) for lambda covering mu. Throws std::invalid_argument on
// a non-edge.
Rational edge_multiplicity(const Partition& mu, const Partition& lambda, const GraphKind& kind);

// The Jack edge weight as a reduced rational function of theta.
RationalFunction jack_kappa_function(const Partition& mu, const Partition& lambda);

// Weighted number of increasing paths mu -> lambda. Memoized per
// (kind, mu, lambda); safe to call from several threads.
Rational dim(const Partition& mu, const Partition& lambda, const GraphKind& kind);
inline Rational dim(const Partition& lambda, const GraphKind& kind) { return dim(Partition(), lambda, kind); }

// Closed forms for dim(empty, lambda). Jack has none and is rejected.
Rational dim_closed_form(const Partition& lambda, const GraphKind& kind);

std::size_t dim_cache_size();
void clear_dim_cache();

}  // namespace mgraph
