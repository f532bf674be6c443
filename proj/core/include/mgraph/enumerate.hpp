#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mgraph/graph_kind.hpp"
#include "mgraph/partition.hpp"

namespace mgraph {

// Ordered by the row index of the added (removed) box.
std::vector<Partition> covers_up(const Partition& mu, const GraphKind& kind);
std::vector<Partition> covers_down(const Partition& lambda, const GraphKind& kind);

// Partitions of n (strict ones for the Schur graph), decreasing lexicographic.
std::vector<Partition> level(int n, const GraphKind& kind, std::optional<int> max_length = {});
// All partitions with |mu| <= n, by size then decreasing lexicographic.
std::vector<Partition> partitions_up_to(int n, const GraphKind& kind, std::optional<int> max_length = {});

// A filling row by row: entry[i][j] is the value in box (i+1, j+1).
using Filling = std::vector<std::vector<int>>;

// Reverse tableaux of shape mu with entries in 1..k: weakly decreasing along
// rows, strictly decreasing down columns.
std::vector<Filling> reverse_tableaux(const Partition& mu, int k);
void for_each_reverse_tableau(const Partition& mu, int k, const std::function<void(const Filling&)>& f);

}  // namespace mgraph
