#pragma once

// Random DAG generators for property tests and the fuzz command.

#include <random>

#include "flowtri/dag.hpp"

namespace flowtri {

/// A valid DAG with at most `max_edges` edges (at least 1). Every inner vertex
/// gets one edge from an earlier vertex and one to a later vertex; the rest of
/// the budget is spent on random forward edges. Degree equality is not enforced.
Dag random_dag(std::mt19937_64& rng, int max_edges);

/// Union of `route_count` random routes through up to `max_inner` inner
/// vertices, with idle edges contracted. Satisfies degree equality and has no
/// idle edges. Edge ids are single letters while they last.
Dag random_balanced_dag(std::mt19937_64& rng, int route_count, int max_inner);

/// Draws balanced DAGs until one has at most `max_edges` edges.
Dag random_balanced_dag_within(std::mt19937_64& rng, int max_edges);

}  // namespace flowtri
