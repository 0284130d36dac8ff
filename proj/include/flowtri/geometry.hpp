#pragma once

// Exact lattice geometry: simplicial complexes, f- and h-vectors, unimodularity,
// triangulation verification, and Ehrhart counting for flow polytopes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/exact.hpp"

namespace flowtri {

/// A complex stored by its maximal faces. Faces are sorted vertex-index sets;
/// the face list is sorted and pairwise non-contained. The complex {emptyset}
/// is a single empty facet; the void complex has no facets.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<int>> facets;

  /// Sorts each face, drops duplicates and faces contained in another face.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<std::vector<int>> faces);

  /// Largest face size minus one; -1 for {emptyset}.
  int dimension() const;
  bool is_pure() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// (f_{-1}, f_0, ..., f_dim) by expanding maximal faces.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// Coefficients of sum_k f_k z^{k+1} (1-z)^{D-1-k} with D = dim + 1; length D + 1.
std::vector<std::int64_t> h_vector(const SimplicialComplex& complex);

/// Both vectors computed from an explicit f-vector.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);

std::vector<std::int64_t> trim_trailing_zeros(std::vector<std::int64_t> v);
bool is_palindromic(const std::vector<std::int64_t>& v);

/// Euler characteristic sum_{k>=0} (-1)^k f_k.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Every face of size dim (a ridge) lies in exactly two facets.
bool is_closed_pseudomanifold(const SimplicialComplex& complex);

/// A complex whose vertices are lattice points.
struct Triangulation {
  SimplicialComplex complex;
  IntMatrix points;                 // per vertex
  std::vector<std::string> labels;  // per vertex
};

/// coeffs . x <= rhs
struct Halfspace {
  IntVector coeffs;
  std::int64_t rhs = 0;
};

/// What verify_triangulation needs to know about the polytope being triangulated:
/// its dimension, a set of valid inequalities containing every facet, and its
/// normalized volume from lattice-point counting.
struct Carrier {
  int dimension = 0;
  std::vector<Halfspace> halfspaces;
  std::int64_t normalized_volume = 0;
};

/// Product of the Smith normal form divisors of the difference matrix.
/// Throws ConsistencyError for affinely dependent input.
BigInt normalized_volume(const IntMatrix& vertices);

/// True iff v1 - v0, ..., vd - v0 is a basis of the lattice its span cuts out of Z^n.
/// Throws ConsistencyError for affinely dependent input.
bool is_unimodular_simplex(const IntMatrix& vertices);

struct TriangulationReport {
  bool ok = false;
  bool pure = false;          // every facet has dimension + 1 affinely independent vertices
  bool unimodular = false;    // every facet has normalized volume 1
  bool common_faces = false;  // ridge matching: boundary ridges once, interior ridges twice on opposite sides
  bool volume = false;        // normalized volumes sum to the carrier volume
  std::int64_t volume_sum = 0;
  std::int64_t expected_volume = 0;
  std::vector<std::string> issues;
};

TriangulationReport verify_triangulation(const Carrier& carrier, const Triangulation& tri);

/// Integer flows of strength t (all values >= 0, or >= 1 when `interior`).
std::int64_t count_lattice_points(const Dag& dag, int t, bool interior);

struct HStarData {
  std::vector<std::int64_t> counts;  // L(0..d+1)
  std::vector<std::int64_t> h_star;  // h*_0..h*_d
  int degree = 0;
  int codegree = 0;
};

/// Generic Ehrhart data for a d-polytope from a lattice counter
/// `count(t, interior)`. Cross-checks the codegree against the smallest dilate
/// with an interior point and throws ConsistencyError on disagreement.
HStarData hstar_from_counter(int d, const std::function<std::int64_t(int, bool)>& count);

/// Requires a valid DAG without idle edges (InvalidInput otherwise).
HStarData ehrhart_hstar(const Dag& dag);

/// degree_equality, cross-checked against palindromicity of h* when |E| <= 12.
bool is_gorenstein(const Dag& dag);

/// Facet inequalities -x_e <= 0 and the normalized volume sum(h*).
Carrier flow_carrier(const Dag& dag);

}  // namespace flowtri
