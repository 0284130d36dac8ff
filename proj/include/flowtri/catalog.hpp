#pragma once

#include "flowtri/dag.hpp"

/// Canonical small instances shared by every module and test.
namespace flowtri::catalog {

/// k parallel edges s->t with ids e1..ek; F_1 is the (k-1)-simplex.
Dag parallel(int k);

/// One inner vertex v: a,b: s->v and c,d: v->t. F_1 is the unit square.
Dag d1();

/// Inner vertices 1,2: a,b: s->1; c,d: 1->2; e,f: 2->t. F_1 is the 3-cube.
Dag d2();

/// One inner vertex v: a,b,c: s->v and d,e,f: v->t. F_1 is the product of two triangles.
Dag d3();

/// Two inner vertices with indegree 2 and source outdegree 3:
/// a,b: s->1; c: s->2; d: 1->2; e: 1->t; f,g: 2->t. Seven edges, dimension 4.
/// With the ordered decomposition cg < adf < be the route bdg switches
/// levels 3 -> 2 -> 1.
Dag skew_pair();

}  // namespace flowtri::catalog
