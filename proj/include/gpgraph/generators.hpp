#pragma once

#include <cstdint>

#include "gpgraph/graph.hpp"

namespace gpgraph {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);

// n vertices total: center 0 plus n-1 leaves.
Graph star(int n);

Graph petersen();

// Uniform-ish random tree from a random Prufer sequence; deterministic
// for a given (n, seed) across platforms.
Graph random_tree(int n, std::uint64_t seed);

// Chain of l cycles of length 2k, consecutive cycles glued at diametral
// vertices, laid out left to right. Vertex numbering walks each cycle in
// turn: left contact, top internals, bottom internals, right contact.
// Contact vertices are (2k-1)*i for i in 0..l.
Graph cycle_chain(int k, int l);

// Leftmost degree-2 contact vertex.
int cycle_chain_u(int k, int l);

// First glue (degree-4) vertex from the left.
int cycle_chain_v(int k, int l);

// 13-vertex graph: a 6-vertex path with a 4-cycle hung on its last vertex
// and two more 4-cycles chorded across earlier path vertices. Its sole
// bridge is (fixture_H_u1, fixture_H_u2).
Graph fixture_H();
inline constexpr int fixture_H_u1 = 4;
inline constexpr int fixture_H_u2 = 5;

// 11-vertex graph: K6 joined through a degree-4 apex and a bridge to a K4.
// Its sole bridge is (fixture_Hprime_u1, fixture_Hprime_u2).
Graph fixture_Hprime();
inline constexpr int fixture_Hprime_u1 = 6;
inline constexpr int fixture_Hprime_u2 = 7;

// The 16-vertex product of K4 with itself under the identity map,
// built from a hard-coded edge list as an independent cross-check for the
// product constructor.
Graph sierpinski_demo_K4();

}  // namespace gpgraph
