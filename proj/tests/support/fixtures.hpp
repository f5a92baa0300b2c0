#pragma once

#include "ftoracle/graph.hpp"

namespace fixtures {

// 0 -> 1 -> 2 -> 3 -> 0, unit weights.
inline fto::Graph cycle4() { return fto::Graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

// s=0, a=1, t=2: s->a:1, a->t:1, s->t:3, t->s:1.
inline fto::Graph tri() { return fto::Graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}, {2, 0, 1}}); }

// s=0, a=1, b=2: s->a:1, a->b:1, s->b:5.
inline fto::Graph dag() { return fto::Graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}}); }

}  // namespace fixtures
