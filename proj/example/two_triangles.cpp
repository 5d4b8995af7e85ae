// Two triangles sharing an edge, and the graph obtained by merging the
// endpoints of edge 1. Prints the B / X table and the trivariate polynomial.

#include <iostream>

#include "tutte3/tutte3.hpp"

int main() {
  using namespace tutte3;

  const Multigraph g{{"a", "b", "c", "d"},
                     {{1, "a", "b"}, {2, "b", "c"}, {3, "c", "a"}, {4, "c", "d"}, {5, "d", "a"}}};
  const Multigraph merged = identify_vertices(g, {{"a", "b"}, {"c"}, {"d"}});
  const Perspective p(cycle_matroid(g), cycle_matroid(merged));

  std::cout << "B\tInt\tExt\tX\tTerm\n";
  for (const BijectionRow& row : bijection_table(p)) {
    std::cout << to_string(row.basis) << '\t' << to_string(row.internal) << '\t'
              << to_string(row.external) << '\t' << to_string(row.image) << '\t'
              << monomial_string(row.monomial) << '\n';
  }

  const Polynomial t = tutte_activities(p);
  std::cout << "T = " << to_canonical_string(t) << '\n';
  std::cout << "T_M(x,y) = " << to_canonical_string(tutte_bivariate_crapo(p.m())) << '\n';

  const bool agree = t == tutte_compatible(p) && t == tutte_rank_generating(p);
  return agree ? 0 : 1;
}
