#include <doctest.h>

#include <algorithm>

#include "foldkit/coloring.hpp"
#include "foldkit/errors.hpp"
#include "foldkit/families.hpp"
#include "foldkit/fold.hpp"
#include "support/oracles.hpp"

using namespace foldkit;

namespace {

// The known complete 4-coloring of C9, colors a..d as 0..3 on vertices in
// cycle order.
Coloring c9_complete_coloring() { return Coloring{{0, 3, 1, 0, 2, 3, 0, 2, 1}, 4}; }

}  // namespace

TEST_SUITE("proper and complete") {
  TEST_CASE("the complete 4-coloring of C9") {
    Graph c9 = make_cycle(9);
    CHECK(is_proper(c9, c9_complete_coloring()));
    CHECK(is_complete(c9, c9_complete_coloring()));
  }

  TEST_CASE("monochromatic edge is improper") {
    Graph k2 = make_complete(2);
    CHECK_FALSE(is_proper(k2, Coloring{{0, 0}, 1}));
    CHECK(is_proper(Graph(3), Coloring{{0, 0, 0}, 1}));  // edgeless
    CHECK(is_complete(Graph(3), Coloring{{0, 0, 0}, 1}));
  }

  TEST_CASE("completeness needs every color pair on an edge") {
    // P4 colored 0,1,2,0 covers pairs 01, 12, 02 on its three edges.
    CHECK(is_complete(make_path(4), Coloring{{0, 1, 2, 0}, 3}));
    // C4 colored 0,1,0,2 never puts 1 next to 2.
    Graph c4 = make_cycle(4);
    Coloring c{{0, 1, 0, 2}, 3};
    CHECK(is_proper(c4, c));
    CHECK_FALSE(is_complete(c4, c));
  }

  TEST_CASE("shape validation") {
    Graph k2 = make_complete(2);
    CHECK_THROWS_AS(is_proper(k2, Coloring{{0}, 1}), PreconditionError);
    CHECK_THROWS_AS(is_proper(k2, Coloring{{0, 2}, 3}), PreconditionError);  // color 1 unused
    CHECK_THROWS_AS(is_proper(k2, Coloring{{0, -1}, 1}), PreconditionError);
  }
}

TEST_SUITE("chi") {
  TEST_CASE("known values") {
    CHECK(chi(make_cycle(9)).value == 3);
    CHECK(chi(make_wheel(9)).value == 4);
    CHECK(chi(make_complete(4)).value == 4);
    CHECK(chi(make_cycle(5)).value == 3);
    CHECK(chi(make_cycle(6)).value == 2);
    CHECK(chi(make_path(4)).value == 2);
    CHECK(chi(Graph(0)).value == 0);
    CHECK(chi(Graph(1)).value == 1);
    CHECK(chi(Graph(4)).value == 1);
  }

  TEST_CASE("certificate is proper and uses exactly chi colors") {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        ChiResult r = chi(g);
        CHECK(is_proper(g, r.certificate));
        CHECK(r.certificate.colors == r.value);
      }
    }
  }

  TEST_CASE("matches the assignment-odometer oracle") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        CHECK(chi(g).value == oracles::naive_chi(g));
      }
    }
  }

  TEST_CASE("size bound") {
    CHECK_THROWS_WITH_AS(chi(Graph(17)), doctest::Contains("16"), PreconditionError);
    ChiOptions opts;
    opts.max_vertices = 17;
    CHECK(chi(Graph(17), opts).value == 1);
  }
}

TEST_SUITE("psi") {
  TEST_CASE("known values") {
    CHECK(psi(make_cycle(9)).value == 4);
    CHECK(psi(make_path(4)).value == 3);
    CHECK(psi(make_complete(4)).value == 4);
    CHECK(psi(make_cycle(4)).value == 2);
    CHECK(psi(Graph(0)).value == 0);
    CHECK(psi(Graph(1)).value == 1);
    CHECK(psi(Graph(5)).value == 1);
  }

  TEST_CASE("matches the surjective-assignment oracle") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        CHECK(psi(g).value == oracles::naive_psi(g));
      }
    }
  }

  TEST_CASE("certificates are proper and complete, edge bound holds") {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        PsiResult r = psi(g);
        CHECK(is_proper(g, r.certificate));
        CHECK(is_complete(g, r.certificate));
        CHECK(r.certificate.colors == r.value);
        CHECK(r.value * (r.value - 1) / 2 <= g.edge_count());
        CHECK(chi(g).value <= r.value);
      }
    }
  }

  TEST_CASE("isolated vertex never changes psi below 1") {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        Graph with_isolated = disjoint_union(g, Graph(1));
        CHECK(psi(with_isolated).value == std::max(1, psi(g).value));
      }
    }
  }

  TEST_CASE("size bound") {
    CHECK_THROWS_WITH_AS(psi(Graph(11)), doctest::Contains("10"), PreconditionError);
    PsiOptions opts;
    opts.max_vertices = 12;
    CHECK(psi(make_cycle(12), opts).value >= 1);
  }
}

TEST_SUITE("coloring certificates") {
  TEST_CASE("from a trace") {
    // Empty trace on K3: the identity 3-coloring.
    FoldTrace identity = make_trace(make_complete(3), {});
    Coloring c = coloring_from_trace(identity);
    CHECK(c.colors == 3);
    CHECK(c.assignment == std::vector<int>{0, 1, 2});

    // The maximal fold of P4 gives a complete 2-coloring.
    FoldTrace p4_folds = maximal_fold(make_path(4));
    Coloring c2 = coloring_from_trace(p4_folds);
    CHECK(c2.colors == 2);
    CHECK(is_proper(make_path(4), c2));
    CHECK(is_complete(make_path(4), c2));
  }

  TEST_CASE("rejects non-clique targets and invalid traces") {
    FoldTrace not_clique = make_trace(make_path(4), {});
    CHECK_THROWS_WITH_AS(coloring_from_trace(not_clique), doctest::Contains("clique"),
                         PreconditionError);
    FoldTrace tampered = maximal_fold(make_path(4));
    tampered.class_map[0] = 99;
    CHECK_THROWS_WITH_AS(coloring_from_trace(tampered), doctest::Contains("invalid trace"),
                         PreconditionError);
  }

  TEST_CASE("text round trip") {
    Coloring c = c9_complete_coloring();
    Coloring back = parse_coloring(emit_coloring(c));
    CHECK(back == c);
    CHECK_THROWS_AS(parse_coloring("nope\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring("coloring v1\n0 0\n2 1\n"), ParseError);  // vertex 1 missing
  }
}
