#include <doctest.h>

#include "foldkit/coloring.hpp"
#include "foldkit/errors.hpp"
#include "foldkit/families.hpp"
#include "foldkit/fold.hpp"
#include "foldkit/threshold.hpp"
#include "support/oracles.hpp"

using namespace foldkit;

namespace {

CreationSequence seq(const std::string& text) { return parse_creation_sequence(text); }

}  // namespace

TEST_SUITE("creation sequences") {
  TEST_CASE("realize") {
    CHECK(realize(seq("iiiu")) == make_star(3));
    CHECK(realize(seq("iuuu")) == make_complete(4));
    CHECK(realize(seq("i")) == Graph(1));
    CHECK(realize(seq("")) == Graph(0));
    CHECK(realize(seq("iui")).edge_count() == 1);  // K2 plus an isolated vertex
  }

  TEST_CASE("text form") {
    CHECK(format_creation_sequence(seq("iuiu")) == "iuiu");
    CHECK_THROWS_WITH_AS(parse_creation_sequence("iux"), doctest::Contains("position 2"),
                         ParseError);
  }
}

TEST_SUITE("threshold recognition") {
  TEST_CASE("star, clique, path") {
    ThresholdCheck star = is_threshold(make_star(3));
    REQUIRE(star.is_threshold());
    CHECK(*star.sequence == seq("iiiu"));

    ThresholdCheck k4 = is_threshold(make_complete(4));
    REQUIRE(k4.is_threshold());
    CHECK(*k4.sequence == seq("iuuu"));

    ThresholdCheck p4 = is_threshold(make_path(4));
    REQUIRE_FALSE(p4.is_threshold());
    CHECK(p4.witness->kind == ForbiddenSubgraph::Kind::P4);
  }

  TEST_CASE("C4 and 2K2 are the other refusal witnesses") {
    ThresholdCheck c4 = is_threshold(make_cycle(4));
    REQUIRE_FALSE(c4.is_threshold());
    CHECK(c4.witness->kind == ForbiddenSubgraph::Kind::C4);
    CHECK(c4.witness->vertices == std::array<int, 4>{0, 1, 2, 3});

    ThresholdCheck two_k2 = is_threshold(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    REQUIRE_FALSE(two_k2.is_threshold());
    CHECK(two_k2.witness->kind == ForbiddenSubgraph::Kind::TwoK2);
  }

  TEST_CASE("round trip over every sequence up to length 7") {
    for (int length = 1; length <= 7; ++length) {
      for (int bits = 0; bits < (1 << (length - 1)); ++bits) {
        CreationSequence s{CreationOp::AddIsolated};
        for (int i = 0; i + 1 < length; ++i) {
          s.push_back(bits >> i & 1 ? CreationOp::AddUniversal : CreationOp::AddIsolated);
        }
        ThresholdCheck check = is_threshold(realize(s));
        REQUIRE(check.is_threshold());
        CHECK(*check.sequence == s);
      }
    }
  }

  TEST_CASE("peeling agrees with the forbidden-subgraph scan") {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        ThresholdCheck check = is_threshold(g);
        bool witness_in_graph = false;
        if (!check.is_threshold()) {
          auto kind = check.witness->kind;
          auto q = check.witness->vertices;
          Graph sub = g.induced((std::uint64_t{1} << q[0]) | (std::uint64_t{1} << q[1]) |
                                (std::uint64_t{1} << q[2]) | (std::uint64_t{1} << q[3]));
          int m = sub.edge_count();
          witness_in_graph = (kind == ForbiddenSubgraph::Kind::P4 && m == 3) ||
                             (kind == ForbiddenSubgraph::Kind::C4 && m == 4) ||
                             (kind == ForbiddenSubgraph::Kind::TwoK2 && m == 2);
        }
        // independent scan over 4-subsets
        bool clean = true;
        for (int a = 0; a < n && clean; ++a)
          for (int b = a + 1; b < n && clean; ++b)
            for (int c = b + 1; c < n && clean; ++c)
              for (int d = c + 1; d < n && clean; ++d) {
                Graph sub = g.induced((std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                      (std::uint64_t{1} << c) | (std::uint64_t{1} << d));
                bool p4 = oracles::brute_isomorphic(sub, make_path(4));
                bool c4 = oracles::brute_isomorphic(sub, make_cycle(4));
                bool kk = oracles::brute_isomorphic(sub, Graph::from_edges(4, {{0, 1}, {2, 3}}));
                if (p4 || c4 || kk) clean = false;
              }
        CHECK(check.is_threshold() == clean);
        if (!check.is_threshold()) CHECK(witness_in_graph);
      }
    }
  }
}

TEST_SUITE("trivially perfect") {
  TEST_CASE("2K2 is allowed, C4 is not") {
    CHECK(is_trivially_perfect(Graph::from_edges(4, {{0, 1}, {2, 3}})).value);
    TriviallyPerfectCheck c4 = is_trivially_perfect(make_cycle(4));
    CHECK_FALSE(c4.value);
    CHECK(c4.witness->vertices == std::array<int, 4>{0, 1, 2, 3});
  }

  TEST_CASE("threshold graphs are trivially perfect, not conversely") {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        ThresholdCheck threshold = is_threshold(g);
        TriviallyPerfectCheck tp = is_trivially_perfect(g);
        if (threshold.is_threshold()) CHECK(tp.value);
        if (!tp.value) CHECK_FALSE(threshold.is_threshold());
      }
    }
  }
}

TEST_SUITE("psi fast path") {
  TEST_CASE("peeling values") {
    CHECK(psi_threshold(seq("iuuuu")) == 5);  // K5
    CHECK(psi_threshold(seq("iiiu")) == 2);   // star
    CHECK(psi_threshold(seq("i")) == 1);
    CHECK(psi_threshold(seq("")) == 0);
    CHECK(psi_threshold(seq("iiiii")) == 1);  // edgeless
  }

  TEST_CASE("matches the exact solver on every sequence up to length 8") {
    for (int length = 1; length <= 8; ++length) {
      for (int bits = 0; bits < (1 << (length - 1)); ++bits) {
        CreationSequence s{CreationOp::AddIsolated};
        for (int i = 0; i + 1 < length; ++i) {
          s.push_back(bits >> i & 1 ? CreationOp::AddUniversal : CreationOp::AddIsolated);
        }
        Graph g = realize(s);
        CHECK(psi_threshold(s) == psi(g).value);
        CHECK(psi_threshold(s) == chi(g).value);
      }
    }
  }
}

TEST_SUITE("universal reduction") {
  TEST_CASE("wheel, cycle, clique") {
    auto wheel = reduce_universal(make_wheel(9));
    REQUIRE(wheel.has_value());
    CHECK(wheel->first == 9);
    CHECK(wheel->second == make_cycle(9));
    CHECK(1 + psi(wheel->second).value == 5);

    CHECK_FALSE(reduce_universal(make_cycle(9)).has_value());

    auto k3 = reduce_universal(make_complete(3));
    REQUIRE(k3.has_value());
    CHECK(k3->first == 0);
    CHECK(k3->second == make_complete(2));
  }

  TEST_CASE("three quantities agree on small graphs with a hub") {
    SigmaOptions search_only;
    search_only.use_universal_reduction = false;
    for (int n = 1; n <= 4; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        Graph gu = add_universal(g);
        int folded = sigma(gu, search_only).sigma;
        CHECK(folded == 1 + psi(g).value);
        CHECK(folded == psi(gu).value);
      }
    }
  }
}

TEST_SUITE("marcu bound") {
  TEST_CASE("the two-case table") {
    CHECK(marcu_min_length(3).min_n == 3);
    CHECK(marcu_min_length(4).min_n == 8);
    CHECK(marcu_min_length(5).min_n == 10);
    CHECK(marcu_min_length(1).min_n == 0);
    CHECK(marcu_min_length(2).min_n == 2);
    CHECK(marcu_min_length(6).min_n == 18);
    CHECK_THROWS_AS(marcu_min_length(0), PreconditionError);
  }

  TEST_CASE("inverse bound") {
    CHECK(psi_cycle_upper(9) == 4);
    CHECK(psi_cycle_upper(10) == 5);
    CHECK(psi_cycle_upper(17) == 5);
    CHECK(psi_cycle_upper(18) == 6);
    CHECK(psi_cycle_upper(3) == 3);
  }

  TEST_CASE("exact cycle values never violate the bound") {
    PsiOptions opts;
    opts.max_vertices = 12;
    for (int n = 3; n <= 12; ++n) {
      int value = psi(make_cycle(n), opts).value;
      CHECK(marcu_min_length(value).min_n <= n);
      CHECK(value <= psi_cycle_upper(n));
    }
  }
}
