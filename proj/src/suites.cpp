#include "foldkit/suites.hpp"

#include <chrono>
#include <random>

#include "foldkit/coloring.hpp"
#include "foldkit/errors.hpp"
#include "foldkit/families.hpp"
#include "foldkit/fold.hpp"
#include "foldkit/graph_io.hpp"
#include "foldkit/threshold.hpp"

namespace foldkit {

namespace {

int defaulted(int max_n, int fallback) { return max_n < 0 ? fallback : max_n; }

void check_cap(const std::string& suite, int max_n, int cap) {
  if (max_n < 1 || max_n > cap) {
    throw PreconditionError("suite " + suite + ": max-n " + std::to_string(max_n) +
                            " outside 1.." + std::to_string(cap));
  }
}

void fail(VerificationReport& report, const Graph& g, std::string expected, std::string got) {
  report.failures.push_back({emit_graph6(g), std::move(expected), std::move(got)});
}

// The folding number of a possibly disconnected graph: folds act inside
// components, so the largest reachable clique is the best over components.
int sigma_over_components(const Graph& g, const SigmaOptions& opts) {
  int best = 0;
  for (std::uint64_t comp : components(g)) {
    best = std::max(best, sigma(g.induced(comp), opts).sigma);
  }
  return best;
}

// For every connected graph up to max_n and every k in [chi, sigma], a fold
// onto K_k exists, is produced, and verifies.
VerificationReport suite_interpolation(int max_n) {
  VerificationReport report{"interpolation", 0, {}, 0.0};
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      int chi_g = chi(g).value;
      int sigma_g = sigma(g).sigma;
      for (int k = chi_g; k <= sigma_g; ++k) {
        ++report.instances;
        FoldTrace trace;
        try {
          trace = fold_to_k(g, k);
        } catch (const Error& e) {
          fail(report, g, "fold onto K_" + std::to_string(k), e.what());
          continue;
        }
        TraceCheck check = verify_trace(trace);
        if (!check.ok) {
          fail(report, g, "verifiable trace to K_" + std::to_string(k), check.message);
        } else if (!is_clique(trace.target) || trace.target.vertex_count() != k) {
          fail(report, g, "target K_" + std::to_string(k),
               "target " + emit_graph6(trace.target));
        }
      }
    }
  }
  return report;
}

// sigma(add_universal(g)) = 1 + psi(g) = psi(add_universal(g)), with sigma
// from the pure fold search so the three sides stay independent.
VerificationReport suite_reduction_lemma(int max_n) {
  VerificationReport report{"reduction-lemma", 0, {}, 0.0};
  SigmaOptions search_only;
  search_only.use_universal_reduction = false;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      ++report.instances;
      Graph gu = add_universal(g);
      int from_fold = sigma(gu, search_only).sigma;
      int from_parts = 1 + psi(g).value;
      int from_whole = psi(gu).value;
      if (from_fold != from_parts || from_parts != from_whole) {
        fail(report, g,
             "sigma(g+u) = 1+psi(g) = psi(g+u)",
             "sigma(g+u)=" + std::to_string(from_fold) + ", 1+psi(g)=" +
                 std::to_string(from_parts) + ", psi(g+u)=" + std::to_string(from_whole));
      }
    }
  }
  return report;
}

// chi = sigma = psi = psi_threshold over every creation sequence of the
// given length, and peeling returns exactly the sequence that was realized.
VerificationReport suite_threshold(int length) {
  VerificationReport report{"threshold", 0, {}, 0.0};
  SigmaOptions search_only;
  search_only.use_universal_reduction = false;
  int variants = 1 << (length - 1);  // first entry fixed to AddIsolated
  for (int bits = 0; bits < variants; ++bits) {
    ++report.instances;
    CreationSequence seq{CreationOp::AddIsolated};
    for (int i = 0; i + 1 < length; ++i) {
      seq.push_back(bits >> i & 1 ? CreationOp::AddUniversal : CreationOp::AddIsolated);
    }
    Graph g = realize(seq);
    ThresholdCheck check = is_threshold(g);
    if (!check.is_threshold()) {
      fail(report, g, "threshold recognition of " + format_creation_sequence(seq),
           "refused with induced " + forbidden_name(check.witness->kind));
      continue;
    }
    if (*check.sequence != seq) {
      fail(report, g, "sequence " + format_creation_sequence(seq),
           "sequence " + format_creation_sequence(*check.sequence));
      continue;
    }
    int expected = psi_threshold(seq);
    int chi_g = chi(g).value;
    int psi_g = psi(g).value;
    int sigma_g = sigma_over_components(g, search_only);
    if (chi_g != expected || psi_g != expected || sigma_g != expected) {
      fail(report, g, "chi = sigma = psi = " + std::to_string(expected),
           "chi=" + std::to_string(chi_g) + ", sigma=" + std::to_string(sigma_g) +
               ", psi=" + std::to_string(psi_g));
    }
  }
  return report;
}

// The exact achromatic number of every cycle respects the minimum-length
// bound for its value.
VerificationReport suite_marcu(int max_n) {
  VerificationReport report{"marcu", 0, {}, 0.0};
  PsiOptions opts;
  opts.max_vertices = std::max(opts.max_vertices, max_n);
  for (int n = 3; n <= max_n; ++n) {
    ++report.instances;
    Graph g = make_cycle(n);
    int value = psi(g, opts).value;
    MarcuBound bound = marcu_min_length(value);
    if (bound.min_n > n) {
      fail(report, g, "min length " + std::to_string(bound.min_n) + " <= " + std::to_string(n),
           "psi(C" + std::to_string(n) + ")=" + std::to_string(value));
    }
    if (psi_cycle_upper(n) < value) {
      fail(report, g, "cycle upper bound >= " + std::to_string(value),
           "upper=" + std::to_string(psi_cycle_upper(n)));
    }
  }
  return report;
}

// psi(join(g1,g2)) = psi(g1) + psi(g2) on seeded random pairs.
VerificationReport suite_join(int max_total, unsigned seed, int pair_count) {
  VerificationReport report{"join", 0, {}, 0.0};
  std::mt19937 rng(seed);
  auto random_graph = [&rng](int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() & 1) g.add_edge(u, v);
      }
    }
    return g;
  };
  for (int i = 0; i < pair_count; ++i) {
    ++report.instances;
    int n1 = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_total - 1));
    int n2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_total - n1));
    Graph g1 = random_graph(n1);
    Graph g2 = random_graph(n2);
    Graph joined = join(g1, g2);
    int whole = psi(joined).value;
    int parts = psi(g1).value + psi(g2).value;
    if (whole != parts) {
      fail(report, joined, "psi(join)=" + std::to_string(parts),
           "psi(join)=" + std::to_string(whole));
    }
  }
  return report;
}

// Every connected graph folds onto a clique with exactly chi vertices and
// the trace's preimage classes properly color the source.
VerificationReport suite_fold_chi(int max_n) {
  VerificationReport report{"fold-chi", 0, {}, 0.0};
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      ++report.instances;
      int chi_g = chi(g).value;
      FoldTrace trace = fold_to_chi(g);
      TraceCheck check = verify_trace(trace);
      if (!check.ok) {
        fail(report, g, "verifiable trace", check.message);
        continue;
      }
      if (!is_clique(trace.target) || trace.target.vertex_count() != chi_g) {
        fail(report, g, "target K_" + std::to_string(chi_g),
             "target " + emit_graph6(trace.target));
        continue;
      }
      Coloring classes = coloring_from_trace(trace);
      if (!is_proper(g, classes)) {
        fail(report, g, "proper " + std::to_string(chi_g) + "-coloring from trace classes",
             "improper coloring");
      }
    }
  }
  return report;
}

// chi(g) <= chi(fold(g)) <= chi(g) + 1 for every fold candidate of every
// graph, connected or not.
VerificationReport suite_chi_step(int max_n) {
  VerificationReport report{"chi-step", 0, {}, 0.0};
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      int before = chi(g).value;
      for (FoldStep step : fold_candidates(g)) {
        ++report.instances;
        int after = chi(simple_fold(g, step.x, step.y)).value;
        if (after < before || after > before + 1) {
          fail(report, g,
               "chi in [" + std::to_string(before) + ", " + std::to_string(before + 1) +
                   "] after folding (" + std::to_string(step.x) + "," + std::to_string(step.y) +
                   ")",
               "chi=" + std::to_string(after));
        }
      }
    }
  }
  return report;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"interpolation", "reduction-lemma", "threshold", "marcu",
          "join",          "fold-chi",        "chi-step"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (name == "interpolation") {
    int max_n = defaulted(opts.max_n, 6);
    check_cap(name, max_n, 7);
    report = suite_interpolation(max_n);
  } else if (name == "reduction-lemma") {
    int max_n = defaulted(opts.max_n, 5);
    check_cap(name, max_n, 7);
    report = suite_reduction_lemma(max_n);
  } else if (name == "threshold") {
    int length = defaulted(opts.max_n, 9);
    check_cap(name, length, 9);
    report = suite_threshold(length);
  } else if (name == "marcu") {
    int max_n = defaulted(opts.max_n, 12);
    if (max_n < 3) throw PreconditionError("suite marcu: max-n below the smallest cycle");
    check_cap(name, max_n, 12);
    report = suite_marcu(max_n);
  } else if (name == "join") {
    int max_total = defaulted(opts.max_n, 9);
    if (max_total < 2) throw PreconditionError("suite join: max-n below 2");
    check_cap(name, max_total, 10);
    report = suite_join(max_total, opts.seed, opts.pair_count);
  } else if (name == "fold-chi") {
    int max_n = defaulted(opts.max_n, 6);
    check_cap(name, max_n, 7);
    report = suite_fold_chi(max_n);
  } else if (name == "chi-step") {
    int max_n = defaulted(opts.max_n, 6);
    check_cap(name, max_n, 7);
    report = suite_chi_step(max_n);
  } else {
    throw PreconditionError("unknown suite \"" + name + "\"");
  }
  auto end = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

}  // namespace foldkit
