#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "pdom/conjecture.hpp"
#include "pdom/domination.hpp"
#include "pdom/generators.hpp"
#include "pdom/io.hpp"

using namespace pdom;

TEST_CASE("enumerator examples") {
  const auto three = enumerate_connected_graphs(3);
  CHECK(three.size() == 4);
  CHECK(enumerate_connected_graphs(4).size() == 10);
  const auto one = enumerate_connected_graphs(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == Graph(1, {}));
  CHECK_THROWS_AS(enumerate_connected_graphs(8), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), std::invalid_argument);
}

TEST_CASE("enumerator counts match the edge-mask recount") {
  const auto connected = enumerate_graphs(6, false);
  const auto all = enumerate_graphs(6, true);
  for (int n = 1; n <= 6; ++n) {
    const auto count = [n](const std::vector<Graph>& gs) {
      return std::count_if(gs.begin(), gs.end(), [n](const Graph& g) { return g.order() == n; });
    };
    CHECK(count(connected) == oracle::count_graphs_by_masks(n, true));
    CHECK(count(all) == oracle::count_graphs_by_masks(n, false));
  }
  const int expected_connected[] = {1, 1, 2, 6, 21, 112};
  const int expected_all[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    CHECK(std::count_if(connected.begin(), connected.end(),
                        [n](const Graph& g) { return g.order() == n; }) == expected_connected[n - 1]);
    CHECK(std::count_if(all.begin(), all.end(),
                        [n](const Graph& g) { return g.order() == n; }) == expected_all[n - 1]);
  }
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and connected") {
  std::set<std::pair<int, std::uint64_t>> codes;
  for (const Graph& g : enumerate_graphs(6, false)) {
    CHECK(g.connected());
    CHECK(canonical_form(g) == g);
    codes.emplace(g.order(), oracle::brute_canonical_code(oracle::matrix(g)));
  }
  CHECK(codes.size() == 1 + 1 + 2 + 6 + 21 + 112);
}

TEST_CASE("enumerator output is sorted by graph6") {
  const auto gs = enumerate_graphs(5, true);
  for (std::size_t i = 1; i < gs.size(); ++i) CHECK(write_graph6(gs[i - 1]) < write_graph6(gs[i]));
}

TEST_CASE("order 7 counts") {
  const auto gs = enumerate_connected_graphs(7);
  CHECK(std::count_if(gs.begin(), gs.end(), [](const Graph& g) { return g.order() == 7; }) == 853);
}

TEST_CASE("canonical form is invariant under relabeling") {
  const Graph g = figure2_graph();
  const Graph small = Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}});
  const std::vector<Vertex> perm = {5, 3, 1, 0, 2, 4};
  CHECK(canonical_form(small.relabeled(perm)) == canonical_form(small));
  CHECK(adjacency_code(canonical_form(small)) ==
        oracle::brute_canonical_code(oracle::matrix(small)));
  CHECK(canonical_form(g).order() == 9);
  CHECK_THROWS_AS(adjacency_code(path(12)), std::invalid_argument);
}

TEST_CASE("product inequality examples") {
  const auto a = check_product_inequality(path(2), path(4), Proportion(1, 2));
  CHECK(a.gp_g == 1);
  CHECK(a.gp_h == 1);
  CHECK(a.gp_product == 1);
  CHECK(a.holds);
  CHECK_FALSE(a.witness.has_value());

  const auto b = check_product_inequality(complete(3), complete(3), Proportion(1, 2));
  CHECK(b.holds);
  CHECK(b.gp_product == 1);

  const auto c = check_product_inequality(path(7), path(7), Proportion(1, 2));
  CHECK(c.gp_g == 2);
  CHECK(c.gp_h == 2);
  CHECK(c.gp_product == 5);
  CHECK(c.holds);

  CHECK_THROWS_AS(check_product_inequality(path(9), path(8), Proportion(1, 2)), CapacityError);
}

TEST_CASE("scans") {
  const auto four = scan_conjecture(4, Proportion(1, 2));
  CHECK(four.pairs == 55);
  CHECK(four.failures.empty());
  const auto two = scan_conjecture(2, Proportion(1, 1));
  CHECK(two.pairs == 3);
  CHECK(two.failures.empty());
  ScanOptions opts;
  opts.include_disconnected = true;
  opts.threads = 3;
  const auto dis = scan_conjecture(4, Proportion(1, 1), opts);
  CHECK(dis.pairs == 18 * 19 / 2);
  CHECK(dis.failures.empty());
  CHECK_THROWS_AS(scan_conjecture(9, Proportion(1, 2)), CapacityError);
}

TEST_CASE("scan over an explicit family is thread-count independent") {
  std::vector<Graph> family = {path(3), complete(3), cycle(4), star(3), path(2)};
  const auto one = scan_family(family, Proportion(2, 3), 1);
  const auto many = scan_family(family, Proportion(2, 3), 4);
  CHECK(one.pairs == 15);
  CHECK(one.pairs == many.pairs);
  CHECK(one.failures.size() == many.failures.size());
  CHECK_THROWS_AS(scan_family({Graph()}, Proportion(1, 2)), std::invalid_argument);
}

TEST_CASE("reports are internally consistent") {
  const auto gs = enumerate_connected_graphs(4);
  for (const Graph& g : gs)
    for (const Graph& h : gs)
      for (int k = 1; k <= 4; ++k) {
        const auto r = check_product_inequality(g, h, Proportion(k, 4));
        CHECK(r.holds == (r.gp_product >= r.gp_g * r.gp_h));
        CHECK(r.witness.has_value() == !r.holds);
      }
}

TEST_CASE("half-proportion path bounds") {
  CHECK(check_prop_2_4(star(5)).holds);
  const auto p7 = check_prop_2_5_6_7(path(7), 6);
  CHECK(p7.applicable);
  CHECK(p7.gamma_g == 2);
  CHECK(p7.gamma_product == 5);
  CHECK(p7.gamma_path == 1);
  CHECK(p7.holds);
  const auto p13 = check_prop_2_5_6_7(path(13), 2);
  CHECK(p13.gamma_g == 3);
  CHECK(p13.gamma_product == 4);  // ceil(13 / 4) on the ladder
  CHECK(p13.gamma_path == 1);
  CHECK(p13.holds);
  CHECK_FALSE(check_prop_2_5_6_7(path(19), 2).applicable);
  CHECK_THROWS_AS(check_prop_2_5_6_7(path(13), 5), CapacityError);
  CHECK_THROWS_AS(check_prop_2_5_6_7(path(3), 0), std::invalid_argument);
}

TEST_CASE("half-proportion bounds over connected graphs of order <= 5") {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    CHECK(check_prop_2_4(g).holds);
    for (int m = 2; m <= 6; ++m) {
      const auto v = check_prop_2_5_6_7(g, m);
      CHECK(v.applicable);
      CHECK(v.holds);
    }
  }
}

TEST_CASE("gamma_1/2 = 2 below order 7 needs a disconnected graph") {
  bool disconnected_seen = false;
  for (const Graph& g : enumerate_graphs(6, true)) {
    if (gamma_p(g, Proportion(1, 2)).gamma_p != 2) continue;
    CHECK_FALSE(g.connected());
    disconnected_seen = true;
    for (int m = 2; m <= 6; ++m) CHECK(check_prop_2_5_6_7(g, m).holds);
  }
  CHECK(disconnected_seen);
  CHECK(gamma_p(Graph(4, {}), Proportion(1, 2)).gamma_p == 2);
}
