#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "nfc/bounds.hpp"

using namespace nfc;

TEST_CASE("exact ratio comparison") {
  CHECK(ratio_less(1, 4, 1, 2));      // 1/2 < 1
  CHECK(!ratio_less(1, 2, 1, 4));
  CHECK(!ratio_less(1, 2, 1, 2));     // equal
  CHECK(ratio_less(2, 8, 1, 2));      // 2/3 < 1
  CHECK(!ratio_less(2, 4, 1, 2));     // both exactly 1
  CHECK(ratio_less(2, 6, 2, 4));      // 2/log2(6) < 1
  CHECK(!ratio_less(3, 1, 2, 2));     // n=1 is +inf
  CHECK(ratio_less(2, 2, 3, 1));
  // overflow fallback: enormous exponents still order correctly
  CHECK(ratio_less(20, 65536, 20, 65535));
}

TEST_CASE("Example 1 bounds on fig1 with the arithmetic sum") {
  Network net = load_network(fixture("fig1.json"));
  TargetFunction f = make_builtin("arith_sum", 3, 2);

  BoundReport fp = bound_footprint(net, f);
  CHECK(fp.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fp.argmin == std::vector<std::string>{"e5", "e6"});

  BoundReport hu = bound_huang(net, f);
  CHECK(hu.value == doctest::Approx(1.0).epsilon(1e-12));

  BoundReport im = bound_improved(net, f);
  double expect = 2.0 / (1.0 + std::log2(3.0));
  CHECK(std::abs(im.value - expect) < 1e-9);
  CHECK(im.argmin == std::vector<std::string>{"e5", "e6"});
  REQUIRE(im.best_row >= 0);
  CHECK(im.rows[im.best_row].denom == 6);
  CHECK(im.rows[im.best_row].partition ==
        std::vector<std::vector<std::string>>{{"e5"}, {"e6"}});
}

TEST_CASE("Example 3 bounds on the linear function") {
  Network net = load_network(fixture("fig1.json"));
  TargetFunction f = parse_function(fixture("that_linear.json"));
  CHECK(bound_huang(net, f).value == doctest::Approx(1.0).epsilon(1e-12));
  BoundReport im = bound_improved(net, f);
  CHECK(std::abs(im.value - 2.0 / 3.0) < 1e-9);
  REQUIRE(im.best_row >= 0);
  CHECK(im.rows[im.best_row].denom == 8);
}

TEST_CASE("reverse butterfly improved bound is exactly 2") {
  Network net = load_network(fixture("rev_butterfly.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  BoundReport im = bound_improved(net, f);
  CHECK(im.value == 2.0);
  // several cuts tie at ratio 2; the canonical first one wins
  CHECK(im.argmin == std::vector<std::string>{"e1", "e2"});
  for (const auto& row : im.rows)
    if (row.cut == std::vector<std::string>{"e8", "e9"}) CHECK(row.ratio == 2.0);
  BoundReport fp = bound_footprint(net, f);
  CHECK(fp.value == 2.0);
  CHECK(fp.argmin == std::vector<std::string>{"e8", "e9"});
}

TEST_CASE("constant target function gives an infinite footprint") {
  Network net = load_network(fixture("fig1.json"));
  TargetFunction konst{3, 2, 1, std::vector<int>(8, 0)};
  BoundReport fp = bound_footprint(net, konst);
  CHECK(std::isinf(fp.value));
  CHECK(fp.argmin.empty());
}

TEST_CASE("full report is ordered improved <= huang <= footprint") {
  Network net = load_network(fixture("fig1.json"));
  for (const char* kind : {"arith_sum", "max", "mod_sum", "min"}) {
    FullReport rep = full_report(net, make_builtin(kind, 3, 2));
    CHECK(rep.ordered);
    CHECK(rep.improved.value <= rep.huang.value + 1e-12);
    CHECK(rep.huang.value <= rep.footprint.value + 1e-12);
  }
}

TEST_CASE("bound values are invariant under edge relabeling") {
  Network net = load_network(fixture("fig1.json"));
  TargetFunction f = make_builtin("arith_sum", 3, 2);
  double base = bound_improved(net, f).value;
  // permute the edge list and rename edges
  std::string other = fixture("fig1.json");
  Network net2 = load_network(
      R"({"alphabet_size":2,"nodes":["s1","s2","s3","v1","v2","rho"],
          "sources":["s1","s2","s3"],"sink":"rho",
          "edges":[{"id":"z6","tail":"v2","head":"rho"},{"id":"z5","tail":"v1","head":"rho"},
                   {"id":"z4","tail":"s3","head":"v2"},{"id":"z3","tail":"s2","head":"v2"},
                   {"id":"z2","tail":"s2","head":"v1"},{"id":"z1","tail":"s1","head":"v1"}]})");
  CHECK(bound_improved(net2, f).value == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("per-cut rows respect n >= w and n <= q^|I|") {
  Network net = load_network(fixture("n1.json"));
  TargetFunction f = make_builtin("max", 2, 2);
  BoundReport im = bound_improved(net, f);
  BoundReport hu = bound_huang(net, f);
  REQUIRE(im.rows.size() == hu.rows.size());
  for (std::size_t i = 0; i < im.rows.size(); i++) {
    CHECK(im.rows[i].denom >= hu.rows[i].denom);
    CutContext ctx = make_cut_context(net, edge_set_from_ids(net, im.rows[i].cut));
    CHECK(im.rows[i].denom <= pow_u64(net.q, popcount(ctx.I)));
  }
}
