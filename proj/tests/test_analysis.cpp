#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fhr/analysis/baselines.hpp"
#include "fhr/analysis/csv.hpp"
#include "fhr/analysis/error_report.hpp"
#include "fhr/analysis/grid.hpp"
#include "fhr/analysis/lebesgue.hpp"
#include "fhr/analysis/noise.hpp"
#include "fhr/analysis/reference.hpp"
#include "fhr/analysis/sweeps.hpp"
#include "fhr/error.hpp"
#include "test_support.hpp"

using namespace fhr;
using namespace fhr::analysis;
using fhr::testing::rel_err;

TEST_CASE("grid includes both endpoints") {
  const auto g = make_grid(GridSpec{11, 1, false}, -5.0, 5.0);
  REQUIRE(g.size() == 11);
  CHECK(g.front() == -5.0);
  CHECK(g.back() == 5.0);
  CHECK(g[5] == 0.0);
  CHECK(make_grid(GridSpec{11, 3, false}, 0.0, 1.0).size() == 31);
  CHECK_THROWS_AS(make_grid(GridSpec{1, 1, false}, 0.0, 1.0), Error);
  CHECK_THROWS_AS(make_grid(GridSpec{10, 1, false}, 1.0, 0.0), Error);
}

TEST_CASE("grid can step around interior nodes") {
  const auto nodes = make_equispaced_nodes(-5.0, 5.0, 10);
  const auto g = make_grid(GridSpec{11, 1, true}, -5.0, 5.0, &nodes);
  CHECK(g.front() == -5.0);
  CHECK(g.back() == 5.0);
  for (std::size_t k = 1; k + 1 < g.size(); ++k) CHECK_FALSE(snap_to_node(nodes, g[k]).has_value());
}

TEST_CASE("Lebesgue function is 1 at nodes and at least 1 elsewhere") {
  const auto nodes = make_equispaced_nodes(-1.0, 1.0, 16);
  for (auto params : {ExtParams{4, 0}, ExtParams{8, 4}}) {
    const RationalBasis basis(nodes, params);
    for (double x : nodes.xs()) CHECK(lebesgue_function(basis, x) == 1.0);
    for (int k = 0; k <= 1000; ++k) CHECK(lebesgue_function(basis, -1.0 + k * 2e-3) >= 1.0 - 1e-14);
  }
}

TEST_CASE("FH Lebesgue function is larger near the ends") {
  const auto nodes = make_equispaced_nodes(-1.0, 1.0, 16);
  const ExtParams p{4, 0};
  const double end = lebesgue_function(nodes, p, 0.5 * (nodes[0] + nodes[1]));
  const double mid = lebesgue_function(nodes, p, 0.0625);
  CHECK(end > mid);
}

TEST_CASE("two-node linear interpolation has Lebesgue constant 1") {
  const RationalBasis basis(make_equispaced_nodes(0.0, 1.0, 1), ExtParams{1, 0});
  CHECK(std::abs(lebesgue_constant(basis).lambda_max - 1.0) < 1e-14);
}

TEST_CASE("Lebesgue constant refinement") {
  const RationalBasis basis(make_equispaced_nodes(-5.0, 5.0, 64), ExtParams{12, 4});
  const auto coarse = lebesgue_constant(basis);
  CHECK(coarse.grid.points() == 10 * 64 * 13 + 1);
  GridSpec finer = coarse.grid;
  finer.refine = 2;
  const auto fine = lebesgue_constant(basis, finer);
  CHECK(fine.lambda_max >= coarse.lambda_max - 1e-12 * coarse.lambda_max);
  CHECK(rel_err(fine.lambda_max, coarse.lambda_max) < 1e-9);
  CHECK(coarse.lambda_max >= 1.0);
  CHECK(lebesgue_function(basis, coarse.argmax_x) == coarse.lambda_max);
  CHECK_THROWS_AS(lebesgue_constant(basis, GridSpec{100, 1, false}), Error);
}

TEST_CASE("extension lowers the Lebesgue constant at n = 64, d = 12") {
  const auto nodes = make_equispaced_nodes(-5.0, 5.0, 64);
  const double fh = lebesgue_constant(RationalBasis(nodes, ExtParams{12, 0})).lambda_max;
  const double ext = lebesgue_constant(RationalBasis(nodes, ExtParams{12, 4})).lambda_max;
  CHECK(ext < fh);
  // independent high-precision values: 1086.69 and 11.228
  CHECK(rel_err(fh, 1086.69) < 1e-4);
  CHECK(rel_err(ext, 11.228) < 1e-4);
}

TEST_CASE("error reports: Table 1 anchors and invariants") {
  const auto f = runge();
  auto report = [&](std::size_t n, std::size_t d, std::size_t e) {
    const auto nodes = make_equispaced_nodes(-5.0, 5.0, n);
    return error_report(Interpolant(nodes, sample(nodes, f.evaluate), ExtParams{d, e}), f);
  };
  const auto r10 = report(10, 0, 0);
  CHECK(rel_err(r10.linf, 3.606e-2) < 5e-3);
  CHECK(rel_err(r10.l1, 1.601e-1) < 5e-3);
  CHECK(r10.n == 10);
  CHECK(r10.d == std::size_t{0});
  const auto r80 = report(80, 14, 4);
  CHECK(rel_err(r80.linf, 1.214e-11) < 5e-3);
  CHECK(rel_err(r80.l1, 4.684e-11) < 5e-3);
  for (const auto& r : {r10, r80}) {
    CHECK(r.linf >= 0.0);
    CHECK(r.l1 >= 0.0);
    CHECK(r.l1 <= (r.b - r.a) * r.linf);
  }
}

TEST_CASE("refining the error grid never lowers linf") {
  const auto f = runge();
  const auto nodes = make_equispaced_nodes(-5.0, 5.0, 30);
  const Interpolant r(nodes, sample(nodes, f.evaluate), ExtParams{6, 2});
  double previous = 0.0;
  for (std::size_t refine : {1, 2, 4, 8}) {
    const auto rep = error_report(r, f, GridSpec{2001, refine, false});
    CHECK(rep.linf >= previous - 1e-12);
    previous = rep.linf;
  }
}

TEST_CASE("polynomial data give near-zero error") {
  const auto p = PiecewisePolynomial::polynomial({0.5, -1.0, 0.25});
  const ReferenceFunction f{"quad", [p](double x) { return p(x); }, -2.0, 3.0};
  const auto nodes = make_equispaced_nodes(-2.0, 3.0, 20);
  const Interpolant r(nodes, sample(nodes, f.evaluate), ExtParams{6, 3});
  CHECK(error_report(r, f, GridSpec{10001, 1, false}).linf < 1e-9 * 3.0);
}

TEST_CASE("Chebyshev baseline") {
  const auto pts = chebyshev_points(-5.0, 5.0, 8);
  CHECK(pts.front() == -5.0);
  CHECK(pts.back() == 5.0);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  const auto line = chebyshev_baseline([](double x) { return 2.0 * x - 1.0; }, 1.0, 4.0, 1);
  for (double x : {1.0, 1.7, 3.99}) CHECK(rel_err(line(x), 2.0 * x - 1.0) < 1e-15);
  const auto c = chebyshev_baseline(runge_value, -5.0, 5.0, 30);
  for (std::size_t k = 0; k < c.nodes().size(); ++k) {
    CHECK(rel_err(c(c.nodes()[k]), runge_value(c.nodes()[k])) < 1e-12);
  }
  const auto cubic = chebyshev_baseline([](double x) { return x * x * x; }, -1.0, 2.0, 5);
  CHECK(rel_err(cubic(0.3), 0.027) < 1e-13);
}

TEST_CASE("not-a-knot spline") {
  const auto nodes = make_equispaced_nodes(-1.0, 2.0, 7);
  const auto cube = [](double x) { return x * x * x - x + 0.5; };
  const CubicSpline s(nodes, sample(nodes, cube));
  for (double x : {-0.93, -0.1, 0.33, 1.51, 1.999}) CHECK(std::abs(s(x) - cube(x)) < 1e-13);
  // second derivative of x^3 is 6x
  for (std::size_t j = 0; j <= 7; ++j) CHECK(std::abs(s.curvatures()[j] - 6.0 * nodes[j]) < 1e-12);

  std::mt19937_64 rng(71);
  const auto wobbly = fhr::testing::perturbed_nodes(rng, -5.0, 5.0, 20);
  const CubicSpline r(wobbly, sample(wobbly, runge_value));
  for (double x : wobbly.xs()) CHECK(rel_err(r(x), runge_value(x)) < 1e-12);

  CHECK_THROWS_AS(CubicSpline(make_equispaced_nodes(0.0, 1.0, 2), Samples({1.0, 2.0, 3.0})), Error);
}

TEST_CASE("Gaussian noise") {
  const std::vector<double> zeros(10, 0.0);
  const auto a = add_noise(zeros, NoiseSpec{1e-8, 42});
  const auto b = add_noise(zeros, NoiseSpec{1e-8, 42});
  CHECK(a == b);
  CHECK(a != add_noise(zeros, NoiseSpec{1e-8, 43}));
  const std::vector<double> ys{1.0, -2.0, 3.5};
  CHECK(add_noise(ys, NoiseSpec{0.0, 9}) == ys);
  CHECK_THROWS_AS(add_noise(ys, NoiseSpec{-1.0, 9}), Error);

  const auto many = add_noise(std::vector<double>(100000, 0.0), NoiseSpec{2.0, 1});
  const double mean = std::accumulate(many.begin(), many.end(), 0.0) / many.size();
  double var = 0.0;
  for (double v : many) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (many.size() - 1));
  CHECK(std::abs(sd / 2.0 - 1.0) < 0.02);
  CHECK(std::abs(mean) < 0.02);

  // mt19937_64's 10000th output is fixed by the standard
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);
}

TEST_CASE("scan_de covers the rectangle in d-major order") {
  SweepOptions opts;
  opts.error_grid = GridSpec{2001, 1, false};
  opts.threads = 2;
  const auto rows = scan_de(runge(), 6, 0, 8, 0, 3, opts);
  REQUIRE(rows.size() == 9 * 4);
  std::size_t k = 0;
  for (std::size_t d = 0; d <= 8; ++d) {
    for (std::size_t e = 0; e <= 3; ++e, ++k) {
      CHECK(rows[k].d == d);
      CHECK(rows[k].e == e);
      CHECK(rows[k].n == 6);
      CHECK(rows[k].method == (e == 0 ? "fh" : "ext"));
      CHECK(rows[k].is_sentinel() == (d > 6 || e > d));
      if (!rows[k].is_sentinel()) CHECK(*rows[k].lebesgue >= 1.0);
    }
  }
  SweepOptions serial = opts;
  serial.threads = 1;
  const auto again = scan_de(runge(), 6, 0, 8, 0, 3, serial);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].linf == again[i].linf);
}

TEST_CASE("converge_n emits sentinels for infeasible cells") {
  SweepOptions opts;
  opts.error_grid = GridSpec{2001, 1, false};
  const std::vector<MethodConfig> configs{MethodConfig::parse("fh:3"), MethodConfig::parse("ext:5,2"),
                                          MethodConfig::parse("cheb"), MethodConfig::parse("spline")};
  const auto rows = converge_n(runge(), configs, {2, 4, 8}, opts);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].method == "fh");
  CHECK(rows[0].is_sentinel());
  CHECK_FALSE(rows[1].is_sentinel());
  CHECK(rows[3].is_sentinel());   // ext:5,2 at n = 2
  CHECK(rows[4].is_sentinel());   // n = 4
  CHECK_FALSE(rows[5].is_sentinel());
  CHECK_FALSE(rows[6].is_sentinel());  // cheb at n = 2
  CHECK_FALSE(rows[6].lebesgue.has_value());
  CHECK(rows[9].is_sentinel());   // spline at n = 2
  CHECK_FALSE(rows[10].is_sentinel());
}

TEST_CASE("method configs") {
  CHECK(MethodConfig::parse("fh:3") == MethodConfig{MethodConfig::Kind::fh, 3, 0});
  CHECK(MethodConfig::parse("ext:14,4") == MethodConfig{MethodConfig::Kind::ext, 14, 4});
  CHECK(MethodConfig::parse("cheb").kind == MethodConfig::Kind::cheb);
  CHECK(MethodConfig::parse("spline").label() == "spline");
  for (const char* bad : {"fh", "fh:", "fh:-1", "ext:3", "ext:3,4", "poly", "ext:a,b"}) {
    CHECK_THROWS_AS(MethodConfig::parse(bad), Error);
  }
}

TEST_CASE("function registry") {
  FunctionRegistry reg;
  const auto r = reg.resolve("runge", -5.0, 5.0);
  CHECK(r(0.0) == 1.0);
  CHECK(r(2.0) == 0.2);
  const auto p = reg.resolve("poly:1,0,2", 0.0, 1.0);
  CHECK(p(3.0) == 19.0);
  reg.add("hat", PiecewisePolynomial({-1.0, 0.0, 1.0}, {{1.0, 1.0}, {1.0, -1.0}}));
  const auto hat = reg.resolve("hat", -1.0, 1.0);
  CHECK(hat(-0.5) == 0.5);
  CHECK(hat(0.25) == 0.75);
  CHECK_THROWS_AS(reg.resolve("sine", 0.0, 1.0), Error);
  CHECK_THROWS_AS(reg.resolve("poly:1,x", 0.0, 1.0), Error);
}

TEST_CASE("CSV layout") {
  std::vector<ResultRow> rows(2);
  rows[0].method = "ext";
  rows[0].n = 64;
  rows[0].d = 12;
  rows[0].e = 4;
  rows[0].linf = 0.1;
  rows[0].l1 = 1e-300;
  rows[0].lebesgue = 11.25;
  rows[0].seed = 7;
  rows[0].sigma = 1e-8;
  rows[1].method = "cheb";
  rows[1].n = 3;
  std::ostringstream out;
  write_csv(out, rows);
  CHECK(out.str() ==
        "method,n,d,e,linf,l1,lebesgue,seed,sigma\n"
        "ext,64,12,4,0.1,1e-300,11.25,7,1e-08\n"
        "cheb,3,NA,NA,NA,NA,NA,NA,0\n");
}
