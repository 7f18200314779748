#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bcl/decision.hpp"
#include "bcl/gadgets.hpp"
#include "bcl/model.hpp"
#include "bcl/numeric.hpp"
#include "bcl/reach.hpp"
#include "bcl/search.hpp"

using namespace bcl;

namespace {

std::vector<std::vector<std::size_t>> all_orders(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(idx);
  while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_CASE("a block lines its sensors up abutting from the anchor") {
  Block blk;
  blk.z = 0.0;
  blk.count = 2;
  blk.battery = 1.0;
  blk.radius = 0.1;
  const std::vector<Sensor> got = gen_block(blk);
  REQUIRE(got.size() == 2);
  CHECK(got[0].x == 0.1);
  CHECK(got[1].x == doctest::Approx(0.3).epsilon(1e-15));
  for (const Sensor& s : got) {
    CHECK(s.battery == 1.0);
    REQUIRE(s.rho.has_value());
    CHECK(*s.rho == 0.1);
  }

  Block single;
  single.z = 0.5;
  single.count = 1;
  single.battery = 1.0;
  single.radius = 0.25;
  const std::vector<Sensor> one = gen_block(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].x == 0.75);

  // Stationary at full radius a chain of ell sensors tiles [z, z+2*ell*rho];
  // five sensors of radius 0.1 anchored at 0 cover the whole barrier.
  Block wall;
  wall.z = 0.0;
  wall.count = 5;
  wall.battery = 0.02;
  wall.radius = 0.1;
  ProblemInstance inst;
  inst.alpha = 1.0;
  inst.move_cost = MoveCost::finite(1.0);
  inst.sensors = gen_block(wall);
  Solution stay;
  for (const Sensor& s : inst.sensors) {
    stay.y.push_back(s.x);
    stay.r.push_back(*s.rho);
  }
  stay.lifetime = 0.2;
  stay.achievable = true;
  const CoverageReport rep = verify_solution(inst, stay);
  CHECK(rep.feasible);
  CHECK(rep.max_gap <= cover_tol);
  CHECK(rep.battery_violation == 0.0);
  CHECK(rep.realized_lifetime == doctest::Approx(0.2));

  Block bad = blk;
  bad.count = 0;
  CHECK_THROWS_AS(gen_block(bad), std::invalid_argument);
  bad = blk;
  bad.radius = 0.0;
  CHECK_THROWS_AS(gen_block(bad), std::invalid_argument);
  bad = blk;
  bad.battery = 0.0;
  CHECK_THROWS_AS(gen_block(bad), std::invalid_argument);
}

TEST_CASE("the centered number gadget freezes its radii and batteries") {
  const PartitionGadget g = partition_gadget({1, 1}, 0.5, 1.0, 1.0);
  CHECK(g.total == 2);
  CHECK(g.p == 0.5);
  CHECK(g.quantum == 1.0 / 6.0);
  const ProblemInstance& inst = g.instance;
  REQUIRE(inst.size() == 3);
  CHECK(inst.alpha == 1.0);
  CHECK(inst.move_cost.value() == 1.0);
  for (const Sensor& s : inst.sensors) {
    CHECK(s.x == 0.5);
    REQUIRE(s.rho.has_value());
    CHECK(*s.rho == 1.0 / 6.0);
  }
  CHECK(inst.sensors[0].battery == 2.0 / 3.0);
  CHECK(inst.sensors[1].battery == 2.0 / 3.0);
  CHECK(inst.sensors[2].battery == 1.0 / 6.0);
  CHECK(inst.fixed_radii());
  CHECK_NOTHROW(inst.validate());

  // The diameters tile the barrier exactly, so nothing can idle.
  double width = 0.0;
  for (const Sensor& s : inst.sensors) width += 2.0 * *s.rho;
  CHECK(width == doctest::Approx(1.0).epsilon(1e-15));

  // The thin wrapper hands out the same instance.
  const ProblemInstance direct = gen_partition_bcfr({1, 1}, 0.5, 1.0, 1.0);
  REQUIRE(direct.size() == inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(direct.sensors[i].x == inst.sensors[i].x);
    CHECK(direct.sensors[i].battery == inst.sensors[i].battery);
    CHECK(*direct.sensors[i].rho == *inst.sensors[i].rho);
  }

  const PartitionGadget h = partition_gadget({1, 2}, 0.5, 2.0, 2.0);
  CHECK(h.total == 3);
  CHECK(h.quantum == 0.125);
  REQUIRE(h.instance.size() == 3);
  CHECK(*h.instance.sensors[0].rho == 0.125);
  CHECK(*h.instance.sensors[1].rho == 0.25);
  CHECK(*h.instance.sensors[2].rho == 0.125);
  CHECK(h.instance.sensors[0].battery == 1.03125);  // 2*(1/8)^2 + 1
  CHECK(h.instance.sensors[1].battery == 1.125);    // 2*(1/4)^2 + 1
  CHECK(h.instance.sensors[2].battery == 0.03125);  // 2*(1/8)^2, no slack
}

TEST_CASE("the off-center gadget adds stationary flank guards") {
  const PartitionGadget g = partition_gadget({1, 1}, 0.25, 1.0, 1.0);
  CHECK(g.p == 0.25);
  // Window width d = min(p, 1-2p) = 1/4 around the anchor.
  CHECK(g.quantum == 0.25 / 6.0);
  const ProblemInstance& inst = g.instance;
  REQUIRE(inst.size() == 5);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(inst.sensors[i].x == 0.25);
    CHECK(*inst.sensors[i].rho == g.quantum);
  }
  CHECK(inst.sensors[0].battery == 1.0 + g.quantum);
  CHECK(inst.sensors[1].battery == 1.0 + g.quantum);
  CHECK(inst.sensors[2].battery == g.quantum);  // the odd one out gets no slack
  CHECK(*inst.sensors[3].rho == 0.0625);
  CHECK(inst.sensors[3].x == 0.0625);
  CHECK(inst.sensors[3].battery == 1.0625);
  CHECK(*inst.sensors[4].rho == 0.3125);
  CHECK(inst.sensors[4].x == 0.6875);
  CHECK(inst.sensors[4].battery == 1.3125);
  double width = 0.0;
  for (const Sensor& s : inst.sensors) width += 2.0 * *s.rho;
  CHECK(width == doctest::Approx(1.0).epsilon(1e-15));

  // An anchor right of the midpoint mirrors the left-half construction.
  const PartitionGadget mir = partition_gadget({1, 1}, 0.75, 1.0, 1.0);
  CHECK(mir.p == 0.75);
  CHECK(mir.quantum == g.quantum);
  REQUIRE(mir.instance.size() == 5);
  for (std::size_t i = 0; i < 3; ++i) CHECK(mir.instance.sensors[i].x == 0.75);
  CHECK(mir.instance.sensors[3].x == 0.9375);
  CHECK(*mir.instance.sensors[3].rho == 0.0625);
  CHECK(mir.instance.sensors[4].x == 0.3125);
  CHECK(*mir.instance.sensors[4].rho == 0.3125);

  // (1,1) splits evenly, so the off-center instance still reaches the price.
  const Solution best = maximize_exhaustive(inst);
  CHECK(best.achievable);
  CHECK(best.lifetime >= 1.0 - 2e-6);
  CHECK(best.lifetime <= 1.0 + 1e-7);
}

TEST_CASE("input screening on the number gadget") {
  CHECK_THROWS_AS(partition_gadget({}, 0.5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 0}, 0.5, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, -2}, 0.5, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, 0.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, 1.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, -0.1, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, 0.5, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, 0.5, -1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_gadget({1, 1}, 0.5, 1.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      partition_gadget({1, 1}, 0.5, std::numeric_limits<double>::infinity(),
                       1.0),
      std::invalid_argument);
}

TEST_CASE("even splits support the gadget at the movement price") {
  const std::vector<std::vector<std::int64_t>> lists = {
      {1, 1}, {2, 2}, {1, 1, 2}, {1, 2, 3}, {1, 1, 1, 1}};
  for (const std::vector<std::int64_t>& values : lists) {
    INFO("list of " << values.size() << " numbers");
    const ProblemInstance inst = gen_partition_bcfr(values, 0.5, 1.0, 1.0);
    const Solution best = maximize_exhaustive(inst);
    CHECK(best.achievable);
    CHECK(best.lifetime >= 1.0 - 2e-6);
    CHECK(best.lifetime <= 1.0 + 1e-7);
    const CoverageReport rep = verify_solution(inst, best);
    CHECK(rep.feasible);
    CHECK(rep.realized_lifetime >= best.lifetime - 1e-6);

    // Some order certifies the movement price t = a itself.
    bool certified = false;
    for (const std::vector<std::size_t>& ord : all_orders(inst.size()))
      if (decide_fixed(inst, ord, 1.0).achievable) {
        certified = true;
        break;
      }
    CHECK(certified);
  }
}

TEST_CASE("odd totals never split and the gadget stays infeasible") {
  using V = std::vector<std::int64_t>;
  for (const V& values : {V{1, 2}, V{1, 1, 1}}) {
    INFO("list of " << values.size() << " numbers");
    const ProblemInstance inst = gen_partition_bcfr(values, 0.5, 1.0, 1.0);
    for (const std::vector<std::size_t>& ord : all_orders(inst.size())) {
      for (double t : {1.0, 0.5, 1e-6}) {
        const DecisionOutcome out = decide_fixed(inst, ord, t);
        CHECK_FALSE(out.achievable);
        CHECK_FALSE(out.witness.has_value());
      }
    }
  }
}

TEST_CASE("gadget structure holds across anchors, costs and exponents") {
  const std::vector<std::int64_t> values = {1, 2, 3, 2};
  for (double p : {0.5, 0.3, 0.25}) {
    for (double a : {1.0, 2.5}) {
      for (double alpha : {1.0, 2.0}) {
        INFO("p=" << p << " a=" << a << " alpha=" << alpha);
        const PartitionGadget g = partition_gadget(values, p, a, alpha);
        CHECK(g.total == 8);
        const double d = p == 0.5 ? 1.0 : std::min(p, 1.0 - 2.0 * p);
        CHECK(g.quantum == doctest::Approx(d / 18.0).epsilon(1e-15));
        const std::size_t base = values.size() + 1;
        REQUIRE(g.instance.size() == (p == 0.5 ? base : base + 2));
        double width = 0.0;
        for (const Sensor& s : g.instance.sensors) {
          REQUIRE(s.rho.has_value());
          width += 2.0 * *s.rho;
        }
        CHECK(width == doctest::Approx(1.0).epsilon(1e-12));
        const double slack = p == 0.5 ? a / 2.0 : a;
        for (std::size_t i = 0; i < values.size(); ++i) {
          const Sensor& s = g.instance.sensors[i];
          CHECK(s.x == p);
          CHECK(*s.rho == static_cast<double>(values[i]) * g.quantum);
          CHECK(s.battery ==
                doctest::Approx(a * pow_alpha(*s.rho, alpha) + slack)
                    .epsilon(1e-12));
        }
        const Sensor& tail = g.instance.sensors[values.size()];
        CHECK(tail.x == p);
        CHECK(*tail.rho == g.quantum);
        CHECK(tail.battery ==
              doctest::Approx(a * pow_alpha(g.quantum, alpha)).epsilon(1e-12));
        CHECK_NOTHROW(g.instance.validate());
      }
    }
  }
}

TEST_CASE("the triple gadget freezes its scale") {
  const ThreePartitionGadget g =
      gen_3partition_bcvr({3, 3, 2, 3, 3, 2}, 2, 8, 1.0, 1.0);
  CHECK(g.m == 2);
  CHECK(g.q == 8);
  CHECK(g.delta == 1.0 / 24.0);
  CHECK(g.target == 768.0);
  CHECK(g.block_radius == doctest::Approx(1.0 / 4608.0).epsilon(1e-13));
  REQUIRE(g.blocks.size() == 1);
  const Block& blk = g.blocks[0];
  CHECK(blk.z == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(blk.count == 768);
  CHECK(blk.battery == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(blk.radius == g.block_radius);

  const ProblemInstance& inst = g.instance;
  REQUIRE(inst.size() == 6 + 768);
  CHECK(inst.alpha == 1.0);
  CHECK(inst.move_cost.value() == 1.0);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(inst.sensors[i].x == 0.0);
    CHECK_FALSE(inst.sensors[i].rho.has_value());
  }
  // Number batteries are T*(value*delta/2)^alpha plus the movement allowance.
  CHECK(inst.sensors[0].battery == doctest::Approx(49.0).epsilon(1e-12));
  CHECK(inst.sensors[2].battery == doctest::Approx(33.0).epsilon(1e-12));
  bool ascending = true;
  for (std::size_t i = 6; i < inst.size(); ++i) {
    if (inst.sensors[i].rho.has_value() ||
        inst.sensors[i].battery != blk.battery)
      ascending = false;
    if (i > 6 && inst.sensors[i].x <= inst.sensors[i - 1].x) ascending = false;
  }
  CHECK(ascending);
  CHECK(inst.sensors[6].x ==
        doctest::Approx(blk.z + g.block_radius).epsilon(1e-13));
  CHECK(inst.sensors.back().x ==
        doctest::Approx(2.0 / 3.0 - g.block_radius).epsilon(1e-10));
  CHECK_NOTHROW(inst.validate());

  const ThreePartitionGadget solo =
      gen_3partition_bcvr({2, 2, 3}, 1, 7, 1.0, 1.0);
  CHECK(solo.blocks.empty());
  CHECK(solo.delta == 1.0 / 7.0);
  CHECK(solo.target == 196.0);
  REQUIRE(solo.instance.size() == 3);
  for (const Sensor& s : solo.instance.sensors) CHECK(s.x == 0.0);
  CHECK(solo.instance.sensors[0].battery == doctest::Approx(29.0).epsilon(1e-12));
  CHECK(solo.instance.sensors[2].battery == doctest::Approx(43.0).epsilon(1e-12));
}

TEST_CASE("the triple gadget rejects malformed lists") {
  using V = std::vector<std::int64_t>;
  CHECK_THROWS_AS(gen_3partition_bcvr(V{}, 1, 7, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{2, 2, -3}, 1, 7, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{2, 2, 3}, 0, 7, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{3, 3, 2}, 2, 8, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{3, 3, 2, 3, 3, 2}, 2, 0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{3, 3, 3, 3, 3, 2}, 2, 8, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{5, 2, 1, 4, 2, 2}, 2, 8, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{2, 2, 3}, 1, 7, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_3partition_bcvr(V{2, 2, 3}, 1, 7, 1.0, 0.9),
                  std::invalid_argument);

  // The value band is closed: Q/4 and Q/2 themselves are admitted.
  const ThreePartitionGadget edge =
      gen_3partition_bcvr(V{4, 2, 2}, 1, 8, 1.0, 1.0);
  CHECK(edge.instance.size() == 3);
}

TEST_CASE("blocks pin to their anchors at the target lifetime") {
  const ThreePartitionGadget g =
      gen_3partition_bcvr({3, 3, 2, 3, 3, 2}, 2, 8, 1.0, 1.0);
  REQUIRE(g.blocks.size() == 1);
  const Block& blk = g.blocks[0];
  const double t = g.target;
  // With zero energy slack every block sensor can only hold its own slot, so
  // chaining attach points walks the block span and nothing strays further
  // than a full battery ride from the anchor window.
  const double lo = blk.z - blk.battery;
  const double hi =
      blk.z + 2.0 * static_cast<double>(blk.count) * blk.radius + blk.battery;
  double z = blk.z;
  for (std::size_t i = 6; i < g.instance.size(); ++i) {
    const Sensor& s = g.instance.sensors[i];
    const std::optional<AttachPoint> ap =
        attach_position(s, z, t, 1.0, 1.0, 0.0, 1.0);
    REQUIRE(ap.has_value());
    CHECK(std::abs(ap->p - s.x) <= 1e-9);
    CHECK(std::abs(ap->radius - blk.radius) <= 1e-9);
    CHECK(ap->p >= lo - 1e-9);
    CHECK(ap->p <= hi + 1e-9);
    z = ap->p + ap->radius;
  }
  CHECK(z == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("a matching triple split certifies the target") {
  const ThreePartitionGadget g =
      gen_3partition_bcvr({3, 3, 2, 3, 3, 2}, 2, 8, 1.0, 1.0);
  const std::size_t n = g.instance.size();
  Solution sol;
  sol.y.assign(n, 0.0);
  sol.r.assign(n, 0.0);
  // Triples (0,1,2) and (3,4,5) each sum to Q; lay them out abutting over the
  // first and last number segment while the block keeps the middle third.
  const double qd = 8.0 * g.delta;
  double cursor = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double rr = static_cast<double>(g.values[i]) * g.delta / 2.0;
    sol.r[i] = rr;
    sol.y[i] = cursor + rr;
    cursor += 2.0 * rr;
  }
  CHECK(cursor == doctest::Approx(qd).epsilon(1e-12));
  cursor = 2.0 * qd;
  for (std::size_t i = 3; i < 6; ++i) {
    const double rr = static_cast<double>(g.values[i]) * g.delta / 2.0;
    sol.r[i] = rr;
    sol.y[i] = cursor + rr;
    cursor += 2.0 * rr;
  }
  CHECK(cursor == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 6; i < n; ++i) {
    sol.y[i] = g.instance.sensors[i].x;
    sol.r[i] = g.block_radius;
  }
  sol.lifetime = g.target;
  sol.achievable = true;

  const CoverageReport rep = verify_solution(g.instance, sol);
  CHECK(rep.feasible);
  CHECK(rep.max_gap <= cover_tol);
  CHECK(rep.battery_violation <= 1e-12);
  CHECK(rep.realized_lifetime >= g.target * (1.0 - 1e-9));
  CHECK(rep.realized_lifetime <= g.target * (1.0 + 1e-9));

  // The sweep procedure agrees once that deployment's order is fixed, and a
  // lifetime well past the target is out of reach for the same order.
  const std::vector<std::size_t> ord = order_of(sol.y);
  CHECK(decide_variable(g.instance, ord, g.target * 0.999).achievable);
  CHECK_FALSE(decide_variable(g.instance, ord, g.target * 1.5).achievable);
}

TEST_CASE("seeded instance draws are reproducible and bounded") {
  const ProblemInstance one = random_instance(6, ProblemKind::fixed, 777);
  const ProblemInstance two = random_instance(6, ProblemKind::fixed, 777);
  REQUIRE(one.size() == 6);
  REQUIRE(two.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(one.sensors[i].x == two.sensors[i].x);
    CHECK(one.sensors[i].battery == two.sensors[i].battery);
    REQUIRE(one.sensors[i].rho.has_value());
    CHECK(*one.sensors[i].rho == *two.sensors[i].rho);
  }
  const ProblemInstance other = random_instance(6, ProblemKind::fixed, 778);
  bool same = true;
  for (std::size_t i = 0; i < 6; ++i)
    same = same && one.sensors[i].x == other.sensors[i].x;
  CHECK_FALSE(same);

  RandomParams params;
  params.alpha = 2.0;
  params.move_cost = 3.0;
  params.battery_min = 0.4;
  params.battery_max = 0.9;
  params.rho_min = 0.1;
  params.rho_max = 0.2;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ProblemInstance inst =
        random_instance(5, ProblemKind::fixed, seed, params);
    CHECK(inst.alpha == 2.0);
    CHECK(inst.move_cost.value() == 3.0);
    CHECK_NOTHROW(inst.validate());
    for (const Sensor& s : inst.sensors) {
      CHECK(s.x >= 0.0);
      CHECK(s.x <= 1.0);
      CHECK(s.battery >= 0.4);
      CHECK(s.battery <= 0.9);
      REQUIRE(s.rho.has_value());
      CHECK(*s.rho >= 0.1);
      CHECK(*s.rho <= 0.2);
    }
    const ProblemInstance var =
        random_instance(5, ProblemKind::variable, seed, params);
    CHECK_NOTHROW(var.validate());
    for (const Sensor& s : var.sensors) CHECK_FALSE(s.rho.has_value());
  }

  RandomParams ends;
  ends.endpoints_only = true;
  const ProblemInstance ep = random_instance(50, ProblemKind::variable, 42, ends);
  bool saw_left = false;
  bool saw_right = false;
  for (const Sensor& s : ep.sensors) {
    CHECK((s.x == 0.0 || s.x == 1.0));
    saw_left = saw_left || s.x == 0.0;
    saw_right = saw_right || s.x == 1.0;
  }
  CHECK(saw_left);
  CHECK(saw_right);

  // A degenerate range pins the draw.
  RandomParams point;
  point.battery_min = point.battery_max = 0.7;
  point.rho_min = point.rho_max = 0.2;
  const ProblemInstance pinned =
      random_instance(3, ProblemKind::fixed, 5, point);
  for (const Sensor& s : pinned.sensors) {
    CHECK(s.battery == 0.7);
    CHECK(*s.rho == 0.2);
  }
}

TEST_CASE("instance draws reject broken ranges") {
  CHECK_THROWS_AS(random_instance(0, ProblemKind::fixed, 1),
                  std::invalid_argument);
  RandomParams bad;
  bad.battery_min = 0.0;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::fixed, 1, bad),
                  std::invalid_argument);
  bad = RandomParams{};
  bad.battery_max = 0.05;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::variable, 1, bad),
                  std::invalid_argument);
  bad = RandomParams{};
  bad.rho_min = -0.1;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::fixed, 1, bad),
                  std::invalid_argument);
  // The radius range only matters when radii are drawn at all.
  CHECK_NOTHROW(random_instance(3, ProblemKind::variable, 1, bad));
  bad = RandomParams{};
  bad.rho_max = 0.01;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::fixed, 1, bad),
                  std::invalid_argument);
  bad = RandomParams{};
  bad.move_cost = 0.0;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::fixed, 1, bad),
                  std::invalid_argument);
  bad = RandomParams{};
  bad.alpha = 0.5;
  CHECK_THROWS_AS(random_instance(3, ProblemKind::fixed, 1, bad),
                  std::invalid_argument);
}
