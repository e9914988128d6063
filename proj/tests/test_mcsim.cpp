#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "netrisk/mcsim.hpp"
#include "netrisk/riskcore.hpp"
#include "testutil.hpp"

using namespace netrisk;
using Catch::Matchers::WithinAbs;

namespace {

struct Instance {
  ExposureNetwork net;
  TransitionTable table;
  std::vector<double> dp;
  std::vector<double> loss;
};

Instance random_instance(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Instance inst{testutil::random_net(n, 0.5, rng), {}, {}, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) inst.table.set(inst.net.countries[i], inst.net.countries[j], unit(rng));
    }
  }
  for (int i = 0; i < n; ++i) {
    inst.dp.push_back(unit(rng));
    inst.loss.push_back(10.0 * unit(rng));
  }
  return inst;
}

double analytic_nel(const Instance& inst) {
  Matrix dtm = default_transition_matrix(inst.table, inst.net);
  return network_expected_loss(network_default_probability(inst.dp, dtm), inst.loss);
}

}  // namespace

TEST_CASE("one-edge system converges to the analytic expected loss", "[mcsim]") {
  // p = (1, 0), q(AA->AB) = 0.5, edge AA->AB, losses (0, 1): NEL = 0.5
  TransitionTable table;
  table.set("AA", "AB", 0.5);
  auto net = testutil::net_from_edges(2, {{0, 1, 10.0}});
  CascadeConfig config{1000000, 7};
  CascadeEstimate est = simulate_expected_loss(net, table, std::vector<double>{1.0, 0.0},
                                               std::vector<double>{0.0, 1.0}, config);
  CHECK(est.trials == 1000000);
  CHECK(est.std_error > 0.0);
  CHECK_THAT(est.mean, WithinAbs(0.5, 3.0 * est.std_error));
}

TEST_CASE("no initial defaults means an exactly zero estimate", "[mcsim]") {
  auto net = testutil::net_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CascadeConfig config{5000, 3};
  CascadeEstimate est = simulate_expected_loss(net, TransitionTable{},
                                               std::vector<double>{0.0, 0.0, 0.0},
                                               std::vector<double>{5.0, 5.0, 5.0}, config);
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("a single node only transmits to itself", "[mcsim]") {
  // One country, no edges: the self-loop fires with q = 1, so the mean is
  // p * l = 0.5 * 2 = 1.0.
  auto net = testutil::net_from_edges(1, {});
  CascadeConfig config{1000000, 11};
  CascadeEstimate est = simulate_expected_loss(net, TransitionTable{}, std::vector<double>{0.5},
                                               std::vector<double>{2.0}, config);
  CHECK_THAT(est.mean, WithinAbs(1.0, 3.0 * est.std_error));
}

TEST_CASE("identical seed and config reproduce the estimate bit for bit", "[mcsim]") {
  std::mt19937_64 rng(101);
  auto inst = random_instance(4, rng);
  CascadeConfig config{20000, 99};
  auto a = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, config);
  auto b = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, config);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);

  CascadeConfig other{20000, 100};
  auto c = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, other);
  CHECK(a.mean != c.mean);
}

TEST_CASE("parallel trials reproduce the serial estimate bit for bit", "[mcsim]") {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 5; ++round) {
    auto inst = random_instance(2 + static_cast<int>(rng() % 4), rng);
    CascadeConfig config{50000, 7 + static_cast<std::uint64_t>(round)};
    auto parallel = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, config,
                                           Exec::parallel);
    auto serial = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, config,
                                         Exec::serial);
    CHECK(parallel.mean == serial.mean);
    CHECK(parallel.std_error == serial.std_error);
  }
}

TEST_CASE("the estimator stays within four standard errors of NEL", "[mcsim]") {
  std::mt19937_64 rng(107);
  for (int instance = 0; instance < 5; ++instance) {
    auto inst = random_instance(2 + static_cast<int>(rng() % 4), rng);
    const double nel = analytic_nel(inst);
    int hits = 0;
    for (int run = 0; run < 100; ++run) {
      CascadeConfig config{20000, rng()};
      auto est = simulate_expected_loss(inst.net, inst.table, inst.dp, inst.loss, config);
      if (std::abs(est.mean - nel) <= 4.0 * est.std_error) ++hits;
    }
    INFO("instance " << instance);
    CHECK(hits >= 99);
  }
}

TEST_CASE("raising a loss never lowers the analytic NEL and the estimate tracks it", "[mcsim]") {
  std::mt19937_64 rng(109);
  for (int round = 0; round < 10; ++round) {
    auto inst = random_instance(3, rng);
    const double before = analytic_nel(inst);
    Instance bumped = inst;
    bumped.loss[static_cast<std::size_t>(rng() % 3)] += 5.0;
    const double after = analytic_nel(bumped);
    CHECK(after >= before);

    CascadeConfig config{50000, 1234 + static_cast<std::uint64_t>(round)};
    auto est = simulate_expected_loss(bumped.net, bumped.table, bumped.dp, bumped.loss, config);
    CHECK_THAT(est.mean, WithinAbs(after, 4.0 * est.std_error));
  }
}

TEST_CASE("bad simulation inputs are rejected", "[mcsim]") {
  auto net = testutil::net_from_edges(2, {{0, 1, 1.0}});
  std::vector<double> dp = {0.5, 0.5};
  std::vector<double> loss = {1.0, 1.0};

  CHECK_THROWS_AS(simulate_expected_loss(net, TransitionTable{}, std::vector<double>{0.5}, loss,
                                         CascadeConfig{}),
                  Error);
  CHECK_THROWS_AS(simulate_expected_loss(net, TransitionTable{}, std::vector<double>{0.5, 1.5},
                                         loss, CascadeConfig{}),
                  Error);
  CHECK_THROWS_AS(simulate_expected_loss(net, TransitionTable{}, dp, loss, CascadeConfig{0, 1}),
                  Error);
}
