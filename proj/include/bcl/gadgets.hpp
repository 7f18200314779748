#pragma once
// Instance generators: reduction gadgets built from integer lists (used as
// adversarial fixtures) and seeded random instances.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// A chain of ell sensors at z + (2i-1)rho for i = 1..ell, each with the same
// battery; stationary at full radius it covers [z, z + 2*ell*rho].
struct Block {
  double z = 0.0;
  std::size_t count = 0;
  double battery = 0.0;
  double radius = 0.0;
};

std::vector<Sensor> gen_block(const Block& blk);

// Fixed-radii gadget from a list of positive integers: the instance has
// positive lifetime if and only if the list splits into two halves of equal
// sum.  All radii are multiples of quantum = 1/(2(B+1)) where B is the sum.
struct PartitionGadget {
  std::vector<std::int64_t> values;
  std::int64_t total = 0;
  double p = 0.0;        // anchor position of the number sensors
  double quantum = 0.0;  // radius granularity, for tolerance-aware tests
  ProblemInstance instance;
};

PartitionGadget partition_gadget(const std::vector<std::int64_t>& values,
                                 double p, double a, double alpha);

ProblemInstance gen_partition_bcfr(const std::vector<std::int64_t>& values,
                                   double p, double a, double alpha);

// Variable-radii gadget from 3m integers summing to m*Q with Q/4 <= a_i <=
// Q/2: number sensors at 0 plus m-1 stationary blocks; lifetime T is
// attainable exactly when the list splits into m triples of sum Q.
struct ThreePartitionGadget {
  std::vector<std::int64_t> values;
  std::size_t m = 0;
  std::int64_t q = 0;
  double delta = 0.0;   // segment unit 1/((2m-1)Q)
  double target = 0.0;  // the lifetime T separating yes from no
  double block_radius = 0.0;
  std::vector<Block> blocks;
  ProblemInstance instance;
};

ThreePartitionGadget gen_3partition_bcvr(const std::vector<std::int64_t>& values,
                                         std::size_t m, std::int64_t q,
                                         double a, double alpha);

enum class ProblemKind { fixed, variable };

struct RandomParams {
  double alpha = 1.0;
  double move_cost = 1.0;
  double battery_min = 0.1;
  double battery_max = 1.0;
  double rho_min = 0.05;  // fixed-radii instances only
  double rho_max = 0.35;
  bool endpoints_only = false;  // positions drawn from {0,1} instead of [0,1]
};

ProblemInstance random_instance(std::size_t n, ProblemKind kind,
                                std::uint64_t seed,
                                const RandomParams& params = {});

}  // namespace bcl
