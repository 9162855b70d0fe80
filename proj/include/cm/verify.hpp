#pragma once

// Verification suites driven by the CLI, and closed formulas used as fixed oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "cm/hopf.hpp"
#include "cm/random.hpp"

namespace cm::verify {

using hopf::HopfPoly;
using hopf::TensorPoly;

// ---- closed formulas, summation indices expanded over 1..dim (raw, not canonicalized)

/// Δ(δ^k_{ji,l}) = δ ⊗ 1 + 1 ⊗ δ + δ^a_{jl} ⊗ δ^k_{ai} + δ^a_{il} ⊗ δ^k_{ja} − δ^k_{al} ⊗ δ^a_{ji}
TensorPoly formula_d2(int k, int j, int i, int l, int dim);
/// S(δ^k_{ji,l}) = −δ + δ^a_{jl} δ^k_{ai} + δ^a_{il} δ^k_{ja} − δ^k_{al} δ^a_{ji}
HopfPoly formula_sd2(int k, int j, int i, int l, int dim);
/// The nine-term ordered double cut of the fork (l cut first, then m).
TensorPoly formula_cut2(int k, int j, int i, int l, int m, int dim);

struct Block {
  std::string name;
  HopfPoly value;
};
/// S(δ^k_{ji,lm}) block by block: −δ, chain cut above m, chain cut above l, chain double cut,
/// fork cut above l, fork cut above m, fork double cut.
std::vector<Block> formula_s_table(int k, int j, int i, int l, int m, int dim);

// ---- helpers shared by suites and tests

std::vector<hopf::Generator> generators(int dim, int max_tail);
hopf::Generator random_generator(random::Rng& rng, int dim, int max_tail);
/// Sorted product of 1..max_degree random generators.
hopf::Monomial random_pbw_monomial(random::Rng& rng, int dim, int max_degree, int max_tail);
std::vector<hopf::Generator> random_word(random::Rng& rng, int dim, int length, int max_tail);

// ---- suites

struct Config {
  int dim = 2;
  int max_tail = 3;
  int max_degree = 3;
  std::uint64_t seed = 42;
};

struct Item {
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

struct Report {
  std::string suite;
  Config config;
  std::vector<Item> items;
  double seconds = 0;
  bool passed() const;
};

/// suite: hopf | trees | oracle | geometry | all. Throws std::invalid_argument otherwise.
Report run(const std::string& suite, const Config& config);
std::vector<std::string> suite_names();

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace cm::verify
