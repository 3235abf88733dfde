#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hochkit/fixtures.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/modules.hpp"
#include "hochkit/report.hpp"

namespace hochkit {

using Rng = std::mt19937_64;

/// Integers in [-3, 3], keeping exact arithmetic cheap.
CycScalar random_small(Rng& rng);
SparseMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
SparseMatrix random_element(const HomBasis& h, Rng& rng);
Vector random_central(const AlgebraPtr& a, Rng& rng);
/// Direct sum of between 1 and max_summands simples of f.
ModuleRep random_sum_of_simples(const Fixture& f, std::size_t max_summands, Rng& rng);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t cardy_instances = 50;
  std::size_t trace_instances = 100;
  ComplexLimits limits;
};

void verify_hrr(const Fixture& f, Report& report);
/// Defining property on held-out central elements, additivity, and the
/// class-function closed form for group fixtures.
void verify_chern(const Fixture& f, Report& report, Rng& rng);
void verify_cardy(const Fixture& f, Report& report, std::size_t instances, Rng& rng);

/// Adjointness pairs, route agreement, the adjoint-transfer identity on a
/// held-out endomorphism, and ch commutation on a random module.
void verify_kernel(const Fixture& source, const Fixture& target, const Bimodule& k, Report& report, Rng& rng);
/// (k2 k1)_* against k2_* k1_*.
void verify_chain(const Fixture& a, const Fixture& b, const Bimodule& k1, const Bimodule& k2, Report& report);

struct KernelLibrary {
  /// zn:2, zn:3, s3
  std::vector<Fixture> fixtures;
  struct Entry {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    Bimodule kernel;
  };
  std::vector<Entry> kernels;
  /// Composable pairs (first, second) of kernel indices.
  std::vector<std::pair<std::size_t, std::size_t>> chains;
};
KernelLibrary standard_kernel_library();
void verify_kernel_library(Report& report, Rng& rng);

void verify_morita(const Fixture& f, std::size_t n, Report& report);
/// HH_* and HH^* of A and M_n(A) agree up to max_degree.
void verify_morita_hh(const Fixture& f, std::size_t n, std::size_t max_degree, Report& report,
                      const ComplexLimits& limits);
void verify_traces(Report& report, std::size_t instances, Rng& rng);
/// Sphere and torus asserted; genus 2 reported with the hom-count oracle.
void verify_tqft(const Fixture& f, Report& report, bool genus_two);
/// Degree 0 equals the class count and higher degrees vanish.
void verify_hh_semisimple(const Fixture& f, std::size_t max_degree, Report& report, const ComplexLimits& limits);

void verify_all(Report& report, const VerifyOptions& options);

}  // namespace hochkit
