#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwps3/numeric.hpp"
#include "gwps3/weighted_space.hpp"

namespace gwps3 {

/// A minimal algebra generator of the n-th Veronese subring: a source
/// monomial whose weighted degree is n * target_weight.
struct VeroneseGenerator {
  ExpVec monomial;
  std::int64_t target_weight = 0;
  std::string name;  // u0, u1, ..., v, s, t, r per ascending weight group
};

/// Binomial relation among generators: lhs and rhs are disjoint nonnegative
/// exponent vectors over the generators with the same induced source
/// monomial; degree is taken in the target grading.
struct GeneratorRelation {
  ExpVec lhs, rhs;
  std::int64_t degree = 0;
};

struct VeroneseEmbedding {
  WeightedSpace source;
  std::int64_t n = 1;
  std::vector<VeroneseGenerator> generators;
  std::vector<GeneratorRelation> relations;
  bool relations_certified_minimal = false;  // certified for rank-1 kernels
  bool closure_certified = false;
};

/// Minimal monomial generators of the degree-multiples-of-n subalgebra,
/// ordered by (target weight, then source exponents descending lex) so the
/// names match the conventional coordinates. Search runs degree by degree
/// up to n*lcm(W) and is certified complete by a closure scan; throws
/// IncompleteSearchError if the scan finds an unreachable monomial.
std::vector<VeroneseGenerator> veronese_generators(const WeightedSpace& w,
                                                   std::int64_t n);

/// Generating set of the integer relation lattice of the generator
/// exponent vectors (kernel basis turned into binomials). Certified
/// minimal exactly when the kernel has rank <= 1.
std::vector<GeneratorRelation> toric_relations(
    const std::vector<VeroneseGenerator>& gens, const WeightedSpace& source);

VeroneseEmbedding veronese_embedding(const WeightedSpace& w, std::int64_t n);

struct HypersurfaceModel {
  WeightedSpace target{{1}};
  std::vector<VeroneseGenerator> generators;
  GeneratorRelation relation;
  std::int64_t relation_degree = 0;

  /// "u0 s = u1^5"
  std::string relation_text() const;
  /// "quintic", "10-ic", ...
  std::string degree_label() const;
};

/// Requires exactly dim(W)+2 generators (hypersurface codimension 1);
/// otherwise throws NotHypersurfaceError carrying the generator weights.
HypersurfaceModel embed_as_hypersurface(const WeightedSpace& w, std::int64_t n);

/// Closure certificate kernels: true iff every monomial of degree n*d for
/// d in [d_lo, d_hi] is divisible by some generator. On failure the first
/// unreachable monomial (smallest degree, then lex) is reported.
bool closure_scan_serial(const WeightedSpace& w, std::int64_t n,
                         const std::vector<VeroneseGenerator>& gens,
                         std::int64_t d_lo, std::int64_t d_hi,
                         ExpVec* counterexample);
bool closure_scan(const WeightedSpace& w, std::int64_t n,
                  const std::vector<VeroneseGenerator>& gens, std::int64_t d_lo,
                  std::int64_t d_hi, ExpVec* counterexample);

std::string monomial_text(const ExpVec& e, const std::vector<std::string>& names);
std::string degree_label(std::int64_t d);

}  // namespace gwps3
