#include "gwps3/veronese.hpp"

#include <algorithm>
#include <sstream>

#include "gwps3/errors.hpp"
#include "gwps3/grading.hpp"
#include "gwps3/lattice.hpp"

namespace gwps3 {

namespace {

bool divides(const ExpVec& g, const ExpVec& e) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > e[i]) return false;
  return true;
}

std::vector<std::string> assign_names(const std::vector<std::int64_t>& weights) {
  static const char* letters[] = {"u", "v", "s", "t", "r"};
  std::vector<std::string> names(weights.size());
  std::vector<std::int64_t> distinct;
  for (auto w : weights)
    if (distinct.empty() || distinct.back() != w) distinct.push_back(w);
  for (std::size_t g = 0; g < distinct.size(); ++g) {
    const std::string base =
        g < 5 ? letters[g] : ("m" + std::to_string(g - 4));
    std::size_t count = 0;
    for (auto w : weights) count += (w == distinct[g]) ? 1u : 0u;
    std::size_t k = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] == distinct[g])
        names[i] = count > 1 ? base + std::to_string(k++) : base;
  }
  return names;
}

}  // namespace

std::string monomial_text(const ExpVec& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << names[i];
    if (e[i] != 1) os << "^" << e[i];
  }
  if (!any) os << "1";
  return os.str();
}

std::string degree_label(std::int64_t d) {
  switch (d) {
    case 2: return "quadric";
    case 3: return "cubic";
    case 4: return "quartic";
    case 5: return "quintic";
    case 6: return "sextic";
    case 7: return "heptic";
    default: return std::to_string(d) + "-ic";
  }
}

std::vector<VeroneseGenerator> veronese_generators(const WeightedSpace& w,
                                                   std::int64_t n) {
  if (n < 1) throw DomainError("Veronese index must be positive");
  const std::int64_t search_hi = w.weight_lcm();

  std::vector<VeroneseGenerator> gens;
  for (std::int64_t d = 1; d <= search_hi; ++d) {
    for_each_monomial(w, n * d, [&](const ExpVec& e) {
      for (const auto& g : gens)
        if (divides(g.monomial, e)) return;
      gens.push_back({e, d, ""});
    });
  }

  // Closure certificate: above the scanned range every monomial in the
  // subalgebra contains a pure power x_i^(n/gcd(n,a_i)) of degree <= n*lcm,
  // so checking up to max(2*lcm, ceil(sum lcm(n,a_i)/n)) settles all degrees.
  std::int64_t pure_budget = 0;
  for (auto a : w.weights()) pure_budget += lcm64(n, a);
  const std::int64_t check_hi =
      std::max(2 * search_hi, (pure_budget + n - 1) / n);
  ExpVec bad;
  if (!closure_scan(w, n, gens, search_hi + 1, check_hi, &bad))
    throw IncompleteSearchError(
        "generator search bound exhausted: monomial of degree " +
        std::to_string(weighted_degree(bad, w)) +
        " does not factor through the found generators");

  std::stable_sort(gens.begin(), gens.end(),
                   [](const VeroneseGenerator& a, const VeroneseGenerator& b) {
                     if (a.target_weight != b.target_weight)
                       return a.target_weight < b.target_weight;
                     return a.monomial > b.monomial;  // descending lex
                   });
  std::vector<std::int64_t> tw;
  for (const auto& g : gens) tw.push_back(g.target_weight);
  auto names = assign_names(tw);
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = names[i];
  return gens;
}

bool closure_scan_serial(const WeightedSpace& w, std::int64_t n,
                         const std::vector<VeroneseGenerator>& gens,
                         std::int64_t d_lo, std::int64_t d_hi,
                         ExpVec* counterexample) {
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    bool ok = true;
    ExpVec bad;
    for_each_monomial(w, n * d, [&](const ExpVec& e) {
      if (!ok) return;
      for (const auto& g : gens)
        if (divides(g.monomial, e)) return;
      ok = false;
      bad = e;
    });
    if (!ok) {
      if (counterexample) *counterexample = bad;
      return false;
    }
  }
  return true;
}

bool closure_scan(const WeightedSpace& w, std::int64_t n,
                  const std::vector<VeroneseGenerator>& gens, std::int64_t d_lo,
                  std::int64_t d_hi, ExpVec* counterexample) {
  if (d_hi < d_lo) return true;
  std::int64_t first_bad_degree = -1;
  ExpVec first_bad;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    bool ok = true;
    ExpVec bad;
    for_each_monomial(w, n * d, [&](const ExpVec& e) {
      if (!ok) return;
      for (const auto& g : gens)
        if (divides(g.monomial, e)) return;
      ok = false;
      bad = e;
    });
    if (!ok) {
#pragma omp critical
      {
        if (first_bad_degree < 0 || d < first_bad_degree) {
          first_bad_degree = d;
          first_bad = bad;
        }
      }
    }
  }
  if (first_bad_degree >= 0) {
    if (counterexample) *counterexample = first_bad;
    return false;
  }
  return true;
}

std::vector<GeneratorRelation> toric_relations(
    const std::vector<VeroneseGenerator>& gens, const WeightedSpace& source) {
  if (gens.empty()) throw DomainError("no generators");
  const std::size_t m = gens.size();
  const std::size_t k = source.coord_count();
  IntMat a(k, std::vector<Int>(m, Int(0)));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i)
      a[i][j] = Int(static_cast<long>(gens[j].monomial[i]));
  IntMat kernel = integer_kernel_basis(a);

  std::vector<GeneratorRelation> out;
  for (const auto& v : kernel) {
    GeneratorRelation rel;
    rel.lhs.assign(m, 0);
    rel.rhs.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const long c = static_cast<long>(v[j].get_si());
      if (c > 0)
        rel.lhs[j] = c;
      else if (c < 0)
        rel.rhs[j] = -c;
    }
    if (rel.lhs < rel.rhs) std::swap(rel.lhs, rel.rhs);  // lex-greater side first
    std::int64_t deg = 0;
    for (std::size_t j = 0; j < m; ++j) deg += rel.lhs[j] * gens[j].target_weight;
    std::int64_t deg_rhs = 0;
    for (std::size_t j = 0; j < m; ++j) deg_rhs += rel.rhs[j] * gens[j].target_weight;
    if (deg != deg_rhs)
      throw ConsistencyError("relation binomial not homogeneous in the target grading");
    rel.degree = deg;
    out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end(), [](const GeneratorRelation& x, const GeneratorRelation& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.lhs != y.lhs) return x.lhs < y.lhs;
    return x.rhs < y.rhs;
  });
  return out;
}

VeroneseEmbedding veronese_embedding(const WeightedSpace& w, std::int64_t n) {
  VeroneseEmbedding emb{w, n, veronese_generators(w, n), {}, false, true};
  emb.relations = toric_relations(emb.generators, w);
  emb.relations_certified_minimal = emb.relations.size() <= 1;
  return emb;
}

std::string HypersurfaceModel::relation_text() const {
  std::vector<std::string> names;
  for (const auto& g : generators) names.push_back(g.name);
  return monomial_text(relation.lhs, names) + " = " + monomial_text(relation.rhs, names);
}

std::string HypersurfaceModel::degree_label() const {
  return gwps3::degree_label(relation_degree);
}

HypersurfaceModel embed_as_hypersurface(const WeightedSpace& w, std::int64_t n) {
  auto emb = veronese_embedding(w, n);
  const std::size_t expected = w.coord_count() + 1;  // dim + 2
  if (emb.generators.size() != expected) {
    std::vector<std::int64_t> tw;
    for (const auto& g : emb.generators) tw.push_back(g.target_weight);
    throw NotHypersurfaceError(tw);
  }
  if (emb.relations.size() != 1)
    throw ConsistencyError("hypersurface generator count with kernel rank != 1");
  HypersurfaceModel model{WeightedSpace({1}), emb.generators, emb.relations[0],
                          emb.relations[0].degree};
  std::vector<std::int64_t> tw;
  for (const auto& g : emb.generators) tw.push_back(g.target_weight);
  model.target = WeightedSpace(tw);
  return model;
}

}  // namespace gwps3
