#include "gwps3/profiles.hpp"

#include <algorithm>
#include <sstream>

#include "gwps3/errors.hpp"

namespace gwps3 {

std::vector<std::int64_t> MultiplicityProfile::multiset() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries)
    for (std::int64_t i = 0; i < e.point_count; ++i) out.push_back(e.multiplicity);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool MultiplicityProfile::degree_accounting_ok() const {
  std::int64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity * e.point_count * e.point_degree;
  return total == form_degree;
}

MultiplicityProfile MultiplicityProfile::scaled(std::int64_t m) const {
  if (m < 1) throw DomainError("profile scale must be positive");
  MultiplicityProfile out = *this;
  out.form_degree *= m;
  for (auto& e : out.entries) e.multiplicity *= m;
  return out;
}

std::string MultiplicityProfile::to_string() const {
  std::ostringstream os;
  os << "{";
  auto ms = multiset();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) os << ",";
    os << ms[i];
  }
  os << "}";
  return os.str();
}

namespace {

int upoly_deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

void upoly_trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly upoly_monic(UPoly f) {
  upoly_trim(f);
  if (f.empty()) return f;
  const Rat lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

// remainder of f by g (g nonzero), in place arithmetic over Q
UPoly upoly_rem(UPoly f, const UPoly& g) {
  upoly_trim(f);
  while (upoly_deg(f) >= upoly_deg(g) && !f.empty()) {
    const Rat q = f.back() / g.back();
    const int shift = upoly_deg(f) - upoly_deg(g);
    for (int i = 0; i <= upoly_deg(g); ++i)
      f[static_cast<std::size_t>(i + shift)] -= q * g[static_cast<std::size_t>(i)];
    upoly_trim(f);
  }
  return f;
}

}  // namespace

UPoly upoly_derivative(const UPoly& f) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * f[i]);
  upoly_trim(d);
  return d;
}

UPoly upoly_gcd(UPoly f, UPoly g) {
  upoly_trim(f);
  upoly_trim(g);
  while (!g.empty()) {
    UPoly r = upoly_rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return upoly_monic(std::move(f));
}

UPoly upoly_divexact(const UPoly& f, const UPoly& g) {
  UPoly rem = f;
  upoly_trim(rem);
  UPoly q(rem.size(), Rat(0));
  if (g.empty() || g.back() == 0) throw DomainError("division by zero polynomial");
  while (!rem.empty() && upoly_deg(rem) >= upoly_deg(g)) {
    const Rat c = rem.back() / g.back();
    const int shift = upoly_deg(rem) - upoly_deg(g);
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= upoly_deg(g); ++i)
      rem[static_cast<std::size_t>(i + shift)] -= c * g[static_cast<std::size_t>(i)];
    upoly_trim(rem);
  }
  if (!rem.empty()) throw DomainError("inexact univariate division");
  upoly_trim(q);
  return q;
}

std::vector<std::pair<UPoly, std::int64_t>> squarefree_decomposition(const UPoly& f0) {
  UPoly f = upoly_monic(f0);
  if (f.empty()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<UPoly, std::int64_t>> out;
  if (upoly_deg(f) == 0) return out;

  // s_i = squarefree part of the i-th iterated gcd chain: factors of
  // multiplicity exactly i are s_i / s_{i+1}.
  std::vector<UPoly> chain;  // f_1 = f, f_{i+1} = gcd(f_i, f_i')
  chain.push_back(f);
  while (upoly_deg(chain.back()) > 0)
    chain.push_back(upoly_gcd(chain.back(), upoly_derivative(chain.back())));
  std::vector<UPoly> sf;  // s_i = f_i / f_{i+1}
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    sf.push_back(upoly_divexact(chain[i], chain[i + 1]));
  sf.push_back(UPoly{Rat(1)});
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
    UPoly factor = upoly_divexact(sf[i], sf[i + 1]);
    if (upoly_deg(factor) > 0) out.emplace_back(upoly_monic(std::move(factor)),
                                                static_cast<std::int64_t>(i + 1));
  }
  return out;
}

MultiplicityProfile binary_profile(const SparsePoly& form) {
  if (form.is_zero()) throw DomainError("binary profile of the zero form");
  const auto& cs = form.coords();
  if (cs.size() != 2) throw DomainError("binary profile needs exactly two coordinates");
  const std::int64_t a = cs.weights[0], b = cs.weights[1];
  if (gcd64(a, b) != 1) throw DomainError("coordinate weights must be coprime");
  auto deg = form.homogeneous_degree();
  if (!deg) throw HomogeneityError("binary profile needs a homogeneous form");

  MultiplicityProfile prof;
  prof.form_degree = *deg;

  const std::int64_t alpha = form.valuation(cs.names[0]);
  const std::int64_t beta = form.valuation(cs.names[1]);
  SparsePoly h = form;
  if (alpha > 0) {
    h = h.divide_power(cs.names[0], alpha);
    prof.entries.push_back({alpha, 1, a, "coordinate point [0:1]"});
  }
  if (beta > 0) {
    h = h.divide_power(cs.names[1], beta);
    prof.entries.push_back({beta, 1, b, "coordinate point [1:0]"});
  }

  const std::int64_t dh = *deg - alpha * a - beta * b;
  if (dh == 0) return prof;
  if (dh % (a * b) != 0)
    throw ConsistencyError("middle part degree not divisible by a*b");
  const std::int64_t e = dh / (a * b);

  // h is supported on x^(b(e-s)) y^(a s); read off the degree-e dehomogenization.
  UPoly u(static_cast<std::size_t>(e) + 1, Rat(0));
  for (const auto& [exp, c] : h.terms()) {
    if (exp[1] % a != 0 || exp[0] % b != 0)
      throw ConsistencyError("unexpected exponent pattern in binary form");
    const std::int64_t s = exp[1] / a;
    u[static_cast<std::size_t>(s)] = c;
  }
  for (const auto& [factor, mult] : squarefree_decomposition(u)) {
    const auto k = static_cast<std::int64_t>(factor.size()) - 1;
    prof.entries.push_back({mult, k, a * b,
                            "general points of a squarefree factor of degree " +
                                std::to_string(k)});
  }
  return prof;
}

PlaneGenus plane_curve_genus(std::int64_t d, const std::vector<std::int64_t>& deltas) {
  if (d < 1) throw DomainError("plane curve degree must be positive");
  Int g = Int(static_cast<long>(d - 1)) * Int(static_cast<long>(d - 2)) / 2;
  for (auto dd : deltas) {
    if (dd < 0) throw DomainError("delta invariants must be nonnegative");
    g -= Int(static_cast<long>(dd));
  }
  return {g, g < 0};
}

}  // namespace gwps3
