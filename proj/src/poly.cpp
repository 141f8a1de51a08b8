#include "gwps3/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gwps3/grading.hpp"

namespace gwps3 {

CoordSystem::CoordSystem(std::vector<std::string> n, std::vector<std::int64_t> w)
    : names(std::move(n)), weights(std::move(w)) {
  if (names.empty() || names.size() != weights.size())
    throw DomainError("coordinate names and weights must match and be nonempty");
  for (auto a : weights)
    if (a < 1) throw DomainError("coordinate weights must be positive");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw DomainError("duplicate coordinate " + names[i]);
}

std::size_t CoordSystem::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw DomainError("no coordinate named " + name);
}

bool CoordSystem::has(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

CoordSystem CoordSystem::subsystem(const std::vector<std::string>& keep) const {
  std::vector<std::string> n;
  std::vector<std::int64_t> w;
  for (const auto& name : keep) {
    n.push_back(name);
    w.push_back(weights[index_of(name)]);
  }
  return CoordSystem(n, w);
}

std::string CoordSystem::header() const {
  std::ostringstream os;
  os << "coords:";
  for (std::size_t i = 0; i < names.size(); ++i)
    os << " " << names[i] << ":" << weights[i];
  return os.str();
}

CoordSystem CoordSystem::parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  is >> tag;
  if (tag != "coords:") throw DomainError("expected 'coords:' header");
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  std::string tok;
  while (is >> tok) {
    auto pos = tok.rfind(':');
    if (pos == std::string::npos || pos + 1 >= tok.size())
      throw DomainError("bad coordinate declaration '" + tok + "'");
    names.push_back(tok.substr(0, pos));
    weights.push_back(std::stoll(tok.substr(pos + 1)));
  }
  return CoordSystem(names, weights);
}

bool SparsePoly::TermCmp::operator()(const ExpVec& a, const ExpVec& b) const {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    da += a[i] * weights[i];
    db += b[i] * weights[i];
  }
  if (da != db) return da < db;
  return a < b;
}

SparsePoly::SparsePoly(CoordSystem cs)
    : coords_(std::move(cs)), terms_(TermCmp{coords_.weights}) {}

SparsePoly SparsePoly::term(const CoordSystem& cs, const ExpVec& e, const Rat& c) {
  if (e.size() != cs.size())
    throw DimensionError("exponent vector length does not match coordinates");
  for (auto k : e)
    if (k < 0) throw DomainError("negative exponent");
  SparsePoly p(cs);
  p.add_term(e, c);
  return p;
}

SparsePoly SparsePoly::constant(const CoordSystem& cs, const Rat& c) {
  return term(cs, ExpVec(cs.size(), 0), c);
}

SparsePoly SparsePoly::variable(const CoordSystem& cs, const std::string& name) {
  ExpVec e(cs.size(), 0);
  e[cs.index_of(name)] = 1;
  return term(cs, e, Rat(1));
}

void SparsePoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::int64_t> SparsePoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<std::int64_t> deg;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * coords_.weights[i];
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (coords_ != o.coords_) throw DomainError("coordinate systems differ");
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  if (coords_ != o.coords_) throw DomainError("coordinate systems differ");
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, Rat(-c));
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(coords_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
  return r;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
  SparsePoly r(coords_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, Rat(c * k));
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (coords_ != o.coords_) throw DomainError("coordinate systems differ");
  SparsePoly r(coords_);
  ExpVec e(coords_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, Rat(c1 * c2));
    }
  return r;
}

SparsePoly SparsePoly::pow(std::int64_t k) const {
  if (k < 0) throw DomainError("negative power");
  SparsePoly r = constant(coords_, Rat(1));
  for (std::int64_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::substitute(const std::string& var, const SparsePoly& r) const {
  if (coords_ != r.coords()) throw DomainError("coordinate systems differ");
  const std::size_t vi = coords_.index_of(var);
  auto rdeg = r.homogeneous_degree();
  if (!rdeg || *rdeg != coords_.weights[vi])
    throw HomogeneityError("substituted value must be homogeneous of weight " +
                           std::to_string(coords_.weights[vi]));
  std::int64_t maxexp = 0;
  for (const auto& [e, c] : terms_) maxexp = std::max(maxexp, e[vi]);
  std::vector<SparsePoly> powers;
  powers.push_back(constant(coords_, Rat(1)));
  for (std::int64_t k = 1; k <= maxexp; ++k) powers.push_back(powers.back() * r);

  SparsePoly out(coords_);
  for (const auto& [e, c] : terms_) {
    ExpVec rest = e;
    const std::int64_t k = rest[vi];
    rest[vi] = 0;
    out = out + powers[static_cast<std::size_t>(k)] * term(coords_, rest, c);
  }
  return out;
}

SparsePoly SparsePoly::restrict_hyperplane(const std::string& var) const {
  const std::size_t vi = coords_.index_of(var);
  SparsePoly out(coords_);
  for (const auto& [e, c] : terms_)
    if (e[vi] == 0) out.terms_.emplace(e, c);
  return out;
}

std::int64_t SparsePoly::valuation(const std::string& var) const {
  if (terms_.empty()) throw DomainError("valuation of the zero polynomial");
  const std::size_t vi = coords_.index_of(var);
  std::int64_t v = -1;
  for (const auto& [e, c] : terms_)
    if (v < 0 || e[vi] < v) v = e[vi];
  return v;
}

SparsePoly SparsePoly::divide_power(const std::string& var, std::int64_t k) const {
  const std::size_t vi = coords_.index_of(var);
  SparsePoly out(coords_);
  for (const auto& [e, c] : terms_) {
    if (e[vi] < k)
      throw DomainError("polynomial is not divisible by " + var + "^" + std::to_string(k));
    ExpVec q = e;
    q[vi] -= k;
    out.terms_.emplace(q, c);
  }
  return out;
}

SparsePoly SparsePoly::to_coords(const CoordSystem& target) const {
  std::vector<std::size_t> src_index(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) {
    src_index[j] = coords_.index_of(target.names[j]);
    if (coords_.weights[src_index[j]] != target.weights[j])
      throw DomainError("coordinate " + target.names[j] + " changes weight");
  }
  SparsePoly out(target);
  std::vector<bool> kept(coords_.size(), false);
  for (auto i : src_index) kept[i] = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!kept[i] && e[i] != 0)
        throw DomainError("term involves dropped coordinate " + coords_.names[i]);
    ExpVec t(target.size());
    for (std::size_t j = 0; j < target.size(); ++j) t[j] = e[src_index[j]];
    out.add_term(t, c);
  }
  return out;
}

SparsePoly SparsePoly::lift_to(const CoordSystem& target) const {
  std::vector<std::size_t> dst_index(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    dst_index[i] = target.index_of(coords_.names[i]);
    if (target.weights[dst_index[i]] != coords_.weights[i])
      throw DomainError("coordinate " + coords_.names[i] + " changes weight");
  }
  SparsePoly out(target);
  for (const auto& [e, c] : terms_) {
    ExpVec t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[dst_index[i]] = e[i];
    out.add_term(t, c);
  }
  return out;
}

std::string SparsePoly::poly_line() const {
  std::ostringstream os;
  os << "poly:";
  if (terms_.empty()) {
    os << " 0";
    return os.str();
  }
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? " " : " + ");
    first = false;
    os << c.get_str();
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) any = any || e[i] != 0;
    if (any) {
      os << " *";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << " " << coords_.names[i];
        if (e[i] != 1) os << "^" << e[i];
      }
    }
  }
  return os.str();
}

std::string SparsePoly::text() const { return coords_.header() + "\n" + poly_line() + "\n"; }

SparsePoly SparsePoly::parse_poly_line(const CoordSystem& cs, const std::string& line) {
  std::string body = line;
  const std::string tag = "poly:";
  auto pos = body.find(tag);
  if (pos == std::string::npos) throw DomainError("expected 'poly:' line");
  body = body.substr(pos + tag.size());

  SparsePoly out(cs);
  // split on '+' (signs live inside coefficients, never as separators)
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : body) {
    if (ch == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);

  for (auto& part : parts) {
    std::istringstream is(part);
    std::string coeff_tok;
    if (!(is >> coeff_tok)) throw DomainError("empty term in polynomial");
    if (coeff_tok == "0" && parts.size() == 1) {
      std::string rest;
      if (is >> rest) throw DomainError("junk after zero polynomial");
      return out;
    }
    Rat c(coeff_tok);
    c.canonicalize();
    ExpVec e(cs.size(), 0);
    std::string tok;
    bool saw_star = false;
    while (is >> tok) {
      if (tok == "*") {
        saw_star = true;
        continue;
      }
      if (!saw_star) throw DomainError("expected '*' before monomial in '" + part + "'");
      auto caret = tok.find('^');
      std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
      std::int64_t k = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
      e[cs.index_of(name)] += k;
    }
    out.add_term(e, c);
  }
  return out;
}

SparsePoly SparsePoly::parse(const std::string& text) {
  std::istringstream is(text);
  std::string header, poly_line_s;
  if (!std::getline(is, header)) throw DomainError("empty polynomial text");
  while (header.empty() || header[0] == '#') {
    if (!std::getline(is, header)) throw DomainError("missing coords header");
  }
  if (!std::getline(is, poly_line_s)) throw DomainError("missing poly line");
  CoordSystem cs = CoordSystem::parse_header(header);
  return parse_poly_line(cs, poly_line_s);
}

SparsePoly random_homogeneous(const CoordSystem& cs, std::int64_t d, std::uint64_t seed) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  std::mt19937_64 rng(seed);
  auto coeff = [&]() {
    const std::uint64_t r = rng();
    const long num = 1 + static_cast<long>((r >> 1) % 9);
    const long den = 1 + static_cast<long>((r >> 13) % 4);
    return make_rat((r & 1) ? -num : num, den);
  };
  SparsePoly out(cs);
  std::vector<SparsePoly> built;
  for_each_monomial(cs.weights, d, [&](const ExpVec& e) {
    built.push_back(SparsePoly::term(cs, e, coeff()));
  });
  for (const auto& t : built) out = out + t;
  return out;
}

}  // namespace gwps3
