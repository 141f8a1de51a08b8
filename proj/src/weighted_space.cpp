#include "gwps3/weighted_space.hpp"

#include <algorithm>
#include <sstream>

namespace gwps3 {

WeightedSpace::WeightedSpace(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weighted space needs weights");
  std::int64_t g = 0;
  for (auto a : weights_) {
    if (a < 1) throw DomainError("weights must be positive");
    g = gcd64(g, a);
    lcm_ = lcm64(lcm_, a);
    sigma_ += a;
  }
  if (g != 1) throw DomainError("weights must have gcd 1");
}

WeightedSpace WeightedSpace::sorted() const {
  auto w = weights_;
  std::sort(w.begin(), w.end());
  return WeightedSpace(w);
}

std::string WeightedSpace::label() const {
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < weights_.size();) {
    std::size_t j = i;
    while (j < weights_.size() && weights_[j] == weights_[i]) ++j;
    if (i) os << ",";
    os << weights_[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

std::string WeightedSpace::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) os << ",";
    os << weights_[i];
  }
  return os.str();
}

WeightedSpace parse_weights(const std::string& csv) {
  std::vector<std::int64_t> w;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad weight '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw DomainError("bad weight '" + tok + "'");
    w.push_back(v);
  }
  if (w.empty()) throw DomainError("empty weight list");
  return WeightedSpace(w);
}

}  // namespace gwps3
