#include "axlab/types.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace axlab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = std::min(digits.find_first_not_of('0'), digits.size() - 1);
  return BigInt(std::string(digits.substr(first)));
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(text.substr(e + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
    }
    text = text.substr(0, e);
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    fraction_digits = text.size() - dot - 1;
  } else {
    digits = std::string(text);
  }
  Rational value(parse_integer(digits, original));
  exponent -= static_cast<long>(fraction_digits);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? value / Rational(scale) : value * Rational(scale);
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), original);
    Rational den = parse_decimal(text.substr(slash + 1), original);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    return num / den;
  }
  return parse_decimal(text, original);
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

nlohmann::json rational_to_json(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"decimal", to_double(r)}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    return Rational(BigInt(j.at("num").get<std::string>())) / Rational(BigInt(j.at("den").get<std::string>()));
  }
  throw std::invalid_argument("cannot read rational from JSON: " + j.dump());
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Clustering::Clustering(std::vector<VertexSet> clusters) : clusters_(std::move(clusters)) {
  for (auto& c : clusters_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw std::invalid_argument("cluster lists a vertex twice");
    }
  }
  std::erase_if(clusters_, [](const VertexSet& c) { return c.empty(); });
  std::sort(clusters_.begin(), clusters_.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
}

Clustering Clustering::singletons(std::size_t n) {
  std::vector<VertexSet> cs;
  cs.reserve(n);
  for (std::size_t v = 0; v < n; ++v) cs.push_back({static_cast<Vertex>(v)});
  return Clustering(std::move(cs));
}

Clustering Clustering::one_block(std::size_t n) {
  VertexSet all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  return Clustering({all});
}

Clustering Clustering::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, VertexSet> groups;
  for (std::size_t v = 0; v < labels.size(); ++v) groups[labels[v]].push_back(static_cast<Vertex>(v));
  std::vector<VertexSet> cs;
  for (auto& [_, members] : groups) cs.push_back(std::move(members));
  return Clustering(std::move(cs));
}

std::size_t Clustering::vertex_count() const {
  std::size_t total = 0;
  for (const auto& c : clusters_) total += c.size();
  return total;
}

std::vector<std::size_t> Clustering::labels() const {
  std::size_t n = 0;
  for (const auto& c : clusters_) n = std::max<std::size_t>(n, c.back() + 1);
  std::vector<std::size_t> out(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    for (Vertex v : clusters_[i]) out[v] = i;
  }
  return out;
}

bool Clustering::is_partition_of(std::size_t n) const {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (const auto& c : clusters_) {
    for (Vertex v : c) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
      ++count;
    }
  }
  return count == n;
}

bool Clustering::contains_cluster(std::span<const Vertex> cluster) const {
  return std::any_of(clusters_.begin(), clusters_.end(), [&](const VertexSet& c) {
    return std::equal(c.begin(), c.end(), cluster.begin(), cluster.end());
  });
}

bool Clustering::refines(const Clustering& other) const {
  auto outer = other.labels();
  for (const auto& c : clusters_) {
    if (c.front() >= outer.size()) return false;
    std::size_t home = outer[c.front()];
    if (home == static_cast<std::size_t>(-1)) return false;
    for (Vertex v : c) {
      if (v >= outer.size() || outer[v] != home) return false;
    }
  }
  return true;
}

nlohmann::json clustering_to_json(const Clustering& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cluster : c.clusters()) out.push_back(cluster);
  return out;
}

Clustering clustering_from_json(const nlohmann::json& j) {
  std::vector<VertexSet> cs;
  for (const auto& cluster : j) cs.push_back(cluster.get<VertexSet>());
  return Clustering(std::move(cs));
}

}  // namespace axlab
