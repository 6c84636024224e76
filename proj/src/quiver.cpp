#include "clusterf2/quiver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "clusterf2/error.hpp"

namespace clusterf2 {
namespace {

inline constexpr std::size_t kMaxMutable = 64;

// Mutable part as bitmasks over positions 0..n-1. Frozen vertices are
// dropped: over F_2 each of them must evaluate to 1.
struct MutableGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> out;  // out[k]: mutable targets of arrows leaving k
  std::vector<std::uint64_t> in;   // in[k]: mutable sources of arrows entering k

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

MutableGraph mutable_graph(const IceQuiver& q) {
  std::map<int, std::size_t> position;
  for (const auto& v : q.vertices())
    if (!v.frozen) position.emplace(v.id, position.size());
  if (position.size() > kMaxMutable)
    fail(ErrorCode::Resource, "more than 64 mutable vertices");

  MutableGraph g;
  g.n = position.size();
  g.out.assign(g.n, 0);
  g.in.assign(g.n, 0);
  for (const auto& [s, t] : q.arrows()) {
    auto is = position.find(s);
    auto it = position.find(t);
    if (is == position.end() || it == position.end()) continue;
    g.out[is->second] |= std::uint64_t{1} << it->second;
    g.in[it->second] |= std::uint64_t{1} << is->second;
  }
  return g;
}

bool mask_acyclic(const MutableGraph& g) {
  std::uint64_t remaining = g.all();
  while (remaining) {
    bool progressed = false;
    std::uint64_t scan = remaining;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if ((g.in[v] & remaining) == 0) {
        remaining &= ~(std::uint64_t{1} << v);
        progressed = true;
      }
    }
    if (!progressed) return false;
  }
  return true;
}

std::uint64_t admissible(const MutableGraph& g, std::uint64_t subset) {
  std::uint64_t result = 0;
  std::uint64_t scan = subset;
  while (scan) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    if ((g.out[v] & subset) == 0 || (g.in[v] & subset) == 0) result |= std::uint64_t{1} << v;
  }
  return result;
}

Count checked_step(Count without, Count without_nbhd) {
  Count doubled = 0;
  Count total = 0;
  if (__builtin_add_overflow(without_nbhd, without_nbhd, &doubled) ||
      __builtin_add_overflow(without, doubled, &total))
    fail(ErrorCode::Resource, "point count exceeds 128 bits");
  return total;
}

class Eliminator {
 public:
  explicit Eliminator(const MutableGraph& g) : g_(g) {}

  Count count(std::uint64_t subset) {
    if (subset == 0) return 1;
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    const std::uint64_t candidates = admissible(g_, subset);
    if (candidates == 0) fail(ErrorCode::Internal, "acyclic subquiver without sink or source");
    const int v = std::countr_zero(candidates);
    const Count value = step(subset, v);
    memo_.emplace(subset, value);
    return value;
  }

  Count count_random(std::uint64_t subset, std::mt19937_64& rng) {
    if (subset == 0) return 1;
    std::uint64_t candidates = admissible(g_, subset);
    const int k = std::popcount(candidates);
    if (k == 0) fail(ErrorCode::Internal, "acyclic subquiver without sink or source");
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (int skip = pick(rng); skip > 0; --skip) candidates &= candidates - 1;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t nbhd = bit | ((g_.out[v] | g_.in[v]) & subset);
    const Count a = count_random(subset & ~bit, rng);
    const Count b = count_random(subset & ~nbhd, rng);
    return checked_step(a, b);
  }

 private:
  Count step(std::uint64_t subset, int v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t nbhd = bit | ((g_.out[v] | g_.in[v]) & subset);
    return checked_step(count(subset & ~bit), count(subset & ~nbhd));
  }

  const MutableGraph& g_;
  std::unordered_map<std::uint64_t, Count> memo_;
};

void require_acyclic(const MutableGraph& g) {
  if (!mask_acyclic(g)) fail(ErrorCode::NotAcyclic, "mutable part has a directed cycle");
}

void check_rank(DynkinType type, int rank) {
  const bool ok = (type == DynkinType::A && rank >= 1) ||
                  (type == DynkinType::D && rank >= 4) ||
                  (type == DynkinType::E && rank >= 6 && rank <= 8);
  if (!ok)
    fail(ErrorCode::InvalidParameter, std::string("unsupported Dynkin rank ") +
                                          dynkin_letter(type) + std::to_string(rank));
}

std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::A:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      for (int i = 1; i < rank - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 1, rank - 2);
      edges.emplace_back(rank, rank - 2);
      break;
    case DynkinType::E:
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank, 3);
      break;
  }
  return edges;
}

IceQuiver build_dynkin(DynkinType type, int rank, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<QuiverVertex> vertices;
  for (int i = 1; i <= rank; ++i) vertices.push_back({i, false});
  auto all = arrows;
  if (rank == 1) {
    vertices.push_back({2, true});
    all.emplace_back(1, 2);
  }
  (void)type;
  return IceQuiver(std::move(vertices), std::move(all));
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string s;
  while (value > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

IceQuiver::IceQuiver(std::vector<QuiverVertex> vertices, std::vector<std::pair<int, int>> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::map<int, bool> frozen;
  for (const auto& v : vertices_) {
    if (!frozen.emplace(v.id, v.frozen).second)
      fail(ErrorCode::InvalidArgument, "duplicate vertex id " + std::to_string(v.id));
  }
  std::set<std::pair<int, int>> seen;
  std::set<int> touched;
  for (const auto& [s, t] : arrows_) {
    auto fs = frozen.find(s);
    auto ft = frozen.find(t);
    if (fs == frozen.end() || ft == frozen.end())
      fail(ErrorCode::InvalidArgument,
           "arrow " + std::to_string(s) + "->" + std::to_string(t) + " uses an unknown vertex");
    if (s == t) fail(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(s));
    if (fs->second && ft->second)
      fail(ErrorCode::InvalidArgument, "arrow between frozen vertices " + std::to_string(s) +
                                           " and " + std::to_string(t));
    seen.emplace(s, t);
    touched.insert(s);
    touched.insert(t);
  }
  for (const auto& [s, t] : seen)
    if (seen.count({t, s}))
      fail(ErrorCode::InvalidArgument,
           "directed 2-cycle between " + std::to_string(s) + " and " + std::to_string(t));
  for (const auto& v : vertices_)
    if (!v.frozen && !touched.count(v.id))
      fail(ErrorCode::InvalidArgument,
           "isolated mutable vertex " + std::to_string(v.id) + " (must be frozen)");
}

std::size_t IceQuiver::mutable_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const auto& v) { return !v.frozen; }));
}

std::size_t IceQuiver::frozen_count() const noexcept { return vertices_.size() - mutable_count(); }

bool IceQuiver::is_acyclic() const { return mask_acyclic(mutable_graph(*this)); }

const char* count_method_name(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::Recursion: return "recursion";
    case CountMethod::BruteForce: return "brute-force";
    case CountMethod::ClosedForm: return "closed-form";
  }
  return "?";
}

CountResult f2_count_recursive(const IceQuiver& q) {
  const auto g = mutable_graph(q);
  require_acyclic(g);
  Eliminator e(g);
  return {e.count(g.all()), CountMethod::Recursion};
}

CountResult f2_count_recursive(const IceQuiver& q, std::mt19937_64& rng) {
  const auto g = mutable_graph(q);
  require_acyclic(g);
  Eliminator e(g);
  return {e.count_random(g.all(), rng), CountMethod::Recursion};
}

CountResult f2_count_bruteforce(const IceQuiver& q, bool force) {
  const auto g = mutable_graph(q);
  require_acyclic(g);
  const std::size_t limit = force ? kBruteForceForcedMaxMutable : kBruteForceMaxMutable;
  if (g.n > limit)
    fail(ErrorCode::Resource, "brute force is limited to " + std::to_string(limit) +
                                  " mutable vertices, quiver has " + std::to_string(g.n));

  const std::uint64_t states = std::uint64_t{1} << g.n;
  std::uint64_t solutions = 0;
  for (std::uint64_t x = 0; x < states; ++x) {
    // rhs bit k: prod over arrows out of k + prod over arrows into k (mod 2).
    std::uint64_t rhs = 0;
    for (std::size_t k = 0; k < g.n; ++k) {
      const bool out_prod = (g.out[k] & ~x) == 0;
      const bool in_prod = (g.in[k] & ~x) == 0;
      if (out_prod != in_prod) rhs |= std::uint64_t{1} << k;
    }
    for (std::uint64_t xp = 0; xp < states; ++xp)
      if ((x & xp) == rhs) ++solutions;
  }
  return {solutions, CountMethod::BruteForce};
}

std::optional<DynkinType> parse_dynkin_type(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return DynkinType::A;
    case 'D': case 'd': return DynkinType::D;
    case 'E': case 'e': return DynkinType::E;
    default: return std::nullopt;
  }
}

char dynkin_letter(DynkinType t) noexcept {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

IceQuiver dynkin_quiver(DynkinType type, int rank) {
  check_rank(type, rank);
  return build_dynkin(type, rank, dynkin_edges(type, rank));
}

std::vector<IceQuiver> dynkin_orientations(DynkinType type, int rank) {
  check_rank(type, rank);
  const auto edges = dynkin_edges(type, rank);
  if (edges.size() > 20) fail(ErrorCode::Resource, "too many orientations");
  std::vector<IceQuiver> out;
  for (std::uint32_t flips = 0; flips < (1u << edges.size()); ++flips) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      arrows.push_back((flips >> e & 1) ? std::pair{b, a} : std::pair{a, b});
    }
    out.push_back(build_dynkin(type, rank, arrows));
  }
  return out;
}

BigInt closed_form(DynkinType type, int rank) {
  check_rank(type, rank);
  const int sign = (rank % 2 == 0) ? 1 : -1;
  switch (type) {
    case DynkinType::A: {
      BigInt v = BigInt(1) << (rank + 2);
      v += -sign;  // (-1)^{n+1}
      return v / 3;
    }
    case DynkinType::D: {
      BigInt v = BigInt(5) * (BigInt(1) << rank);
      v += 7 * sign;
      return v / 3;
    }
    case DynkinType::E:
      if (rank == 8) return 381;
      break;
  }
  fail(ErrorCode::InvalidParameter,
       "no closed form for " + std::string(1, dynkin_letter(type)) + std::to_string(rank));
}

BigInt seed_count(DynkinType type, int rank) {
  check_rank(type, rank);
  switch (type) {
    case DynkinType::A:
      return binomial(2 * rank + 3, rank + 1) / (2 * rank + 3);
    case DynkinType::D:
      // (3n-2)/n * C(2n-2, n-1); the variant with C(2n-1, n-1) is not integral.
      return BigInt(3 * rank - 2) * binomial(2 * rank - 2, rank - 1) / rank;
    case DynkinType::E:
      if (rank == 8) return 25080;
      break;
  }
  fail(ErrorCode::InvalidParameter,
       "no seed count for " + std::string(1, dynkin_letter(type)) + std::to_string(rank));
}

IceQuiver quiver_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3 || parts[0] != "dynkin" || parts[1].size() != 1)
    fail(ErrorCode::Parse, "expected a builder spec like dynkin:D:5, got '" + spec + "'");
  const auto type = parse_dynkin_type(parts[1][0]);
  if (!type) fail(ErrorCode::Parse, "unknown Dynkin type '" + parts[1] + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "bad rank '" + parts[2] + "'");
  }
  return dynkin_quiver(*type, rank);
}

}  // namespace clusterf2
