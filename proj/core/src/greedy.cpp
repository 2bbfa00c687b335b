#include "srsg/greedy.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace srsg {

FractionKey fraction_key(std::int32_t assignable_red, std::int32_t assigned_blue) {
  if (assignable_red <= 0) return {0, 1};
  if (assigned_blue <= 0) return {1, 0};
  return {assignable_red, assigned_blue};
}

std::strong_ordering compare_keys(const FractionKey& a, const FractionKey& b) {
  return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
}

namespace {

struct HeapEntry {
  FractionKey key;
  ResourceId resource;
  std::int32_t red;   // snapshot for staleness detection
  std::int32_t blue;
};

struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    auto cmp = compare_keys(a.key, b.key);
    if (cmp != std::strong_ordering::equal) return cmp < 0;
    return a.resource > b.resource;  // lower id wins ties
  }
};

}  // namespace

GreedyResult compute_ibe_greedy(const Instance& g) {
  require_valid(g);

  const std::int32_t n = g.agent_count();
  const std::int32_t k = g.resource_count;
  const auto accessors = g.accessor_lists();

  std::vector<ResourceId> choice(n, -1);
  std::vector<bool> resource_alive(k, true);
  std::vector<std::int32_t> assignable_red(k, 0);
  std::vector<std::int32_t> assigned_blue(k, 0);
  std::vector<std::int32_t> blue_degree(n, 0);

  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
  // Min-heap of blue agents forced to their last remaining resource.
  std::priority_queue<AgentId, std::vector<AgentId>, std::greater<>> pin_queue;

  for (AgentId a = 0; a < n; ++a) {
    if (g.colors[a] == Color::Red) {
      for (ResourceId q : g.access[a]) ++assignable_red[q];
    } else {
      blue_degree[a] = static_cast<std::int32_t>(g.access[a].size());
      if (blue_degree[a] == 1) pin_queue.push(a);
    }
  }
  for (ResourceId q = 0; q < k; ++q)
    heap.push({fraction_key(assignable_red[q], 0), q, assignable_red[q], 0});

  GreedyResult result;
  result.removal_log.reserve(k);

  for (std::int32_t removed = 0; removed < k; ++removed) {
    // Forced blue agents first, in ascending agent id.
    while (!pin_queue.empty()) {
      AgentId a = pin_queue.top();
      pin_queue.pop();
      if (choice[a] != -1) continue;
      ResourceId target = -1;
      for (ResourceId q : g.access[a])
        if (resource_alive[q]) {
          target = q;
          break;
        }
      choice[a] = target;
      ++assigned_blue[target];
      heap.push({fraction_key(assignable_red[target], assigned_blue[target]),
                 target, assignable_red[target], assigned_blue[target]});
    }

    // Highest ratio of assignable red to assigned blue; lazy staleness check.
    ResourceId picked = -1;
    while (!heap.empty()) {
      HeapEntry top = heap.top();
      heap.pop();
      if (!resource_alive[top.resource]) continue;
      if (top.red != assignable_red[top.resource] ||
          top.blue != assigned_blue[top.resource])
        continue;
      picked = top.resource;
      break;
    }
    if (picked == -1) throw std::logic_error("greedy heap exhausted before resources");

    const std::int32_t red_here = assignable_red[picked];
    const std::int32_t blue_here = assigned_blue[picked];

    for (AgentId a : accessors[picked]) {
      if (choice[a] != -1) continue;
      if (g.colors[a] == Color::Red) {
        choice[a] = picked;
        for (ResourceId p : g.access[a]) {
          if (p == picked || !resource_alive[p]) continue;
          --assignable_red[p];
          heap.push({fraction_key(assignable_red[p], assigned_blue[p]), p,
                     assignable_red[p], assigned_blue[p]});
        }
      }
    }

    const std::int32_t total = red_here + blue_here;
    result.removal_log.push_back(
        {picked, total > 0 ? Rational(red_here, total) : Rational(0, 1)});

    resource_alive[picked] = false;
    for (AgentId a : accessors[picked]) {
      if (choice[a] != -1) continue;
      // Only blue agents can still be unassigned here.
      if (--blue_degree[a] == 1) pin_queue.push(a);
    }
  }

  for (AgentId a = 0; a < n; ++a)
    if (choice[a] == -1)
      throw std::logic_error("greedy left agent " + std::to_string(a) + " unassigned");

  result.profile = StrategyProfile{std::move(choice)};
  return result;
}

std::string removal_log_to_csv(const std::vector<RemovalRecord>& log) {
  std::ostringstream out;
  out << "order,resource,red_num,red_den\n";
  std::int64_t order = 0;
  for (const RemovalRecord& rec : log)
    out << ++order << ',' << rec.resource << ',' << rec.red_fraction.num() << ','
        << rec.red_fraction.den() << "\n";
  return out.str();
}

}  // namespace srsg
