#include <future>
#include <map>
#include <mutex>
#include <optional>

#include "qca/error.hpp"
#include "qca/seeds.hpp"

namespace qca {

namespace {

// Insert-if-absent index of canonical keys. Ids are handed out in insertion
// order, and insertion happens in frontier order, so ids do not depend on how
// the mutations themselves were scheduled.
class SeedIndex {
public:
  std::pair<std::size_t, bool> insert(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(key, ids_.size());
    return {it->second, inserted};
  }
  std::optional<std::size_t> find(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(key);
    if (it == ids_.end())
      return std::nullopt;
    return it->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return ids_.size();
  }

private:
  mutable std::mutex mutex_;
  std::map<std::string, std::size_t> ids_;
};

struct Expansion {
  QuantumSeed seed;
  std::string key;
};

} // namespace

ExchangeGraph explore(const QuantumSeed& s, const ExploreOptions& opt) {
  ExchangeGraph g;
  SeedIndex index;
  index.insert(canonical_key(s));
  g.vertices.push_back(s);
  g.depth.push_back(0);
  g.initial = 0;
  if (opt.max_seeds == 0)
    throw PreconditionViolation("explore: max_seeds must be positive");

  std::vector<std::size_t> frontier{0};
  const auto& ex = s.ex();
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    if (level >= opt.max_depth) {
      g.truncated = true;
      break;
    }
    // Jobs are (vertex, direction) in frontier order.
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (auto v : frontier)
      for (auto k : ex)
        jobs.emplace_back(v, k);

    std::vector<std::optional<Expansion>> results(jobs.size());
    auto run = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j < hi; ++j) {
        QuantumSeed next = mutate(g.vertices[jobs[j].first], jobs[j].second, opt.mutation);
        std::string key = canonical_key(next);
        results[j] = Expansion{std::move(next), std::move(key)};
      }
    };
    const std::size_t tasks = std::max<std::size_t>(1, std::min(opt.threads, jobs.size()));
    if (tasks <= 1) {
      run(0, jobs.size());
    } else {
      std::vector<std::future<void>> futures;
      const std::size_t chunk = (jobs.size() + tasks - 1) / tasks;
      for (std::size_t lo = 0; lo < jobs.size(); lo += chunk)
        futures.push_back(std::async(std::launch::async, run, lo,
                                     std::min(jobs.size(), lo + chunk)));
      for (auto& f : futures)
        f.get();
    }

    std::vector<std::size_t> next_frontier;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      auto& r = *results[j];
      std::size_t id;
      if (auto known = index.find(r.key)) {
        id = *known;
      } else if (index.size() >= opt.max_seeds) {
        g.truncated = true;
        continue;
      } else {
        id = index.insert(r.key).first;
        g.vertices.push_back(std::move(r.seed));
        g.depth.push_back(level + 1);
        next_frontier.push_back(id);
      }
      g.edges.push_back({jobs[j].first, jobs[j].second, id});
    }
    frontier = std::move(next_frontier);
  }
  return g;
}

} // namespace qca
