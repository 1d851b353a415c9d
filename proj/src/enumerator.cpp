#include "wgap/enumerator.hpp"

#include <atomic>
#include <charconv>
#include <mutex>
#include <string>
#include <thread>

namespace wgap {

namespace {

void requireGenus(Genus genus) {
  if (genus < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "genus must be non-negative, got " + std::to_string(genus));
  }
}

// A node of the semigroup tree, stored as the number of unordered
// decompositions y = a + b (a <= b, both members, 0 allowed) for every
// y < 2 * target. y is a member iff decompositions[y] > 0 and a minimal
// generator iff decompositions[y] == 1.
struct Node {
  std::vector<Order> gaps;
  std::vector<std::uint32_t> decompositions;
};

Node rootNode(Genus target) {
  Node root;
  root.decompositions.resize(static_cast<std::size_t>(2 * target));
  for (std::size_t y = 0; y < root.decompositions.size(); ++y) {
    root.decompositions[y] = static_cast<std::uint32_t>(y / 2 + 1);
  }
  return root;
}

// Removing generator x drops exactly the pair {x, y - x} from every y >= x
// whose complement y - x was a member of the parent.
void removeGenerator(const std::vector<std::uint32_t>& parent, Order x,
                     std::vector<std::uint32_t>& child) {
  child = parent;
  const auto limit = static_cast<Order>(parent.size());
  for (Order y = x; y < limit; ++y) {
    if (parent[static_cast<std::size_t>(y - x)] > 0) {
      --child[static_cast<std::size_t>(y)];
    }
  }
}

// Children worth visiting have their new gap x in (frobenius, target + depth]:
// the remaining target - depth - 1 gaps must still fit below 2 * target.
std::pair<Order, Order> childRange(const std::vector<Order>& gaps, Genus target) {
  const auto depth = static_cast<Genus>(gaps.size());
  const Order frobenius = gaps.empty() ? 0 : gaps.back();
  return {frobenius + 1, target + depth};
}

template <class Visitor>
class TreeWalker {
 public:
  TreeWalker(Genus target, Visitor& visitor, bool countLastLevel)
      : target_(target),
        visitor_(visitor),
        countLastLevel_(countLastLevel),
        levels_(static_cast<std::size_t>(target + 1)) {}

  void walk(const Node& start) {
    path_ = start.gaps;
    const auto depth = static_cast<std::size_t>(path_.size());
    levels_[depth] = start.decompositions;
    descend(depth);
  }

 private:
  void descend(std::size_t depth) {
    if (static_cast<Genus>(depth) == target_) {
      visitor_.leaf(path_);
      return;
    }
    const auto& node = levels_[depth];
    const auto [lo, hi] = childRange(path_, target_);
    if (countLastLevel_ && static_cast<Genus>(depth) + 1 == target_) {
      std::uint64_t children = 0;
      for (Order x = lo; x <= hi; ++x) {
        if (node[static_cast<std::size_t>(x)] == 1) ++children;
      }
      visitor_.countLeaves(children);
      return;
    }
    for (Order x = lo; x <= hi; ++x) {
      if (node[static_cast<std::size_t>(x)] != 1) continue;
      removeGenerator(node, x, levels_[depth + 1]);
      path_.push_back(x);
      descend(depth + 1);
      path_.pop_back();
    }
  }

  Genus target_;
  Visitor& visitor_;
  bool countLastLevel_;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<Order> path_;
};

struct Counter {
  std::uint64_t count = 0;
  void leaf(const std::vector<Order>&) { ++count; }
  void countLeaves(std::uint64_t n) { count += n; }
};

struct Collector {
  std::uint64_t count = 0;
  std::vector<GapSequence>* out = nullptr;
  const SequenceSink* sink = nullptr;
  std::mutex* sinkMutex = nullptr;

  void leaf(const std::vector<Order>& gaps) {
    ++count;
    if (!out && !(sink && *sink)) return;
    auto seq = detail::SequenceAccess::make(gaps);
    if (sink && *sink) {
      if (sinkMutex) {
        std::lock_guard lock(*sinkMutex);
        (*sink)(seq);
      } else {
        (*sink)(seq);
      }
    }
    if (out) out->push_back(std::move(seq));
  }
  void countLeaves(std::uint64_t) {}
};

// Expands the tree breadth-first until there are enough independent
// subtrees to keep every worker busy. Level order keeps the frontier in
// lexicographic order.
std::vector<Node> buildFrontier(Genus target, std::size_t wanted) {
  std::vector<Node> frontier{rootNode(target)};
  Genus depth = 0;
  while (depth < target && frontier.size() < wanted) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      const auto [lo, hi] = childRange(node.gaps, target);
      for (Order x = lo; x <= hi; ++x) {
        if (node.decompositions[static_cast<std::size_t>(x)] != 1) continue;
        Node child;
        removeGenerator(node.decompositions, x, child.decompositions);
        child.gaps = node.gaps;
        child.gaps.push_back(x);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return frontier;
}

template <class Job>
void runParallel(std::size_t tasks, unsigned workers, Job job) {
  std::atomic<std::size_t> nextTask{0};
  auto worker = [&](unsigned id) {
    for (std::size_t t = nextTask++; t < tasks; t = nextTask++) job(id, t);
  };
  std::vector<std::jthread> threads;
  for (unsigned id = 1; id < workers; ++id) threads.emplace_back(worker, id);
  worker(0);
}

unsigned normalizedWorkers(unsigned workers) { return workers == 0 ? 1 : workers; }

}  // namespace

EnumerationResult bruteForceEnumerate(Genus genus, Genus limit,
                                      const EnumerationOptions& options) {
  requireGenus(genus);
  if (genus > limit) {
    throw Error(ErrorCode::ResourceLimit,
                "brute-force enumeration refused for genus " +
                    std::to_string(genus) + " above limit " + std::to_string(limit));
  }
  EnumerationResult result;
  result.genus = genus;
  auto emit = [&](GapSequence seq) {
    ++result.count;
    if (options.sink) options.sink(seq);
    if (options.collect) result.sequences.push_back(std::move(seq));
  };
  if (genus == 0) {
    emit(std::get<GapSequence>(validate(0, {})));
    return result;
  }
  // Lexicographic walk over (g-1)-subsets of {2, ..., 2g-1}; candidate[0]
  // is the fixed leading 1.
  const auto size = static_cast<std::size_t>(genus);
  const Order top = 2 * genus - 1;
  std::vector<Order> candidate(size);
  for (std::size_t i = 0; i < size; ++i) candidate[i] = static_cast<Order>(i + 1);
  while (true) {
    auto checked = validate(genus, candidate);
    if (auto* seq = std::get_if<GapSequence>(&checked)) emit(std::move(*seq));
    // Advance to the next subset: bump the rightmost position with room.
    std::size_t i = size;
    while (i > 1 && candidate[i - 1] == top - static_cast<Order>(size - i)) --i;
    if (i <= 1) break;
    ++candidate[i - 1];
    for (std::size_t j = i; j < size; ++j) candidate[j] = candidate[j - 1] + 1;
  }
  return result;
}

EnumerationResult treeEnumerate(Genus genus, const EnumerationOptions& options) {
  requireGenus(genus);
  EnumerationResult result;
  result.genus = genus;
  const unsigned workers = normalizedWorkers(options.workers);

  if (workers == 1) {
    Collector collector;
    collector.out = options.collect ? &result.sequences : nullptr;
    collector.sink = &options.sink;
    TreeWalker walker(genus, collector, false);
    walker.walk(rootNode(genus));
    result.count = collector.count;
    return result;
  }

  const auto frontier = buildFrontier(genus, std::size_t{16} * workers);
  std::vector<std::vector<GapSequence>> perTask(options.collect ? frontier.size() : 0);
  std::vector<std::uint64_t> perWorker(workers, 0);
  std::mutex sinkMutex;
  runParallel(frontier.size(), workers, [&](unsigned id, std::size_t task) {
    Collector collector;
    collector.out = options.collect ? &perTask[task] : nullptr;
    collector.sink = &options.sink;
    collector.sinkMutex = &sinkMutex;
    TreeWalker walker(genus, collector, false);
    walker.walk(frontier[task]);
    perWorker[id] += collector.count;
  });
  for (auto c : perWorker) result.count += c;
  for (auto& chunk : perTask) {
    for (auto& seq : chunk) result.sequences.push_back(std::move(seq));
  }
  return result;
}

std::uint64_t treeCount(Genus genus, unsigned workers) {
  requireGenus(genus);
  workers = normalizedWorkers(workers);
  if (workers == 1) {
    Counter counter;
    TreeWalker walker(genus, counter, true);
    walker.walk(rootNode(genus));
    return counter.count;
  }
  const auto frontier = buildFrontier(genus, std::size_t{16} * workers);
  std::vector<std::uint64_t> perWorker(workers, 0);
  runParallel(frontier.size(), workers, [&](unsigned id, std::size_t task) {
    Counter counter;
    TreeWalker walker(genus, counter, true);
    walker.walk(frontier[task]);
    perWorker[id] += counter.count;
  });
  std::uint64_t total = 0;
  for (auto c : perWorker) total += c;
  return total;
}

std::vector<GenusCount> countByGenus(Genus maxGenus, unsigned workers) {
  requireGenus(maxGenus);
  std::vector<GenusCount> rows;
  rows.reserve(static_cast<std::size_t>(maxGenus + 1));
  for (Genus g = 0; g <= maxGenus; ++g) rows.push_back({g, treeCount(g, workers)});
  return rows;
}

SequenceFilter parseFilter(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::Parse,
                "filter must look like KEY=VALUE, got '" + std::string(text) + "'");
  }
  const auto key = text.substr(0, eq);
  const auto value = text.substr(eq + 1);
  auto parseInt = [&]() {
    std::int64_t v = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, v);
    if (ec != std::errc() || ptr != end || value.empty()) {
      throw Error(ErrorCode::Parse,
                  "filter value '" + std::string(value) + "' is not an integer");
    }
    return v;
  };
  if (key == "firstNonGap") return FirstNonGapIs{parseInt()};
  if (key == "weight") return WeightIs{parseInt()};
  if (key == "classification") {
    if (auto c = parseClassification(value)) return ClassificationIs{*c};
    throw Error(ErrorCode::Parse,
                "unknown classification '" + std::string(value) + "'");
  }
  throw Error(ErrorCode::Parse, "unknown filter key '" + std::string(key) + "'");
}

bool matches(const SequenceFilter& filter, const GapSequence& seq) {
  struct Match {
    const GapSequence& seq;
    bool operator()(const FirstNonGapIs& f) const {
      return seq.genus() > 0 && firstNonGap(seq) == f.value;
    }
    bool operator()(const WeightIs& f) const { return weight(seq) == f.value; }
    bool operator()(const ClassificationIs& f) const {
      return classify(seq).classification == f.value;
    }
  };
  return std::visit(Match{seq}, filter);
}

EnumerationResult filterEnumerate(Genus genus, const SequenceFilter& filter,
                                  const EnumerationOptions& options) {
  if (genus < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "filtered enumeration requires genus >= 1");
  }
  EnumerationResult result;
  result.genus = genus;
  EnumerationOptions inner;
  inner.workers = options.workers;
  inner.collect = false;
  inner.sink = [&](const GapSequence& seq) {
    if (!matches(filter, seq)) return;
    // Tree sinks are already serialised across workers.
    ++result.count;
    if (options.sink) options.sink(seq);
    if (options.collect) result.sequences.push_back(seq);
  };
  treeEnumerate(genus, inner);
  return result;
}

}  // namespace wgap
