#include "posat/oracle.hpp"

#include <algorithm>

#include "posat/parallel.hpp"

namespace posat {

namespace {

class Explorer {
 public:
  Explorer(const CopyFinder& finder, int n, const std::vector<SubsetMask>& forced, const std::vector<std::uint64_t>& pool)
      : finder_(finder), n_(n), pool_(pool), index_(forced) {
    for (SubsetMask f : forced) members_ |= std::uint64_t{1} << f.bits();
  }

  /// Families extending the forced sets by `extra` pool sets whose first
  /// pick is pool_[first].
  void branch(std::size_t first, int extra) {
    if (extra == 0) {
      ++nodes_;
      record_if_saturating();
      return;
    }
    try_pick(first, extra);
  }

  std::vector<SetFamily>& hits() { return hits_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void try_pick(std::size_t pos, int extra) {
    ++nodes_;
    const std::size_t g = index_.push(SubsetMask(pool_[pos]));
    if (!finder_.find(index_, nullptr, g)) {
      members_ |= std::uint64_t{1} << pool_[pos];
      extend(pos + 1, extra - 1);
      members_ &= ~(std::uint64_t{1} << pool_[pos]);
    }
    index_.pop();
  }

  void extend(std::size_t start, int extra) {
    if (extra == 0) {
      record_if_saturating();
      return;
    }
    for (std::size_t pos = start; pos + static_cast<std::size_t>(extra) <= pool_.size(); ++pos) try_pick(pos, extra);
  }

  void record_if_saturating() {
    const std::uint64_t cube = std::uint64_t{1} << n_;
    for (std::uint64_t s = 0; s < cube; ++s) {
      if ((members_ >> s) & 1U) continue;
      const std::size_t g = index_.push(SubsetMask(s));
      const bool copy = finder_.find(index_, nullptr, g).has_value();
      index_.pop();
      if (!copy) return;
    }
    hits_.emplace_back(n_, std::vector<SubsetMask>(index_.sets().begin(), index_.sets().end()));
  }

  const CopyFinder& finder_;
  int n_;
  const std::vector<std::uint64_t>& pool_;
  ContainmentIndex index_;
  std::uint64_t members_ = 0;
  std::vector<SetFamily> hits_;
  std::uint64_t nodes_ = 0;
};

bool family_less(const SetFamily& a, const SetFamily& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_ground(int n) {
  if (n < 1 || n > kMaxOracleGround) {
    throw Error("oracle ground size must lie in [1, " + std::to_string(kMaxOracleGround) + "]");
  }
}

}  // namespace

std::vector<SubsetMask> forced_members(int n, const Poset& p, CopyMode mode) {
  std::vector<SubsetMask> out;
  if (mode != CopyMode::Induced || p.empty()) return out;
  if (!has_smallest(p)) out.emplace_back(0);
  if (!has_largest(p)) out.push_back(SubsetMask::full(n));
  return out;
}

std::vector<SetFamily> enumerate_saturating(int n, const Poset& p, CopyMode mode, int size, int threads,
                                            std::uint64_t* nodes) {
  check_ground(n);
  const std::uint64_t cube = std::uint64_t{1} << n;
  if (nodes) *nodes = 0;
  if (size < 0 || static_cast<std::uint64_t>(size) > cube) return {};
  const std::vector<SubsetMask> forced = forced_members(n, p, mode);
  const int extra = size - static_cast<int>(forced.size());
  if (extra < 0) return {};

  const CopyFinder finder(p, mode, false);
  {
    const ContainmentIndex seed(forced);
    if (finder.find(seed, nullptr, std::nullopt)) return {};
  }
  std::vector<std::uint64_t> pool;
  for (std::uint64_t s = 0; s < cube; ++s) {
    if (std::find(forced.begin(), forced.end(), SubsetMask(s)) == forced.end()) pool.push_back(s);
  }

  std::vector<SetFamily> hits;
  std::uint64_t total_nodes = 0;
  if (extra == 0) {
    Explorer ex(finder, n, forced, pool);
    ex.branch(0, 0);
    hits = std::move(ex.hits());
    total_nodes = ex.nodes();
  } else {
    const std::size_t branches =
        pool.size() >= static_cast<std::size_t>(extra) ? pool.size() - static_cast<std::size_t>(extra) + 1 : 0;
    const int workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(branches)));
    std::vector<std::vector<SetFamily>> per_worker(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> per_nodes(static_cast<std::size_t>(workers), 0);
    run_workers(workers, [&](int w, int nw) {
      Explorer ex(finder, n, forced, pool);
      for (std::size_t b = static_cast<std::size_t>(w); b < branches; b += static_cast<std::size_t>(nw)) {
        ex.branch(b, extra);
      }
      per_worker[w] = std::move(ex.hits());
      per_nodes[w] = ex.nodes();
    });
    for (int w = 0; w < workers; ++w) {
      for (auto& f : per_worker[w]) hits.push_back(std::move(f));
      total_nodes += per_nodes[w];
    }
  }
  std::sort(hits.begin(), hits.end(), family_less);
  if (nodes) *nodes = total_nodes;
  return hits;
}

OracleResult min_saturating(int n, const Poset& p, CopyMode mode, const OracleOptions& options) {
  check_ground(n);
  const int cube = 1 << n;
  OracleResult r;
  r.n = n;
  r.poset = p;
  r.mode = mode;
  r.forced = forced_members(n, p, mode);
  r.max_size = options.max_size > 0 ? std::min(options.max_size, cube) : cube;
  r.start_size = std::max(static_cast<int>(r.forced.size()), std::min(p.size() - 1, cube));
  for (int s = r.start_size; s <= r.max_size; ++s) {
    std::uint64_t nodes = 0;
    auto hits = enumerate_saturating(n, p, mode, s, options.threads, &nodes);
    r.nodes_explored += nodes;
    if (!hits.empty()) {
      r.minimum = s;
      if (options.witness_cap > 0 && hits.size() > options.witness_cap) {
        hits.resize(options.witness_cap);
        r.witnesses_truncated = true;
      }
      r.witnesses = std::move(hits);
      break;
    }
  }
  return r;
}

}  // namespace posat
