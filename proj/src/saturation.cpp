#include "posat/saturation.hpp"

#include <algorithm>
#include <limits>

#include "posat/parallel.hpp"

namespace posat {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Free: return "free";
    case Verdict::NotFree: return "not-free";
    case Verdict::Saturating: return "saturating";
    case Verdict::NotSaturating: return "not-saturating";
  }
  return "?";
}

std::string_view to_string(Boundedness b) {
  switch (b) {
    case Boundedness::UnboundedCertified: return "unbounded-certified";
    case Boundedness::BoundedCertified: return "bounded-certified";
    case Boundedness::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Full enumeration of 2^n candidates is refused above this ground size.
constexpr int kMaxEnumerationGround = 26;

SaturationReport blank_report(const SetFamily& fam, const Poset& p, CopyMode mode) {
  SaturationReport r;
  r.poset = p;
  r.mode = mode;
  r.n = fam.ground_size();
  r.family_size = fam.size();
  return r;
}

/// Freeness part shared by both checks; fills the NotFree fields.
bool check_free(const CopyFinder& finder, const ContainmentIndex& index, const HasseDiagram* hasse,
                SaturationReport& r) {
  SearchStats st;
  auto copy = finder.find(index, hasse, std::nullopt, &st);
  r.search_nodes += st.nodes;
  r.chain_path = finder.uses_chain_path();
  if (copy) {
    r.verdict = Verdict::NotFree;
    r.embedding = Embedding{std::move(*copy)};
    return false;
  }
  r.verdict = Verdict::Free;
  return true;
}

std::vector<std::uint64_t> saturation_candidates(const SetFamily& fam, std::optional<int> tail) {
  const int n = fam.ground_size();
  std::vector<std::uint64_t> out;
  if (tail) {
    const int m = *tail;
    if (m < 1 || m > n) throw Error("symmetric tail " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
    const std::uint64_t t = SubsetMask::range(m, n).bits();
    for (SubsetMask s : fam) {
      if ((s.bits() & t) != 0 && (s.bits() & t) != t) {
        throw Error("member " + to_string(s) + " is not constant on {" + std::to_string(m) + ".." +
                    std::to_string(n) + "}");
      }
    }
    if (m - 1 > kMaxEnumerationGround) throw Error("too many candidate heads to enumerate");
    for (std::uint64_t head = 0; head < (std::uint64_t{1} << (m - 1)); ++head) {
      for (int c = 0; c <= n - m + 1; ++c) {
        const std::uint64_t g = head | (SubsetMask::full(c).bits() << (m - 1));
        if (!fam.contains(SubsetMask(g))) out.push_back(g);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (n > kMaxEnumerationGround) {
    throw Error("full candidate enumeration over [" + std::to_string(n) + "] is too large; use a symmetric tail");
  }
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) {
    if (!fam.contains(SubsetMask(g))) out.push_back(g);
  }
  return out;
}

SaturationReport saturating_impl(const SetFamily& fam, const Poset& p, CopyMode mode, const SaturationOptions& options) {
  SaturationReport r = blank_report(fam, p, mode);
  const CopyFinder finder(p, mode, options.allow_chain_path);
  const ContainmentIndex index(fam.members());
  HasseDiagram hasse;
  if (finder.needs_hasse()) hasse = HasseDiagram::build(index);
  if (!check_free(finder, index, finder.needs_hasse() ? &hasse : nullptr, r)) return r;
  r.tail_used = options.symmetric_tail;

  const std::vector<std::uint64_t> candidates = saturation_candidates(fam, options.symmetric_tail);
  const int workers = std::max(1, std::min<int>(resolve_threads(options.threads),
                                                static_cast<int>(candidates.size() / 64 + 1)));
  struct Tally {
    std::uint64_t tested = 0;
    std::uint64_t copies = 0;
    std::uint64_t nodes = 0;
    std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
  };
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w, int nw) {
    ContainmentIndex local = index;
    HasseDiagram probe;
    Tally& t = tallies[w];
    SearchStats st;
    for (std::size_t c = static_cast<std::size_t>(w); c < candidates.size(); c += static_cast<std::size_t>(nw)) {
      const std::size_t g = local.push(SubsetMask(candidates[c]));
      const HasseDiagram* h = nullptr;
      if (finder.needs_hasse()) {
        probe.assign_extended(hasse, local);
        h = &probe;
      }
      const bool found = finder.find(local, h, g, &st).has_value();
      local.pop();
      ++t.tested;
      if (found) {
        ++t.copies;
      } else {
        t.first_failure = std::min(t.first_failure, candidates[c]);
      }
    }
    t.nodes = st.nodes;
  });

  std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
  for (const Tally& t : tallies) {
    r.candidates_tested += t.tested;
    r.copies_found += t.copies;
    r.search_nodes += t.nodes;
    first_failure = std::min(first_failure, t.first_failure);
  }
  if (first_failure != std::numeric_limits<std::uint64_t>::max()) {
    r.verdict = Verdict::NotSaturating;
    r.missing = SubsetMask(first_failure);
  } else {
    r.verdict = Verdict::Saturating;
  }
  return r;
}

}  // namespace

SaturationReport is_p_free(const SetFamily& fam, const Poset& p, CopyMode mode, const SaturationOptions& options) {
  SaturationReport r = blank_report(fam, p, mode);
  const CopyFinder finder(p, mode, options.allow_chain_path);
  const ContainmentIndex index(fam.members());
  check_free(finder, index, nullptr, r);
  if (options.cross_check && finder.uses_chain_path()) {
    SaturationReport plain = blank_report(fam, p, mode);
    check_free(CopyFinder(p, mode, false), index, nullptr, plain);
    r.cross_check_agrees = plain.verdict == r.verdict;
  }
  return r;
}

SaturationReport is_saturating(const SetFamily& fam, const Poset& p, CopyMode mode, const SaturationOptions& options) {
  SaturationReport r = saturating_impl(fam, p, mode, options);
  if (options.cross_check) {
    SaturationOptions plain = options;
    plain.symmetric_tail.reset();
    plain.allow_chain_path = false;
    plain.cross_check = false;
    const SaturationReport full = saturating_impl(fam, p, mode, plain);
    r.cross_check_agrees = full.verdict == r.verdict && full.missing == r.missing &&
                           full.embedding.has_value() == r.embedding.has_value();
  }
  return r;
}

GreedyTrace greedy_colex(int n, const Poset& p, CopyMode mode) {
  if (n < 1 || n > kMaxGreedyGround) {
    throw Error("greedy ground size must lie in [1, " + std::to_string(kMaxGreedyGround) + "]");
  }
  if (p.empty()) throw Error("greedy process needs a non-empty poset");
  const CopyFinder finder(p, mode);
  ContainmentIndex index;
  HasseDiagram hasse;
  HasseDiagram probe;
  SearchStats st;
  GreedyTrace trace;
  trace.n = n;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  trace.f_added.assign(steps, false);
  trace.g_added.assign(steps, false);

  auto try_add = [&](SubsetMask s) {
    const std::size_t g = index.push(s);
    const HasseDiagram* h = nullptr;
    if (finder.needs_hasse()) {
      probe.assign_extended(hasse, index);
      h = &probe;
    }
    if (finder.find(index, h, g, &st)) {
      index.pop();
      return false;
    }
    if (finder.needs_hasse()) std::swap(hasse, probe);
    return true;
  };

  for (std::uint64_t i = 1; i <= steps; ++i) {
    const ColexPair pair = colex_unrank(i, n);
    if (try_add(pair.low)) {
      trace.f_added[i - 1] = true;
      trace.stabilization = i;
    }
    if (try_add(pair.high)) {
      trace.g_added[i - 1] = true;
      trace.stabilization = i;
    }
  }
  trace.family = SetFamily(n, std::vector<SubsetMask>(index.sets().begin(), index.sets().end()));
  trace.search_nodes = st.nodes;
  return trace;
}

SetFamily replay(const GreedyTrace& trace) {
  SetFamily out(trace.n);
  for (std::size_t i = 0; i < trace.f_added.size(); ++i) {
    const ColexPair pair = colex_unrank(i + 1, trace.n);
    if (trace.f_added[i]) out.insert(pair.low);
    if (trace.g_added[i]) out.insert(pair.high);
  }
  return out;
}

namespace {

std::optional<ConstantBound> certificate_from(GreedyTrace& trace, int m) {
  const AtomPartition atoms = atom_partition(trace.family);
  int inflate_from = 0;
  for (SubsetMask b : atoms.blocks) {
    if (b.size() > 1) inflate_from = std::max(inflate_from, b.max_element());
  }
  if (inflate_from == 0) return std::nullopt;
  ConstantBound c;
  c.bound = trace.family.size();
  c.family = trace.family;
  c.m = m;
  c.inflate_from = inflate_from;
  return c;
}

}  // namespace

std::optional<ConstantBound> certify_constant_bound(const Poset& p, CopyMode mode, int m) {
  GreedyTrace trace = greedy_colex(m, p, mode);
  return certificate_from(trace, m);
}

BoundSweep sweep_constant_bound(const Poset& p, CopyMode mode, int m_from, int m_to) {
  BoundSweep sweep;
  for (int m = std::max(m_from, 1); m <= m_to; ++m) {
    GreedyTrace trace = greedy_colex(m, p, mode);
    sweep.greedy_sizes.emplace_back(m, trace.family.size());
    if (auto cert = certificate_from(trace, m)) {
      sweep.certificate = std::move(cert);
      break;
    }
  }
  return sweep;
}

SetFamily inflate_family(const SetFamily& fam, int x, int n) {
  const int m = fam.ground_size();
  if (n < m) throw Error("inflation target " + std::to_string(n) + " below ground size " + std::to_string(m));
  if (n > kMaxGroundSize) throw Error("inflation target outside [0, 63]");
  if (x < 1 || x > m) throw Error("inflation element outside the ground set");
  const AtomPartition atoms = atom_partition(fam);
  const auto block = std::find_if(atoms.blocks.begin(), atoms.blocks.end(), [x](SubsetMask b) { return b.has(x); });
  if (block == atoms.blocks.end() || block->size() < 2) {
    throw Error("element " + std::to_string(x) + " lies in a singleton atom");
  }
  const SubsetMask extra = SubsetMask::range(m + 1, n);
  std::vector<SubsetMask> members;
  members.reserve(fam.size());
  for (SubsetMask s : fam) members.push_back(s.has(x) ? (s | extra) : s);
  return SetFamily(n, std::move(members));
}

Classification classify(const Poset& p, CopyMode mode, int estar_cap, int greedy_cap) {
  if (p.empty()) throw Error("cannot classify the empty poset");
  Classification c;
  if (mode == CopyMode::NonInduced) {
    c.kind = Boundedness::BoundedCertified;
    c.reason = "non-induced saturation numbers are at most 2^(|P|-2)";
    ConstantBound b;
    b.bound = p.size() < 2 ? 0 : std::size_t{1} << (p.size() - 2);
    c.bound = std::move(b);
    return c;
  }

  for (bool use_dual : {false, true}) {
    const Poset q = use_dual ? dual(p) : p;
    if (auto d = uctp_top_chain_decomposition(q)) {
      c.kind = Boundedness::UnboundedCertified;
      c.reason = use_dual ? "dual has UCTP with a top chain; saturating families separate"
                          : "UCTP with a top chain; saturating families separate";
      c.via_dual = use_dual;
      c.normalized = normalize(*d, q);
      c.decomposition = std::move(d);
      return c;
    }
  }

  if (p.size() == 4 && are_isomorphic(p, repeat(2, chain(2)))) {
    c.kind = Boundedness::UnboundedCertified;
    c.reason = "induced 2C2-saturating families contain a maximal chain";
    return c;
  }

  BoundSweep sweep = sweep_constant_bound(p, mode, p.size(), greedy_cap);
  c.greedy_sizes = sweep.greedy_sizes;
  if (sweep.certificate) {
    c.kind = Boundedness::BoundedCertified;
    c.reason = "greedy colex output on [" + std::to_string(sweep.certificate->m) + "] is not separating";
    c.bound = std::move(sweep.certificate);
    return c;
  }

  const auto components = connected_components(p);
  for (const auto& comp : components) {
    const int k = static_cast<int>(comp.size());
    if (k < 2 || comp.size() == static_cast<std::size_t>(p.size())) continue;
    const Poset piece = induced_subposet(p, comp);
    if (piece.relation_count() != static_cast<std::size_t>(k * (k - 1) / 2)) continue;
    std::vector<int> rest;
    for (int e = 0; e < p.size(); ++e) {
      if (std::find(comp.begin(), comp.end(), e) == comp.end()) rest.push_back(e);
    }
    const Poset remainder = induced_subposet(p, rest);
    const EstarEstimate est = estar_estimate(remainder, CopyMode::Induced, std::max(estar_cap, remainder.size()));
    c.estar_evidence.emplace_back(k, est);
    if (est.certified_upper && *est.certified_upper <= k - 2) {
      c.kind = Boundedness::BoundedCertified;
      c.reason = "a C" + std::to_string(k) + " component beside a remainder with e* <= " +
                 std::to_string(*est.certified_upper);
      c.bound_exists_not_computed = true;
      c.chain_component_length = k;
      c.estar = est;
      return c;
    }
  }

  c.kind = Boundedness::Unknown;
  c.reason = "no certificate found";
  return c;
}

}  // namespace posat
