#include "posat/search.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace posat {

namespace {

using Word = std::uint64_t;

inline bool test_bit(const Word* row, std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Word* row, std::size_t i) { row[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(Word* row, std::size_t i) { row[i >> 6] &= ~(Word{1} << (i & 63)); }

inline void fill_prefix(Word* row, std::size_t words, std::size_t count) {
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t lo = w * 64;
    if (count >= lo + 64) {
      row[w] = ~Word{0};
    } else if (count > lo) {
      row[w] = (Word{1} << (count - lo)) - 1;
    } else {
      row[w] = 0;
    }
  }
}

/// Clears bits 0..x inclusive.
inline void clear_through(Word* row, std::size_t x) {
  const std::size_t w = x >> 6;
  for (std::size_t i = 0; i < w; ++i) row[i] = 0;
  const std::size_t b = x & 63;
  row[w] &= b == 63 ? 0 : ~((Word{2} << b) - 1);
}

/// Clears bits x..end.
inline void clear_from(Word* row, std::size_t words, std::size_t x) {
  const std::size_t w = x >> 6;
  row[w] &= (Word{1} << (x & 63)) - 1;
  for (std::size_t i = w + 1; i < words; ++i) row[i] = 0;
}

inline std::size_t popcount(const Word* row, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(row[w]));
  return c;
}

inline bool none(const Word* row, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (row[w]) return false;
  }
  return true;
}

template <class F>
inline bool for_each_bit(const Word* row, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    for (Word m = row[w]; m; m &= m - 1) {
      if (f(w * 64 + static_cast<std::size_t>(std::countr_zero(m)))) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(CopyMode mode) {
  return mode == CopyMode::Induced ? "induced" : "non-induced";
}

CopyMode parse_copy_mode(std::string_view text) {
  if (text == "induced" || text == "strong") return CopyMode::Induced;
  if (text == "non-induced" || text == "noninduced" || text == "weak") return CopyMode::NonInduced;
  throw Error("unknown copy mode '" + std::string(text) + "' (expected induced or non-induced)");
}

// ---------------------------------------------------------------------------
// ContainmentIndex

ContainmentIndex::ContainmentIndex(std::span<const SubsetMask> sets) {
  // Leave room for one more set so a push/pop probe never relayouts rows.
  while (words_ * 64 <= sets.size()) words_ *= 2;
  sets_.reserve(sets.size());
  sup_.reserve(sets.size() * words_);
  sub_.reserve(sets.size() * words_);
  for (SubsetMask s : sets) push(s);
}

void ContainmentIndex::widen() {
  const std::size_t new_words = words_ * 2;
  std::vector<Word> sup(sets_.size() * new_words, 0);
  std::vector<Word> sub(sets_.size() * new_words, 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    std::copy_n(sup_.data() + i * words_, words_, sup.data() + i * new_words);
    std::copy_n(sub_.data() + i * words_, words_, sub.data() + i * new_words);
  }
  sup_ = std::move(sup);
  sub_ = std::move(sub);
  words_ = new_words;
}

std::size_t ContainmentIndex::push(SubsetMask s) {
  const std::size_t j = sets_.size();
  if (j == words_ * 64) widen();
  sets_.push_back(s);
  sup_.resize(sets_.size() * words_, 0);
  sub_.resize(sets_.size() * words_, 0);
  Word* sup_j = sup_.data() + j * words_;
  Word* sub_j = sub_.data() + j * words_;
  const std::uint64_t b = s.bits();
  for (std::size_t i = 0; i < j; ++i) {
    const std::uint64_t a = sets_[i].bits();
    assert(a != b);
    if ((a & ~b) == 0) {
      set_bit(sub_j, i);
      set_bit(sup_.data() + i * words_, j);
    } else if ((b & ~a) == 0) {
      set_bit(sup_j, i);
      set_bit(sub_.data() + i * words_, j);
    }
  }
  return j;
}

void ContainmentIndex::pop() {
  const std::size_t j = sets_.size() - 1;
  for_each_bit(sub_.data() + j * words_, words_, [&](std::size_t i) {
    clear_bit(sup_.data() + i * words_, j);
    return false;
  });
  for_each_bit(sup_.data() + j * words_, words_, [&](std::size_t i) {
    clear_bit(sub_.data() + i * words_, j);
    return false;
  });
  sets_.pop_back();
  sup_.resize(sets_.size() * words_);
  sub_.resize(sets_.size() * words_);
}

// ---------------------------------------------------------------------------
// HasseDiagram

HasseDiagram HasseDiagram::build(const ContainmentIndex& index) {
  HasseDiagram h;
  h.size_ = index.size();
  h.words_ = index.words();
  const std::size_t W = h.words_;
  h.up_.assign(h.size_ * W, 0);
  h.down_.assign(h.size_ * W, 0);
  std::vector<Word> reach(W);
  for (std::size_t i = 0; i < h.size_; ++i) {
    std::fill(reach.begin(), reach.end(), 0);
    for_each_bit(index.supersets(i), W, [&](std::size_t j) {
      const Word* r = index.supersets(j);
      for (std::size_t w = 0; w < W; ++w) reach[w] |= r[w];
      return false;
    });
    for (std::size_t w = 0; w < W; ++w) h.up_[i * W + w] = index.supersets(i)[w] & ~reach[w];
    std::fill(reach.begin(), reach.end(), 0);
    for_each_bit(index.subsets(i), W, [&](std::size_t j) {
      const Word* r = index.subsets(j);
      for (std::size_t w = 0; w < W; ++w) reach[w] |= r[w];
      return false;
    });
    for (std::size_t w = 0; w < W; ++w) h.down_[i * W + w] = index.subsets(i)[w] & ~reach[w];
  }
  return h;
}

void HasseDiagram::assign_extended(const HasseDiagram& base, const ContainmentIndex& index) {
  if (base.size_ + 1 != index.size()) {
    *this = build(index);
    return;
  }
  const std::size_t W = index.words();
  const std::size_t g = base.size_;
  size_ = index.size();
  words_ = W;
  up_.assign(size_ * W, 0);
  down_.assign(size_ * W, 0);
  const std::size_t copy_words = std::min(W, base.words_);
  for (std::size_t i = 0; i < g; ++i) {
    std::copy_n(base.up_.data() + i * base.words_, copy_words, up_.data() + i * W);
    std::copy_n(base.down_.data() + i * base.words_, copy_words, down_.data() + i * W);
  }
  Word* up_g = up_.data() + g * W;
  Word* down_g = down_.data() + g * W;
  std::fill(up_g, up_g + W, 0);
  std::fill(down_g, down_g + W, 0);
  const Word* sub_g = index.subsets(g);
  const Word* sup_g = index.supersets(g);
  auto disjoint = [W](const Word* a, const Word* b) {
    for (std::size_t w = 0; w < W; ++w) {
      if (a[w] & b[w]) return false;
    }
    return true;
  };
  for_each_bit(sub_g, W, [&](std::size_t i) {
    Word* row = up_.data() + i * W;
    for (std::size_t w = 0; w < W; ++w) row[w] &= ~sup_g[w];
    if (disjoint(index.supersets(i), sub_g)) {
      set_bit(row, g);
      set_bit(down_g, i);
    }
    return false;
  });
  for_each_bit(sup_g, W, [&](std::size_t j) {
    Word* row = down_.data() + j * W;
    for (std::size_t w = 0; w < W; ++w) row[w] &= ~sub_g[w];
    if (disjoint(index.subsets(j), sup_g)) {
      set_bit(row, g);
      set_bit(up_g, j);
    }
    return false;
  });
}

// ---------------------------------------------------------------------------
// CopyFinder

CopyFinder::CopyFinder(const Poset& p, CopyMode mode, bool allow_chain_path)
    : poset_(p), mode_(mode) {
  if (allow_chain_path) chains_ = chain_components(p);

  components_ = connected_components(p);
  component_of_.assign(static_cast<std::size_t>(p.size()), 0);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (int e : components_[c]) component_of_[e] = static_cast<int>(c);
  }
  class_of_component_.assign(components_.size(), -1);
  rep_of_component_.assign(components_.size(), -1);
  std::vector<Poset> shapes;
  for (const auto& comp : components_) shapes.push_back(induced_subposet(p, comp));
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (class_of_component_[c] >= 0) continue;
    class_of_component_[c] = static_cast<int>(classes_.size());
    rep_of_component_[c] = components_[c][0];
    classes_.push_back({static_cast<int>(c)});
    if (shapes[c].size() > kMaxIsomorphismSize) continue;
    for (std::size_t d = c + 1; d < components_.size(); ++d) {
      if (class_of_component_[d] >= 0 || shapes[d].size() != shapes[c].size()) continue;
      if (auto iso = find_isomorphism(shapes[c], shapes[d])) {
        class_of_component_[d] = class_of_component_[c];
        rep_of_component_[d] = components_[d][(*iso)[0]];
        classes_.back().push_back(static_cast<int>(d));
      }
    }
  }
}

std::optional<std::vector<std::size_t>> CopyFinder::find(const ContainmentIndex& index,
                                                         const HasseDiagram* hasse,
                                                         std::optional<std::size_t> anchor,
                                                         SearchStats* stats) const {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  if (anchor && *anchor >= index.size()) throw Error("anchor index out of range");
  if (poset_.empty()) {
    if (anchor) return std::nullopt;
    return std::vector<std::size_t>{};
  }
  if (index.size() < static_cast<std::size_t>(poset_.size())) return std::nullopt;
  if (chains_) return find_chains(index, hasse, anchor, st);
  return find_general(index, anchor, st);
}

namespace {

enum class Rel : std::uint8_t { Above, Below, Incomparable };

struct GeneralStep {
  std::vector<std::pair<int, Rel>> rels;         // (earlier position, relation of this to it)
  std::vector<std::pair<int, int>> order_bounds;  // (earlier position, +1: greater / -1: smaller)
};

class GeneralDfs {
 public:
  GeneralDfs(const ContainmentIndex& index, std::vector<GeneralStep> steps,
             std::optional<std::size_t> anchor, SearchStats& stats)
      : index_(index),
        steps_(std::move(steps)),
        anchor_(anchor),
        stats_(stats),
        W_(index.words()),
        cand_(steps_.size() * W_),
        used_(W_, 0),
        img_(steps_.size(), 0) {}

  bool run() { return dfs(0); }
  const std::vector<std::size_t>& images() const { return img_; }

 private:
  bool dfs(std::size_t t) {
    ++stats_.nodes;
    if (t == steps_.size()) return true;
    Word* c = cand_.data() + t * W_;
    if (t == 0 && anchor_) {
      std::fill(c, c + W_, 0);
      set_bit(c, *anchor_);
    } else {
      fill_prefix(c, W_, index_.size());
      for (std::size_t w = 0; w < W_; ++w) c[w] &= ~used_[w];
      for (auto [pos, rel] : steps_[t].rels) {
        const std::size_t x = img_[pos];
        if (rel == Rel::Above) {
          const Word* r = index_.supersets(x);
          for (std::size_t w = 0; w < W_; ++w) c[w] &= r[w];
        } else if (rel == Rel::Below) {
          const Word* r = index_.subsets(x);
          for (std::size_t w = 0; w < W_; ++w) c[w] &= r[w];
        } else {
          const Word* a = index_.supersets(x);
          const Word* b = index_.subsets(x);
          for (std::size_t w = 0; w < W_; ++w) c[w] &= ~(a[w] | b[w]);
        }
      }
      for (auto [pos, dir] : steps_[t].order_bounds) {
        if (dir > 0) {
          clear_through(c, img_[pos]);
        } else {
          clear_from(c, W_, img_[pos]);
        }
      }
    }
    return for_each_bit(c, W_, [&](std::size_t b) {
      img_[t] = b;
      set_bit(used_.data(), b);
      const bool found = dfs(t + 1);
      clear_bit(used_.data(), b);
      return found;
    });
  }

  const ContainmentIndex& index_;
  std::vector<GeneralStep> steps_;
  std::optional<std::size_t> anchor_;
  SearchStats& stats_;
  std::size_t W_;
  std::vector<Word> cand_;
  std::vector<Word> used_;
  std::vector<std::size_t> img_;
};

}  // namespace

std::optional<std::vector<std::size_t>> CopyFinder::find_general(const ContainmentIndex& index,
                                                                 std::optional<std::size_t> anchor,
                                                                 SearchStats& stats) const {
  const int k = poset_.size();
  std::vector<int> anchor_elements;
  if (anchor) {
    for (int e = 0; e < k; ++e) {
      const int c = component_of_[e];
      if (classes_[class_of_component_[c]].front() == c) anchor_elements.push_back(e);
    }
  } else {
    anchor_elements.push_back(-1);
  }

  for (int a : anchor_elements) {
    // Connectivity-greedy order: prefer elements related to many placed ones.
    std::vector<int> order;
    ElementMask placed = 0;
    if (a >= 0) {
      order.push_back(a);
      placed |= ElementMask{1} << a;
    }
    while (static_cast<int>(order.size()) < k) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int q = 0; q < k; ++q) {
        if ((placed >> q) & 1U) continue;
        const ElementMask cmp = poset_.comparable_to(q);
        const std::pair<int, int> key{std::popcount(cmp & placed), std::popcount(cmp)};
        if (key > best_key) {
          best_key = key;
          best = q;
        }
      }
      order.push_back(best);
      placed |= ElementMask{1} << best;
    }
    std::vector<int> pos_of(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pos_of[order[t]] = t;

    std::vector<GeneralStep> steps(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
      const int q = order[t];
      std::vector<std::pair<int, Rel>> comparables;
      std::vector<std::pair<int, Rel>> incomparables;
      for (int j = 0; j < t; ++j) {
        const int p = order[j];
        if (poset_.less(p, q)) {
          comparables.emplace_back(j, Rel::Above);
        } else if (poset_.less(q, p)) {
          comparables.emplace_back(j, Rel::Below);
        } else if (mode_ == CopyMode::Induced) {
          incomparables.emplace_back(j, Rel::Incomparable);
        }
      }
      steps[t].rels = std::move(comparables);
      steps[t].rels.insert(steps[t].rels.end(), incomparables.begin(), incomparables.end());
    }
    // Symmetry: images of representatives increase along each class.
    for (const auto& cls : classes_) {
      std::size_t start = 0;
      if (a >= 0 && component_of_[a] == cls.front()) start = 1;
      for (std::size_t i = start; i + 1 < cls.size(); ++i) {
        const int lo = rep_of_component_[cls[i]];
        const int hi = rep_of_component_[cls[i + 1]];
        if (pos_of[hi] > pos_of[lo]) {
          steps[pos_of[hi]].order_bounds.emplace_back(pos_of[lo], +1);
        } else {
          steps[pos_of[lo]].order_bounds.emplace_back(pos_of[hi], -1);
        }
      }
    }

    GeneralDfs dfs(index, std::move(steps), anchor, stats);
    if (dfs.run()) {
      std::vector<std::size_t> image(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t) image[order[t]] = dfs.images()[t];
      return image;
    }
  }
  return std::nullopt;
}

namespace {

enum class SlotKind : std::uint8_t { Fixed, Fresh, Up, Down };

struct ChainSlot {
  int comp = 0;        // index into the component order of this plan
  int pos = 0;         // position within the chain, 0 = bottom
  SlotKind kind = SlotKind::Fresh;
  int from = -1;       // neighbouring slot for Up/Down
  int after = -1;      // Fresh: slot whose image must be smaller
  bool last_of_comp = false;
};

class ChainDfs {
 public:
  ChainDfs(const ContainmentIndex& index, const Word* up_rows, const Word* down_rows, bool induced,
           std::vector<ChainSlot> slots, int comps, std::optional<std::size_t> anchor, SearchStats& stats)
      : index_(index),
        up_rows_(up_rows),
        down_rows_(down_rows),
        induced_(induced),
        slots_(std::move(slots)),
        anchor_(anchor),
        stats_(stats),
        W_(index.words()),
        cand_(slots_.size() * W_),
        allowed_((static_cast<std::size_t>(comps) + 1) * W_, 0),
        used_(W_, 0),
        img_(slots_.size(), 0),
        comp_start_(static_cast<std::size_t>(comps), 0) {
    fill_prefix(allowed_.data(), W_, index.size());
    for (std::size_t s = slots_.size(); s-- > 0;) comp_start_[slots_[s].comp] = s;
  }

  bool run() { return dfs(0); }
  const std::vector<std::size_t>& images() const { return img_; }

 private:
  bool dfs(std::size_t s) {
    ++stats_.nodes;
    if (s == slots_.size()) return true;
    const ChainSlot& slot = slots_[s];
    const Word* allowed = allowed_.data() + static_cast<std::size_t>(slot.comp) * W_;
    Word* c = cand_.data() + s * W_;
    switch (slot.kind) {
      case SlotKind::Fixed:
        std::fill(c, c + W_, 0);
        if (test_bit(allowed, *anchor_)) set_bit(c, *anchor_);
        break;
      case SlotKind::Fresh:
        for (std::size_t w = 0; w < W_; ++w) c[w] = allowed[w] & ~used_[w];
        if (slot.after >= 0) clear_through(c, img_[slot.after]);
        break;
      case SlotKind::Up:
      case SlotKind::Down: {
        const Word* adj = (slot.kind == SlotKind::Up ? up_rows_ : down_rows_) + img_[slot.from] * W_;
        for (std::size_t w = 0; w < W_; ++w) c[w] = adj[w] & allowed[w] & ~used_[w];
        break;
      }
    }
    return for_each_bit(c, W_, [&](std::size_t b) {
      img_[s] = b;
      set_bit(used_.data(), b);
      bool found = false;
      if (slot.last_of_comp && s + 1 < slots_.size()) {
        Word* next = allowed_.data() + static_cast<std::size_t>(slot.comp + 1) * W_;
        for (std::size_t w = 0; w < W_; ++w) next[w] = allowed[w] & ~used_[w];
        if (induced_) {
          for (std::size_t t = comp_start_[slot.comp]; t <= s; ++t) {
            const Word* a = index_.supersets(img_[t]);
            const Word* d = index_.subsets(img_[t]);
            for (std::size_t w = 0; w < W_; ++w) next[w] &= ~(a[w] | d[w]);
          }
        }
        if (popcount(next, W_) >= slots_.size() - s - 1) found = dfs(s + 1);
      } else {
        found = dfs(s + 1);
      }
      clear_bit(used_.data(), b);
      return found;
    });
  }

  const ContainmentIndex& index_;
  const Word* up_rows_;
  const Word* down_rows_;
  bool induced_;
  std::vector<ChainSlot> slots_;
  std::optional<std::size_t> anchor_;
  SearchStats& stats_;
  std::size_t W_;
  std::vector<Word> cand_;
  std::vector<Word> allowed_;
  std::vector<Word> used_;
  std::vector<std::size_t> img_;
  std::vector<std::size_t> comp_start_;
};

}  // namespace

std::optional<std::vector<std::size_t>> CopyFinder::find_chains(const ContainmentIndex& index,
                                                                const HasseDiagram* hasse,
                                                                std::optional<std::size_t> anchor,
                                                                SearchStats& stats) const {
  const auto& chains = *chains_;
  const bool induced = mode_ == CopyMode::Induced;
  HasseDiagram local;
  const Word* up_rows = nullptr;
  const Word* down_rows = nullptr;
  if (induced) {
    if (!hasse || hasse->size() != index.size() || hasse->words() != index.words()) {
      local = HasseDiagram::build(index);
      hasse = &local;
    }
    up_rows = hasse->up(0);
    down_rows = hasse->down(0);
  } else {
    up_rows = index.supersets(0);
    down_rows = index.subsets(0);
  }

  // (component, position) choices for the anchor: first chain of each length.
  std::vector<std::pair<int, int>> anchor_choices;
  if (anchor) {
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (c > 0 && chains[c].size() == chains[c - 1].size()) continue;
      for (std::size_t j = 0; j < chains[c].size(); ++j) {
        anchor_choices.emplace_back(static_cast<int>(c), static_cast<int>(j));
      }
    }
  } else {
    anchor_choices.emplace_back(-1, -1);
  }

  for (auto [anchor_comp, anchor_pos] : anchor_choices) {
    std::vector<int> comp_order;
    if (anchor_comp >= 0) comp_order.push_back(anchor_comp);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (static_cast<int>(c) != anchor_comp) comp_order.push_back(static_cast<int>(c));
    }
    std::vector<ChainSlot> slots;
    std::vector<std::pair<int, int>> slot_owner;  // (chain index, position)
    int previous_bottom = -1;
    std::size_t previous_len = 0;
    for (std::size_t ci = 0; ci < comp_order.size(); ++ci) {
      const int c = comp_order[ci];
      const int len = static_cast<int>(chains[c].size());
      auto add = [&](int pos, SlotKind kind, int from, int after) {
        ChainSlot s;
        s.comp = static_cast<int>(ci);
        s.pos = pos;
        s.kind = kind;
        s.from = from;
        s.after = after;
        slots.push_back(s);
        slot_owner.emplace_back(c, pos);
        return static_cast<int>(slots.size()) - 1;
      };
      if (c == anchor_comp) {
        const int fixed = add(anchor_pos, SlotKind::Fixed, -1, -1);
        int prev = fixed;
        for (int pos = anchor_pos - 1; pos >= 0; --pos) prev = add(pos, SlotKind::Down, prev, -1);
        prev = fixed;
        for (int pos = anchor_pos + 1; pos < len; ++pos) prev = add(pos, SlotKind::Up, prev, -1);
      } else {
        const int after = (previous_bottom >= 0 && previous_len == static_cast<std::size_t>(len)) ? previous_bottom : -1;
        const int bottom = add(0, SlotKind::Fresh, -1, after);
        previous_bottom = bottom;
        previous_len = static_cast<std::size_t>(len);
        int prev = bottom;
        for (int pos = 1; pos < len; ++pos) prev = add(pos, SlotKind::Up, prev, -1);
      }
      slots.back().last_of_comp = true;
    }

    ChainDfs dfs(index, up_rows, down_rows, induced, std::move(slots), static_cast<int>(comp_order.size()),
                 anchor, stats);
    if (dfs.run()) {
      std::vector<std::size_t> image(static_cast<std::size_t>(poset_.size()));
      for (std::size_t s = 0; s < slot_owner.size(); ++s) {
        auto [c, pos] = slot_owner[s];
        image[chains[c][pos]] = dfs.images()[s];
      }
      return image;
    }
  }
  return std::nullopt;
}

}  // namespace posat
