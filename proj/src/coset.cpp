#include "tanglelab/coset.hpp"

#include <cstdlib>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tanglelab/errors.hpp"

namespace tanglelab {

namespace {

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi)};
}

GroupWord power(int letter, int k) { return GroupWord(static_cast<std::size_t>(k), letter); }

int column(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

void check_word(const GroupWord& w, int generators) {
  for (int l : w) {
    if (l == 0 || std::abs(l) > generators) throw InputError("letter " + std::to_string(l) + " out of range");
  }
}

}  // namespace

Presentation braid_presentation(int n, int k) {
  if (n < 2) throw InputError("braid group needs n >= 2");
  if (k < 2) throw InputError("torsion exponent must be at least 2");
  Presentation pres;
  pres.generators = n - 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j - i >= 2) {
        pres.relators.push_back({i, j, -i, -j});
      } else {
        pres.relators.push_back({i, j, i, -j, -i, -j});
      }
    }
  }
  for (int i = 1; i < n; ++i) pres.relators.push_back(power(i, k));
  return pres;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Presentation pres;
  bool have_gens = false;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_gens) {
      std::istringstream ls(body);
      std::string kw;
      int g = 0;
      std::string extra;
      if (!(ls >> kw >> g) || kw != "gens" || g < 1 || (ls >> extra)) {
        throw ParseError("expected 'gens <n>' on line " + std::to_string(line_no), 0);
      }
      pres.generators = g;
      have_gens = true;
      continue;
    }
    GroupWord w = parse_group_word(body);
    check_word(w, pres.generators);
    w = cyclic_reduce(w);
    if (!w.empty()) pres.relators.push_back(std::move(w));
  }
  if (!have_gens) throw ParseError("presentation needs a 'gens <n>' line", 0);
  return pres;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

CosetTable::CosetTable(int generators, std::vector<int> entries)
    : generators_(generators), entries_(std::move(entries)) {
  const int cols = 2 * generators_;
  if (generators_ < 1 || entries_.size() % static_cast<std::size_t>(cols) != 0) {
    throw InputError("malformed coset table");
  }
  for (int e : entries_) {
    if (e < 0 || e >= size()) throw InputError("incomplete coset table");
  }
  // Shortest words by breadth-first search in column order.
  words_.assign(static_cast<std::size_t>(size()), {});
  std::vector<char> seen(static_cast<std::size_t>(size()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int x = 0; x < cols; ++x) {
      const int d = entries_[static_cast<std::size_t>(c) * cols + x];
      if (seen[d]) continue;
      seen[d] = 1;
      words_[d] = words_[c];
      words_[d].push_back(x % 2 == 0 ? x / 2 + 1 : -(x / 2 + 1));
      queue.push_back(d);
    }
  }
}

int CosetTable::act(int coset, int letter) const {
  if (letter == 0 || std::abs(letter) > generators_) throw InputError("letter out of range");
  return entries_[static_cast<std::size_t>(coset) * 2 * generators_ + column(letter)];
}

int CosetTable::trace(int coset, const GroupWord& w) const {
  for (int l : w) coset = act(coset, l);
  return coset;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::size_t max_cosets, Strategy strategy)
      : cols_(2 * pres.generators), cap_(max_cosets), strategy_(strategy) {
    if (pres.generators < 1) throw InputError("presentation needs at least one generator");
    if (max_cosets < 1) throw InputError("coset budget must be positive");
    for (const auto& r : pres.relators) {
      check_word(r, pres.generators);
      GroupWord w = cyclic_reduce(r);
      if (w.empty()) continue;
      std::vector<int> cw;
      for (int l : w) cw.push_back(column(l));
      max_len_ = std::max(max_len_, cw.size());
      relators_.push_back(cw);
    }
    conjugates_.assign(static_cast<std::size_t>(cols_), {});
    for (const auto& r : relators_) {
      for (const auto& w : {r, inverse_columns(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
          conjugates_[static_cast<std::size_t>(rot[0])].push_back(std::move(rot));
        }
      }
    }
    allocate();
  }

  CosetTable run() {
    if (strategy_ == Strategy::hlt) {
      run_hlt();
    } else {
      run_felsch();
    }
    return finish();
  }

 private:
  static std::vector<int> inverse_columns(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& x : out) x ^= 1;
    return out;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool live(int c) const { return parent_[c] == c; }

  int allocate() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    ++live_count_;
    return c;
  }

  int define(int c, int x) {
    const int d = allocate();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    if (strategy_ == Strategy::felsch) deductions_.emplace_back(c, x);
    return d;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const int keep = std::min(a, b), drop = std::max(a, b);
    parent_[drop] = keep;
    --live_count_;
    queue.push_back(drop);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        if (at(f, x ^ 1) == e) at(f, x ^ 1) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
          if (strategy_ == Strategy::felsch) deductions_.emplace_back(e1, x);
        }
      }
    }
  }

  // Traces w from both ends of c. With fill, gaps longer than one are
  // bridged by new cosets; otherwise they are left alone.
  void scan(int c, const std::vector<int>& w, bool fill) {
    int f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1) >= 0) b = at(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        if (strategy_ == Strategy::felsch) deductions_.emplace_back(f, w[i]);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& w : conjugates_[static_cast<std::size_t>(x)]) {
        if (!live(c)) break;
        scan(c, w, false);
      }
      if (!live(c) || at(c, x) < 0) continue;
      const int d = at(c, x);
      for (const auto& w : conjugates_[static_cast<std::size_t>(x ^ 1)]) {
        if (!live(d)) break;
        scan(d, w, false);
      }
    }
  }

  // Renumbers live cosets densely, keeping their order; `cursor` follows.
  void compact(int& cursor) {
    std::vector<int> map(parent_.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (live(c)) map[c] = n++;
    }
    std::vector<int> table(static_cast<std::size_t>(n) * cols_, -1);
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = at(c, x);
        table[static_cast<std::size_t>(map[c]) * cols_ + x] = d < 0 ? -1 : map[rep(d)];
      }
    }
    cursor_moved_ = false;
    while (cursor < static_cast<int>(parent_.size()) && !live(cursor)) {
      ++cursor;
      cursor_moved_ = true;
    }
    cursor = cursor >= static_cast<int>(parent_.size()) ? n : map[cursor];
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    live_count_ = static_cast<std::size_t>(n);
  }

  void ensure_room(std::size_t needed, int& cursor) {
    if (parent_.size() + needed <= cap_) return;
    compact(cursor);
    if (parent_.size() + needed <= cap_) return;
    if (strategy_ == Strategy::hlt) {
      // Lookahead: scan everything without defining new cosets.
      for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
        for (const auto& w : relators_) {
          if (!live(c)) break;
          scan(c, w, false);
        }
      }
      compact(cursor);
      if (parent_.size() + needed <= cap_) return;
    }
    throw BudgetExceeded("coset enumeration needs more than " + std::to_string(cap_) + " cosets");
  }

  void run_hlt() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (std::size_t r = 0; r < relators_.size() && live(c); ++r) {
        ensure_room(max_len_, c);
        if (cursor_moved_) {
          // The coset we were scanning collapsed; start over on its successor.
          cursor_moved_ = false;
          r = static_cast<std::size_t>(-1);
          continue;
        }
        scan(c, relators_[r], true);
      }
      for (int x = 0; x < cols_ && live(c); ++x) {
        if (at(c, x) >= 0) continue;
        ensure_room(1, c);
        if (cursor_moved_) {
          --c;
          break;
        }
        define(c, x);
      }
    }
  }

  void run_felsch() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (int x = 0; x < cols_ && live(c); ++x) {
        if (at(c, x) >= 0) continue;
        ensure_room(1, c);
        if (cursor_moved_) {
          cursor_moved_ = false;
          x = -1;
          continue;
        }
        define(c, x);
        process_deductions();
      }
    }
  }

  CosetTable finish() {
    int cursor = 0;
    compact(cursor);
    const int n = static_cast<int>(parent_.size());
    // Standardize: breadth-first order from coset 0.
    std::vector<int> order{0}, map(static_cast<std::size_t>(n), -1);
    map[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < cols_; ++x) {
        const int d = at(order[i], x);
        if (d < 0) throw CrossCheckFailure("enumeration finished with an undefined entry");
        if (map[d] < 0) {
          map[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) throw CrossCheckFailure("coset table is not connected");
    std::vector<int> entries(static_cast<std::size_t>(n) * cols_);
    for (int c = 0; c < n; ++c) {
      for (int x = 0; x < cols_; ++x) entries[static_cast<std::size_t>(map[c]) * cols_ + x] = map[at(c, x)];
    }
    return CosetTable(cols_ / 2, std::move(entries));
  }

  int cols_;
  std::size_t cap_;
  Strategy strategy_;
  std::size_t max_len_ = 1;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::vector<int>>> conjugates_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::size_t live_count_ = 0;
  bool cursor_moved_ = false;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

CosetTable enumerate(const Presentation& pres, std::size_t max_cosets, Strategy strategy) {
  CosetTable t = Enumerator(pres, max_cosets, strategy).run();
  if (!verify_table(t, pres)) throw CrossCheckFailure("completed coset table violates a relator");
  return t;
}

bool verify_table(const CosetTable& table, const Presentation& pres) {
  const int n = table.size();
  for (int g = 1; g <= table.generators(); ++g) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) {
      const int d = table.act(c, g);
      if (hit[d] || table.act(d, -g) != c) return false;
      hit[d] = 1;
    }
  }
  for (const auto& r : pres.relators) {
    for (int c = 0; c < n; ++c) {
      if (table.trace(c, r) != c) return false;
    }
  }
  return true;
}

bool word_equal(const CosetTable& table, const GroupWord& w1, const GroupWord& w2) {
  check_word(w1, table.generators());
  check_word(w2, table.generators());
  return table.trace(0, w1) == table.trace(0, w2);
}

bool word_equal(const Presentation& pres, const GroupWord& w1, const GroupWord& w2, std::size_t max_cosets) {
  return word_equal(enumerate(pres, max_cosets), w1, w2);
}

ConjugacyClasses conjugacy_classes(const CosetTable& table) {
  const int n = table.size();
  const auto& words = table.words();
  ConjugacyClasses out;
  out.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (out.class_of[start] >= 0) continue;
    const int id = out.count();
    std::vector<int> members{start};
    out.class_of[start] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const GroupWord& w = words[members[i]];
      for (int g = 1; g <= table.generators(); ++g) {
        // g^-1 w g
        const int d = table.act(table.trace(table.act(0, -g), w), g);
        if (out.class_of[d] < 0) {
          out.class_of[d] = id;
          members.push_back(d);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
    out.representatives.push_back(words[start]);
  }
  return out;
}

}  // namespace tanglelab
