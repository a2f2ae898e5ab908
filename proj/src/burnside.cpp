#include "tanglelab/burnside.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "tanglelab/coloring.hpp"
#include "tanglelab/errors.hpp"

namespace tanglelab {

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

GroupWord parse_group_word(const std::string& text) {
  GroupWord out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad word letter '" + tok + "'", 0);
      }
      if (used != tok.size() || v == 0) throw ParseError("bad word letter '" + tok + "'", 0);
      out.push_back(v);
    }
  }
  return out;
}

std::string format_group_word(const GroupWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

namespace {

int binom2(int r) { return r * (r - 1) / 2; }
int binom3(int r) { return r * (r - 1) * (r - 2) / 6; }

void check_rank(int r) {
  if (r < 1 || r > BurnsideElement::kMaxRank) {
    throw InputError("Burnside rank must be between 1 and " + std::to_string(BurnsideElement::kMaxRank));
  }
}

std::uint8_t sub3(std::uint8_t x, int y) { return static_cast<std::uint8_t>(((x - y) % 3 + 3) % 3); }
std::uint8_t add3(std::uint8_t x, int y) { return static_cast<std::uint8_t>(((x + y) % 3 + 3) % 3); }

}  // namespace

BurnsideElement::BurnsideElement(int rank) : rank_(rank) { check_rank(rank); }

BurnsideElement BurnsideElement::generator(int rank, int index) {
  BurnsideElement g(rank);
  if (index < 0 || index >= rank) throw InputError("generator index out of range");
  g.e_[index] = 1;
  return g;
}

BurnsideElement BurnsideElement::from_exponents(int rank, const std::vector<int>& exponents) {
  BurnsideElement g(rank);
  if (static_cast<int>(exponents.size()) != g.length()) throw InputError("wrong exponent vector length");
  for (int i = 0; i < g.length(); ++i) g.e_[i] = add3(0, exponents[i]);
  return g;
}

int BurnsideElement::length() const noexcept { return rank_ + binom2(rank_) + binom3(rank_); }

std::vector<int> BurnsideElement::exponents() const { return {e_.begin(), e_.begin() + length()}; }

std::vector<int> BurnsideElement::abelian_part() const { return {e_.begin(), e_.begin() + rank_}; }

bool BurnsideElement::is_identity() const {
  for (int i = 0; i < length(); ++i) {
    if (e_[i]) return false;
  }
  return true;
}

int BurnsideElement::pair_offset(int i, int j) const {
  // Pairs (i, j), i < j, in lexicographic order.
  return i * (2 * rank_ - i - 1) / 2 + (j - i - 1);
}

int BurnsideElement::triple_offset(int i, int j, int k) const {
  int off = 0;
  for (int a = 0; a < i; ++a) off += binom2(rank_ - a - 1);
  for (int b = i + 1; b < j; ++b) off += rank_ - b - 1;
  return off + (k - j - 1);
}

void BurnsideElement::right_multiply_generator(int k) {
  if (k < 0 || k >= rank_) throw InputError("generator index out of range");
  const auto orig = e_;
  auto a = [&](int i) { return static_cast<int>(orig[i]); };
  auto beta = [&](int i, int j) { return static_cast<int>(orig[rank_ + pair_offset(i, j)]); };
  // b_ij x_k = x_k b_ij [b_ij, x_k]
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j < rank_; ++j) {
      if (k == i || k == j || beta(i, j) == 0) continue;
      if (k > j) {
        triple(i, j, k) = add3(triple(i, j, k), beta(i, j));
      } else if (k < i) {
        triple(k, i, j) = add3(triple(k, i, j), beta(i, j));
      } else {
        triple(i, k, j) = sub3(triple(i, k, j), beta(i, j));
      }
    }
  }
  // x_j^a_j for j > k commuted past x_k
  for (int j = k + 1; j < rank_; ++j) {
    for (int l = j + 1; l < rank_; ++l) triple(k, j, l) = sub3(triple(k, j, l), a(j) * a(l));
  }
  for (int j = k + 1; j < rank_; ++j) pair(k, j) = sub3(pair(k, j), a(j));
  e_[k] = add3(e_[k], 1);
}

std::uint64_t BurnsideElement::index() const {
  // 3^41 does not fit in 64 bits
  if (length() > 40) throw InputError("element index needs rank <= 5");
  std::uint64_t out = 0;
  for (int i = length() - 1; i >= 0; --i) out = out * 3 + e_[i];
  return out;
}

BurnsideElement BurnsideElement::from_index(int rank, std::uint64_t index) {
  BurnsideElement g(rank);
  if (g.length() > 40) throw InputError("element index needs rank <= 5");
  for (int i = 0; i < g.length(); ++i) {
    g.e_[i] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return g;
}

std::string BurnsideElement::to_string() const {
  std::ostringstream os;
  os << "a=(";
  for (int i = 0; i < rank_; ++i) os << (i ? " " : "") << int{e_[i]};
  os << ") b=(";
  const int nb = binom2(rank_);
  for (int i = 0; i < nb; ++i) os << (i ? " " : "") << int{e_[rank_ + i]};
  os << ") c=(";
  for (int i = 0; i < binom3(rank_); ++i) os << (i ? " " : "") << int{e_[rank_ + nb + i]};
  os << ")";
  return os.str();
}

BurnsideElement multiply(const BurnsideElement& g, const BurnsideElement& h) {
  if (g.rank() != h.rank()) throw InputError("rank mismatch");
  BurnsideElement out = g;
  const int r = g.rank();
  for (int k = 0; k < r; ++k) {
    for (int t = 0; t < h.e_[k]; ++t) out.right_multiply_generator(k);
  }
  // The b- and c-parts commute with each other modulo weight 4.
  for (int i = r; i < g.length(); ++i) out.e_[i] = add3(out.e_[i], h.e_[i]);
  return out;
}

BurnsideElement inverse(const BurnsideElement& g) { return multiply(g, g); }

BurnsideElement commutator(const BurnsideElement& g, const BurnsideElement& h) {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

BurnsideElement evaluate_word(int rank, const GroupWord& w) {
  BurnsideElement out(rank);
  for (int l : w) {
    if (l == 0 || std::abs(l) > rank) {
      throw InputError("letter " + std::to_string(l) + " out of range for rank " + std::to_string(rank));
    }
    out.right_multiply_generator(std::abs(l) - 1);
    if (l < 0) out.right_multiply_generator(std::abs(l) - 1);
  }
  return out;
}

BigInt burnside_order(int r) {
  check_rank(r);
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(r + binom2(r) + binom3(r)));
  return out;
}

std::uint64_t memory_guard_elements() {
  if (const char* env = std::getenv("TANGLELAB_MEM_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw InputError("TANGLELAB_MEM_GUARD must be a positive element count");
  }
  return 200'000'000;
}

namespace {

std::uint64_t group_size(int r) { return burnside_order(r).get_ui(); }

void require_closure_budget(int r) {
  if (r > 4) throw InputError("group closures need rank <= 4");
  if (group_size(r) > memory_guard_elements()) throw BudgetExceeded("group closure exceeds the memory guard");
}

}  // namespace

std::uint64_t enumerate_group(int r) {
  check_rank(r);
  require_closure_budget(r);
  const std::uint64_t size = group_size(r);
  std::vector<bool> seen(size, false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const BurnsideElement g = BurnsideElement::from_index(r, queue.front());
    queue.pop_front();
    for (int k = 0; k < r; ++k) {
      BurnsideElement h = g;
      h.right_multiply_generator(k);
      const std::uint64_t idx = h.index();
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
        queue.push_back(idx);
      }
    }
  }
  if (count != size) throw CrossCheckFailure("closure from generators has the wrong size");
  return count;
}

ConsistencyReport consistency_check(int r, std::uint64_t samples, std::uint64_t seed) {
  check_rank(r);
  ConsistencyReport rep;
  rep.rank = r;
  const BurnsideElement id(r);
  std::mt19937_64 rng(seed);
  const int len = id.length();
  auto random_element = [&] {
    std::vector<int> ex(len);
    for (int& x : ex) x = static_cast<int>(rng() % 3);
    return BurnsideElement::from_exponents(r, ex);
  };
  auto fail = [&](const std::string& what) { throw CrossCheckFailure("B(" + std::to_string(r) + ",3): " + what); };

  if (r <= 2) {
    const std::uint64_t size = group_size(r);
    std::vector<BurnsideElement> all;
    for (std::uint64_t i = 0; i < size; ++i) all.push_back(BurnsideElement::from_index(r, i));
    for (const auto& x : all) {
      for (const auto& y : all) {
        const BurnsideElement xy = multiply(x, y);
        for (const auto& z : all) {
          if (multiply(xy, z) != multiply(x, multiply(y, z))) fail("associativity");
          ++rep.associativity_checks;
        }
      }
    }
    rep.exhaustive = true;
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    const BurnsideElement x = random_element(), y = random_element(), z = random_element();
    if (!rep.exhaustive) {
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) fail("associativity");
      ++rep.associativity_checks;
    }
    if (multiply(x, id) != x || multiply(id, x) != x || !multiply(x, inverse(x)).is_identity()) {
      fail("identity or inverse");
    }
    if (!multiply(multiply(x, x), x).is_identity()) fail("exponent 3");
    ++rep.exponent_checks;
    if (!commutator(commutator(x, y), y).is_identity()) fail("2-Engel law");
    ++rep.engel_checks;
    // The c-part of z is central.
    std::vector<int> ex = z.exponents();
    for (int i = 0; i < r + r * (r - 1) / 2; ++i) ex[i] = 0;
    const BurnsideElement c = BurnsideElement::from_exponents(r, ex);
    if (multiply(c, x) != multiply(x, c)) fail("centrality of the third term");
  }
  return rep;
}

std::uint64_t quotient_order(int r, const std::vector<BurnsideElement>& relators) {
  check_rank(r);
  require_closure_budget(r);
  for (const auto& rel : relators) {
    if (rel.rank() != r) throw InputError("relator rank mismatch");
  }
  const std::uint64_t size = group_size(r);
  std::vector<BurnsideElement> gens, gens_inv;
  for (int k = 0; k < r; ++k) {
    gens.push_back(BurnsideElement::generator(r, k));
    gens_inv.push_back(inverse(gens.back()));
  }
  // Closure of {1} under right multiplication by relators and conjugation by
  // generators is the normal closure.
  std::vector<bool> seen(size, false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  std::uint64_t count = 1;
  auto push = [&](const BurnsideElement& g) {
    const std::uint64_t idx = g.index();
    if (!seen[idx]) {
      seen[idx] = true;
      ++count;
      queue.push_back(idx);
    }
  };
  while (!queue.empty()) {
    const BurnsideElement g = BurnsideElement::from_index(r, queue.front());
    queue.pop_front();
    for (const auto& rel : relators) push(multiply(g, rel));
    for (int k = 0; k < r; ++k) push(multiply(multiply(gens_inv[k], g), gens[k]));
  }
  if (size % count != 0) throw CrossCheckFailure("normal closure size does not divide the group order");
  return size / count;
}

namespace {

// The braid action on strand labels, for any monoid-like label type.
template <typename T, typename Mul, typename Inv>
void act(std::vector<T>& s, int letter, Mul mul, Inv inv) {
  const int i = std::abs(letter) - 1;
  if (letter > 0) {
    T left = mul(mul(s[i], inv(s[i + 1])), s[i]);
    s[i + 1] = s[i];
    s[i] = std::move(left);
  } else {
    T right = mul(mul(s[i + 1], inv(s[i])), s[i + 1]);
    s[i] = s[i + 1];
    s[i + 1] = std::move(right);
  }
}

int check_kill(const BraidWord& braid, int kill) {
  if (kill < 0) kill = braid.strands - 1;
  if (kill >= braid.strands) throw InputError("killed strand out of range");
  return kill;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<char> done(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    ++cycles;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(perm[j])) done[j] = 1;
  }
  return cycles;
}

}  // namespace

CorePresentation strand_presentation(const BraidWord& braid, std::size_t max_word_length) {
  const int n = braid.strands;
  std::vector<GroupWord> strands;
  for (int j = 1; j <= n; ++j) strands.push_back({j});
  auto mul = [&](const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    out = free_reduce(out);
    if (out.size() > max_word_length) throw BudgetExceeded("strand word exceeds the length budget");
    return out;
  };
  for (int l : braid.letters) act(strands, l, mul, inverse_word);
  CorePresentation out;
  out.generators = n;
  for (int j = 0; j < n; ++j) out.relators.push_back(mul(strands[j], GroupWord{-(j + 1)}));
  return out;
}

CorePresentation core_presentation(const BraidWord& braid, int kill, std::size_t max_word_length) {
  kill = check_kill(braid, kill);
  CorePresentation out = strand_presentation(braid, max_word_length);
  for (auto& rel : out.relators) {
    GroupWord w;
    for (int l : rel) {
      const int g = std::abs(l) - 1;
      if (g == kill) continue;
      const int renamed = g > kill ? g : g + 1;
      w.push_back(l > 0 ? renamed : -renamed);
    }
    rel = free_reduce(w);
  }
  out.generators = braid.strands - 1;
  return out;
}

std::string verdict_string(Verdict v) { return v == Verdict::obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"; }

ObstructionReport obstruction(const BraidWord& braid, int kill) {
  const int n = braid.strands;
  if (n < 2 || n - 1 > 4) throw InputError("obstruction needs 2 to 5 strands");
  kill = check_kill(braid, kill);
  const int r = n - 1;
  ObstructionReport rep;
  rep.rank = r;
  rep.killed = kill;

  std::vector<BurnsideElement> strands;
  for (int j = 0; j < n; ++j) {
    if (j == kill) {
      strands.emplace_back(r);
    } else {
      strands.push_back(BurnsideElement::generator(r, j > kill ? j - 1 : j));
    }
  }
  const std::vector<BurnsideElement> initial = strands;
  for (int l : braid.letters) act(strands, l, multiply, inverse);
  for (int j = 0; j < n; ++j) rep.relator_images.push_back(multiply(strands[j], inverse(initial[j])));

  try {
    const CorePresentation core = core_presentation(braid, kill, 1u << 16);
    for (int j = 0; j < n; ++j) {
      if (evaluate_word(r, core.relators[j]) != rep.relator_images[j]) {
        throw CrossCheckFailure("relator " + std::to_string(j + 1) + " differs between the two routes");
      }
    }
    rep.words_checked = true;
  } catch (const BudgetExceeded&) {
    rep.words_checked = false;
  }

  bool any = false;
  for (const auto& g : rep.relator_images) any = any || !g.is_identity();
  rep.verdict = any ? Verdict::obstructed : Verdict::inconclusive;
  rep.tri = tri(braid_closure(braid));
  rep.components = cycle_count(braid.permutation());
  return rep;
}

GroupWord chen_word_p() {
  const GroupWord u{1, -2, 3, -4}, w{-1, 2, -3, 4}, t{4};
  GroupWord p;
  for (const GroupWord* part : {&u, &w, &t}) p.insert(p.end(), part->begin(), part->end());
  for (const GroupWord& part : {inverse_word(u), inverse_word(w), inverse_word(t)}) {
    p.insert(p.end(), part.begin(), part.end());
  }
  return free_reduce(p);
}

BraidWord chen_braid() { return BraidWord(5, {-1, 2, 3, -4, 3}).power(4); }

}  // namespace tanglelab
