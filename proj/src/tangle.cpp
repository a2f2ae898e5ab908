#include "tanglelab/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tanglelab/errors.hpp"
#include "union_find.hpp"

namespace tanglelab {

TangleDiagram::TangleDiagram(std::vector<Crossing> crossings, std::vector<ArcId> boundary,
                             int closed_components, int arc_count)
    : closed_components_(closed_components) {
  if (boundary.size() % 2 != 0) throw InputError("boundary must have an even number of points");
  if (closed_components < 0) throw InputError("negative circle count");
  std::unordered_map<ArcId, ArcId> relabel;
  auto map_arc = [&](ArcId a) {
    if (a < 0) throw InputError("negative arc id " + std::to_string(a));
    auto [it, inserted] = relabel.try_emplace(a, static_cast<ArcId>(relabel.size()));
    return it->second;
  };
  for (auto& c : crossings) {
    c.over = map_arc(c.over);
    c.under_in = map_arc(c.under_in);
    c.under_out = map_arc(c.under_out);
    if (c.sign && *c.sign != 1 && *c.sign != -1) throw InputError("crossing sign must be +1 or -1");
  }
  for (auto& b : boundary) b = map_arc(b);
  for (ArcId a = 0; a < arc_count; ++a) {
    if (!relabel.count(a)) ++closed_components_;
  }
  arc_count_ = static_cast<int>(relabel.size());
  std::vector<int> endpoints(arc_count_, 0);
  for (ArcId b : boundary) {
    if (++endpoints[b] > 2) throw InputError("an arc carries more than two boundary points");
  }
  crossings_ = std::move(crossings);
  boundary_ = std::move(boundary);
}

bool TangleDiagram::is_oriented() const {
  return std::all_of(crossings_.begin(), crossings_.end(),
                     [](const Crossing& c) { return c.sign.has_value(); });
}

namespace {

// Rebuilds a diagram after identifying arcs. Classes that end up with no
// crossing and no boundary reference are closed crossing-free circles.
TangleDiagram glue(std::vector<Crossing> crossings, std::vector<ArcId> boundary, int arc_count,
                   int closed, detail::UnionFind& uf) {
  std::vector<char> referenced(arc_count, 0);
  for (auto& c : crossings) {
    c.over = uf.find(c.over);
    c.under_in = uf.find(c.under_in);
    c.under_out = uf.find(c.under_out);
    referenced[c.over] = referenced[c.under_in] = referenced[c.under_out] = 1;
  }
  for (auto& b : boundary) {
    b = uf.find(b);
    referenced[b] = 1;
  }
  for (int a = 0; a < arc_count; ++a) {
    if (uf.find(a) == a && !referenced[a]) ++closed;
  }
  return TangleDiagram(std::move(crossings), std::move(boundary), closed);
}

}  // namespace

ComponentSummary components(const TangleDiagram& d) {
  detail::UnionFind uf(d.arc_count());
  for (const auto& c : d.crossings()) uf.unite(c.under_in, c.under_out);
  ComponentSummary s;
  s.free_circles = d.closed_components();
  const auto& bd = d.boundary();
  s.partner.assign(bd.size(), -1);
  std::map<int, std::vector<int>> ends;
  for (int i = 0; i < static_cast<int>(bd.size()); ++i) ends[uf.find(bd[i])].push_back(i);
  for (const auto& [root, pos] : ends) {
    if (pos.size() != 2) throw InputError("strand does not have exactly two boundary endpoints");
    s.partner[pos[0]] = pos[1];
    s.partner[pos[1]] = pos[0];
    ++s.boundary_strands;
  }
  for (int a = 0; a < d.arc_count(); ++a) {
    if (uf.find(a) == a && !ends.count(a)) ++s.closed_with_crossings;
  }
  return s;
}

TangleDiagram rotate_diagram(const TangleDiagram& d, int steps) {
  const int m = static_cast<int>(d.boundary().size());
  if (m == 0) return d;
  steps = ((steps % m) + m) % m;
  std::vector<ArcId> bd(m);
  for (int i = 0; i < m; ++i) bd[(i + steps) % m] = d.boundary()[i];
  return TangleDiagram(d.crossings(), std::move(bd), d.closed_components());
}

TangleDiagram compose_diagrams(const TangleDiagram& a, const TangleDiagram& b) {
  if (a.n() != b.n() || a.n() == 0) throw InputError("composition needs two n-tangles with equal n >= 1");
  const int n = a.n();
  const int offset = a.arc_count();
  const int total = a.arc_count() + b.arc_count();
  std::vector<Crossing> crossings = a.crossings();
  for (Crossing c : b.crossings()) {
    c.over += offset;
    c.under_in += offset;
    c.under_out += offset;
    crossings.push_back(c);
  }
  detail::UnionFind uf(total);
  for (int i = 0; i < n; ++i) uf.unite(a.boundary()[n + i], b.boundary()[n - 1 - i] + offset);
  std::vector<ArcId> bd;
  for (int i = 0; i < n; ++i) bd.push_back(a.boundary()[i]);
  for (int i = n; i < 2 * n; ++i) bd.push_back(b.boundary()[i] + offset);
  return glue(std::move(crossings), std::move(bd), total,
              a.closed_components() + b.closed_components(), uf);
}

TangleDiagram join_boundary(const TangleDiagram& d, const std::vector<std::pair<int, int>>& pairs) {
  const int m = static_cast<int>(d.boundary().size());
  std::vector<char> used(m, 0);
  detail::UnionFind uf(d.arc_count());
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= m || j >= m || i == j || used[i] || used[j]) {
      throw InputError("invalid boundary join");
    }
    used[i] = used[j] = 1;
    uf.unite(d.boundary()[i], d.boundary()[j]);
  }
  std::vector<ArcId> bd;
  for (int i = 0; i < m; ++i) {
    if (!used[i]) bd.push_back(d.boundary()[i]);
  }
  return glue(d.crossings(), std::move(bd), d.arc_count(), d.closed_components(), uf);
}

TangleDiagram closure(const TangleDiagram& d, ClosureKind kind) {
  if (d.n() != 2) throw InputError("closure needs a 2-tangle");
  // NW=0, SW=1, SE=2, NE=3.
  if (kind == ClosureKind::numerator) return join_boundary(d, {{0, 3}, {1, 2}});
  return join_boundary(d, {{0, 1}, {2, 3}});
}

TangleDiagram trivial_link(int components) {
  if (components < 0) throw InputError("negative component count");
  return TangleDiagram({}, {}, components);
}

TangleDiagram zero_tangle() { return TangleDiagram({}, {0, 1, 1, 0}); }

TangleDiagram infinity_tangle() { return TangleDiagram({}, {0, 0, 1, 1}); }

TangleDiagram unit_twist(int sign) { return elementary_crossing(2, 0, sign); }

TangleDiagram identity_ntangle(int n) {
  if (n < 1) throw InputError("identity tangle needs n >= 1");
  std::vector<ArcId> bd(2 * n);
  for (int i = 0; i < n; ++i) bd[i] = bd[2 * n - 1 - i] = i;
  return TangleDiagram({}, std::move(bd));
}

TangleDiagram elementary_crossing(int n, int j, int sign) {
  if (n < 2 || j < 0 || j + 1 >= n || (sign != 1 && sign != -1)) {
    throw InputError("invalid elementary crossing");
  }
  std::vector<ArcId> bd(2 * n, -1);
  ArcId next = 0;
  for (int i = 0; i < n; ++i) {
    if (i == j || i == j + 1) continue;
    bd[i] = bd[2 * n - 1 - i] = next++;
  }
  // Strand from west j ends at east height j+1, strand from west j+1 ends at
  // east height j.
  const int over_start = sign > 0 ? j + 1 : j;
  const int under_start = sign > 0 ? j : j + 1;
  const int over_end = 2 * n - 1 - (sign > 0 ? j : j + 1);
  const int under_end = 2 * n - 1 - (sign > 0 ? j + 1 : j);
  const ArcId over = next++, in = next++, out = next++;
  bd[over_start] = bd[over_end] = over;
  bd[under_start] = in;
  bd[under_end] = out;
  return TangleDiagram({Crossing{over, in, out, std::nullopt}}, std::move(bd));
}

TangleDiagram matching_tangle(const std::vector<int>& partner) {
  const int m = static_cast<int>(partner.size());
  if (m == 0 || m % 2 != 0) throw InputError("matching needs an even positive number of points");
  std::vector<ArcId> bd(m, -1);
  ArcId next = 0;
  for (int i = 0; i < m; ++i) {
    int j = partner[i];
    if (j < 0 || j >= m || j == i || partner[j] != i) throw InputError("not a perfect matching");
    if (bd[i] < 0) bd[i] = bd[j] = next++;
  }
  return TangleDiagram({}, std::move(bd));
}

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw InputError("braid needs at least one strand");
  for (int l : letters) {
    if (l == 0 || std::abs(l) >= strands) {
      throw InputError("braid letter " + std::to_string(l) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
  }
}

BraidWord BraidWord::power(int k) const {
  if (k < 0) throw InputError("negative braid power");
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters.begin(), letters.end());
  return BraidWord(strands, std::move(out));
}

std::vector<int> BraidWord::permutation() const {
  // at[pos] = starting strand currently at pos
  std::vector<int> at(strands);
  std::iota(at.begin(), at.end(), 0);
  for (int l : letters) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(strands);
  for (int pos = 0; pos < strands; ++pos) perm[at[pos]] = pos;
  return perm;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << strands << ":";
  for (int l : letters) os << ' ' << l;
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  std::string t = text;
  auto colon = t.find(':');
  if (colon == std::string::npos) throw InputError("braid must look like '<n>: i1 i2 ...'");
  std::istringstream head(t.substr(0, colon));
  std::string word;
  int n = 0;
  head >> word;
  if (word == "braid") head >> word;
  try {
    std::size_t used = 0;
    n = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("bad strand count in braid '" + text + "'");
  }
  std::istringstream body(t.substr(colon + 1));
  std::vector<int> letters;
  std::string tok;
  while (body >> tok) {
    try {
      std::size_t used = 0;
      letters.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad braid letter '" + tok + "'");
    }
  }
  return BraidWord(n, std::move(letters));
}

TangleDiagram braid_closure(const BraidWord& word) {
  const int n = word.strands;
  std::vector<ArcId> top(n), cur(n);
  ArcId next = 0;
  for (int i = 0; i < n; ++i) top[i] = cur[i] = next++;
  std::vector<Crossing> crossings;
  for (int l : word.letters) {
    const int i = std::abs(l) - 1;
    const ArcId fresh = next++;
    if (l > 0) {
      crossings.push_back(Crossing{cur[i], cur[i + 1], fresh, 1});
      cur[i + 1] = cur[i];
      cur[i] = fresh;
    } else {
      crossings.push_back(Crossing{cur[i + 1], cur[i], fresh, -1});
      cur[i] = cur[i + 1];
      cur[i + 1] = fresh;
    }
  }
  detail::UnionFind uf(next);
  for (int i = 0; i < n; ++i) uf.unite(cur[i], top[i]);
  return glue(std::move(crossings), {}, next, 0, uf);
}

TangleDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Crossing> crossings;
  std::vector<ArcId> boundary;
  bool have_boundary = false;
  int circles = 0;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("diagram line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_int = [&](std::istringstream& ls, long long& v) -> bool {
    std::string tok;
    if (!(ls >> tok)) return false;
    try {
      std::size_t used = 0;
      v = std::stoll(tok, &used);
      if (used != tok.size()) fail("bad integer '" + tok + "'");
    } catch (const std::invalid_argument&) {
      fail("bad integer '" + tok + "'");
    } catch (const std::out_of_range&) {
      fail("integer overflow '" + tok + "'");
    }
    return true;
  };
  auto arc = [&](long long v) {
    if (v < 0 || v > 1'000'000'000) fail("arc id out of range");
    return static_cast<ArcId>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    long long v = 0;
    if (tag == "X") {
      long long vals[3];
      for (auto& x : vals) {
        if (!read_int(ls, x)) fail("crossing needs three arcs");
      }
      Crossing c{arc(vals[0]), arc(vals[1]), arc(vals[2]), std::nullopt};
      if (read_int(ls, v)) {
        if (v != 1 && v != -1) fail("crossing sign must be 1 or -1");
        c.sign = static_cast<int>(v);
      }
      if (read_int(ls, v)) fail("trailing data");
      crossings.push_back(c);
    } else if (tag == "B") {
      if (have_boundary) fail("duplicate boundary record");
      have_boundary = true;
      while (read_int(ls, v)) boundary.push_back(arc(v));
    } else if (tag == "O") {
      if (!read_int(ls, v) || v < 0 || v > 1'000'000) fail("bad circle count");
      circles += static_cast<int>(v);
      if (read_int(ls, v)) fail("trailing data");
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  TangleDiagram d(std::move(crossings), std::move(boundary), circles);
  components(d);  // validates that every strand has two boundary ends
  return d;
}

TangleDiagram read_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open diagram file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

std::string format_diagram(const TangleDiagram& d) {
  std::ostringstream os;
  for (const auto& c : d.crossings()) {
    os << "X " << c.over << ' ' << c.under_in << ' ' << c.under_out;
    if (c.sign) os << ' ' << *c.sign;
    os << '\n';
  }
  if (!d.boundary().empty()) {
    os << 'B';
    for (ArcId a : d.boundary()) os << ' ' << a;
    os << '\n';
  }
  if (d.closed_components() > 0) os << "O " << d.closed_components() << '\n';
  return os.str();
}

}  // namespace tanglelab
