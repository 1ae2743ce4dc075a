// One PASS/FAIL line per acceptance criterion. Pass --k8 to add the k = 8
// class tables to criterion 1.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oaparity/classes.hpp"
#include "oaparity/constructions.hpp"
#include "oaparity/ensemble.hpp"
#include "oaparity/graphs.hpp"
#include "oaparity/search.hpp"

using namespace oaparity;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

std::vector<std::uint64_t> g_orbit_sizes;
std::vector<std::pair<int, int>> g_orbit_shapes;  // (k, nmod4)

void record_orbit(int k, int nmod4, std::uint64_t size) {
  g_orbit_sizes.push_back(size);
  g_orbit_shapes.emplace_back(k, nmod4);
}

// ---------------------------------------------------------------------------
// Class counts and distinct orbit sizes, indexed [k][nmod4].

struct TableRow {
  int k, nmod4;
  std::uint64_t classes;
  std::vector<std::uint64_t> sizes;
};

const std::vector<TableRow>& class_table() {
  static const std::vector<TableRow> rows = {
      {3, 0, 2, {1, 3}},
      {4, 0, 6, {1, 3, 4, 6, 12}},
      {5, 0, 18, {1, 5, 6, 10, 15, 20, 30, 60}},
      {6, 0, 78, {1, 6, 10, 15, 20, 30, 45, 60, 72, 90, 120, 180, 360, 720}},
      {7, 0, 522, {1, 7, 21, 35, 42, 70, 105, 140, 210, 252, 315, 360, 420, 504, 630, 840, 1260, 2520, 5040}},
      {8, 0, 6178, {1, 8, 28, 35, 56, 70, 105, 168, 210, 280, 315, 336, 420, 560, 630, 672, 840, 1120, 1260, 1680,
                    2016, 2520, 2880, 3360, 4032, 5040, 6720, 10080, 20160, 40320}},
      {3, 2, 2, {1, 3}},
      {4, 2, 3, {8, 12}},
      {5, 2, 10, {12, 20, 40, 60, 120}},
      {6, 2, 34, {40, 120, 144, 240, 360, 720}},
      {7, 2, 272, {120, 280, 360, 504, 560, 840, 1008, 1680, 2520, 5040}},
      {8, 2, 3528, {1920, 2240, 2688, 4480, 5760, 6720, 8064, 13440, 20160, 40320}},
      {3, 1, 1, {4}},
      {4, 1, 2, {8, 24}},
      {5, 1, 4, {16, 96, 160, 240}},
      {6, 1, 10, {32, 192, 320, 480, 1440, 1920, 2880, 5760}},
      {7, 1, 27, {64, 1344, 2240, 4480, 6720, 13440, 16128, 20160, 23040, 26880, 40320, 53760, 80640, 161280}},
      {8, 1, 131, {128, 3584, 4480, 7168, 13440, 21504, 26880, 35840, 40320, 53760, 71680, 86016, 107520, 161280,
                   215040, 258048, 322560, 368640, 430080, 645120, 860160, 1290240, 2580480, 5160960}},
      {3, 3, 1, {4}},
      {4, 3, 2, {8, 24}},
      {5, 3, 2, {192, 320}},
      {6, 3, 6, {640, 1920, 2304, 3840, 5760}},
      {7, 3, 12, {7680, 17920, 23040, 32256, 53760, 161280}},
      {8, 3, 69, {15360, 143360, 172032, 215040, 286720, 322560, 368640, 430080, 516096, 645120, 860160, 1290240,
                  1720320, 2580480, 5160960}},
  };
  return rows;
}

void criterion_tables(Outcome& o, bool include_k8) {
  int rows = 0;
  for (const auto& row : class_table()) {
    if (row.k == 8 && !include_k8) continue;
    const ClassTable t = enumerate_classes(row.k, row.nmod4);
    std::vector<std::uint64_t> sizes;
    std::uint64_t states = 0;
    for (const auto& [size, count] : t.entries) {
      sizes.push_back(size);
      states += size * count;
      record_orbit(row.k, row.nmod4, size);
    }
    if (t.total_classes != row.classes || sizes != row.sizes) {
      o.fail("k=" + std::to_string(row.k) + " n=" + std::to_string(row.nmod4) + " mod 4: " +
             std::to_string(t.total_classes) + " classes");
    }
    if (states != (std::uint64_t{1} << state_bit_count(row.k))) o.fail("orbits do not partition the states");
    ++rows;
  }
  o.detail << (o.pass ? "" : "; ") << rows << " rows" << (include_k8 ? " incl. k=8" : ", k=8 skipped");
}

// ---------------------------------------------------------------------------

TauVector tau_from_bits(int k, int n, std::uint64_t bits) {
  TauVector t(k, n);
  int b = 0;
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (i != c && j != c) t.set(c, i, j, static_cast<Bit>(bits >> b++ & 1));
  return t;
}

std::vector<Bit> tau_key(const TauVector& t) {
  std::vector<Bit> key;
  const int k = t.columns();
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (i != c && j != c) key.push_back(t.get(c, i, j));
  return key;
}

void criterion_counts(Outcome& o) {
  // k = 3, 4: every tau vector; k = 5: the image of every sigma matrix.
  for (int k = 3; k <= 4; ++k) {
    const int bits = k * static_cast<int>(choose2(k - 1));
    std::uint64_t plausible = 0, pp = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
      const auto r = check_plausible(tau_from_bits(k, k - 1, v));
      plausible += r.plausible;
      pp += r.pp_plausible == PpVerdict::Yes;
    }
    if (plausible != (std::uint64_t{1} << (choose2(k) - 1))) o.fail("k=" + std::to_string(k) + " plausible count");
    // k = n+1 with n = 2, 3.
    const int n = k - 1;
    const auto expected = std::uint64_t{1} << (choose2(n) - (n % 2 == 0 ? 1 : 0));
    if (pp != expected) o.fail("n=" + std::to_string(n) + " PP-plausible count " + std::to_string(pp));
  }
  {
    const int k = 5, n = 4;
    std::set<std::vector<Bit>> images;
    std::uint64_t pp = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << choose2(k)); ++v) {
      SigmaMatrix m(k, n);
      int b = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) m.set_pair(i, j, static_cast<Bit>(v >> b++ & 1));
      const TauVector t = tau_from_sigma(m);
      if (!check_plausible(t).plausible) o.fail("sigma image not plausible");
      if (images.insert(tau_key(t)).second && check_plausible(t).pp_plausible == PpVerdict::Yes) ++pp;
    }
    if (images.size() != (std::size_t{1} << (choose2(k) - 1))) o.fail("k=5 plausible count");
    if (pp != (std::uint64_t{1} << (choose2(n) - 1))) o.fail("n=4 PP-plausible count by filtering");
  }
  // pp_plausible_sigma enumerates them exactly for n = 3, 4.
  for (int n : {3, 4}) {
    const int bits = pp_free_bit_count(n);
    std::set<std::vector<Bit>> seen;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
      std::vector<Bit> free(static_cast<std::size_t>(bits));
      for (int b = 0; b < bits; ++b) free[static_cast<std::size_t>(b)] = static_cast<Bit>(v >> b & 1);
      const TauVector t = tau_from_sigma(pp_plausible_sigma(n, free));
      if (check_plausible(t).pp_plausible != PpVerdict::Yes) o.fail("generator output not PP-plausible");
      seen.insert(tau_key(t));
    }
    const auto expected = std::size_t{1} << (choose2(n) - (n % 2 == 0 ? 1 : 0));
    if (seen.size() != expected) o.fail("n=" + std::to_string(n) + " generator count " + std::to_string(seen.size()));
  }
  if (o.pass) o.detail << "k=3,4,5 plausible 4,32,512; PP-plausible n=3: 8, n=4: 32";
}

// ---------------------------------------------------------------------------

void criterion_oa5(Outcome& o) {
  const std::array<Bit, 9> nnn{0, 0, 0, 0, 1, 1, 0, 0, 0}, rnr{0, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int n : {11, 19, 23}) {
    for (auto [pattern, expected, size] :
         {std::tuple{ResiduePattern::NNN, nnn, std::uint64_t{192}}, std::tuple{ResiduePattern::RNR, rnr, std::uint64_t{320}}}) {
      const OrthogonalArray a = thm45_oa(n, pattern);  // validated on construction
      if (determining_components(tau_parity(a)) != expected) o.fail("n=" + std::to_string(n) + " components");
      const auto orb = class_of_oa(a);
      record_orbit(5, mod4(n), orb.size);
      if (orb.size != size) o.fail("n=" + std::to_string(n) + " orbit " + std::to_string(orb.size));
    }
  }
  if (o.pass) o.detail << "n=11,19,23: NNN orbit 192, RNR orbit 320";
}

void criterion_table2(Outcome& o) {
  const auto plane = class_of_oa(linear_mols(9));
  record_orbit(10, 1, plane.size);
  if (plane.size != 1290240) o.fail("q=9 class " + std::to_string(plane.size));
  const auto zero = orbit(ParityState{10, 1, 0});
  record_orbit(10, 1, zero.size);
  if (zero.size != 512) o.fail("zero state orbit " + std::to_string(zero.size));
  if (o.pass) o.detail << "q=9 plane 1290240, zero state 512";
}

// ---------------------------------------------------------------------------

// Every tau graph is K1 plus a complete bipartite graph on the other columns.
bool tau_graphs_bipartite(const TauVector& t) {
  const int k = t.columns();
  for (int c = 0; c < k; ++c) {
    std::vector<int> side(static_cast<std::size_t>(k), -1);
    int anchor = c == 0 ? 1 : 0;
    side[static_cast<std::size_t>(anchor)] = 0;
    for (int v = 0; v < k; ++v)
      if (v != c && v != anchor) side[static_cast<std::size_t>(v)] = t.get(c, std::min(anchor, v), std::max(anchor, v));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (i != c && j != c && t.get(c, i, j) != (side[static_cast<std::size_t>(i)] != side[static_cast<std::size_t>(j)]))
          return false;
  }
  return true;
}

Bit tau_any(const TauVector& t, int c, int i, int j) { return t.get(c, std::min(i, j), std::max(i, j)); }

bool plane_properties(const OrthogonalArray& a, std::mt19937_64& rng, std::string& why) {
  const int k = a.columns(), n = a.order();
  const Bit e = pair_parity(n);
  const TauVector t = tau_parity(a);
  const SigmaMatrix s = sigma_parity(a);
  // Latin squares from any three columns.
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = c1 + 1; c2 < k; ++c2)
      for (int c3 = c2 + 1; c3 < k; ++c3) {
        const auto p = latin_square_parities(square_from_columns(a, c1, c2, c3));
        if (((p.row + p.col + p.sym) & 1) != e) return why = "square parity sum", false;
      }
  if (!s.satisfies_pair_law()) return why = "sigma pair law", false;
  if (tau_from_sigma(s) != t) return why = "tau from sigma", false;
  // Cycle sums for every length l.
  std::vector<int> cols(static_cast<std::size_t>(k));
  std::iota(cols.begin(), cols.end(), 0);
  for (int l = 3; l <= k; ++l)
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(cols.begin(), cols.end(), rng);
      int sum = 0;
      for (int i = 0; i < l; ++i)
        sum += tau_any(t, cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>((i + l - 1) % l)],
                       cols[static_cast<std::size_t>((i + 1) % l)]);
      if ((sum & 1) != ((l * e) & 1)) return why = "cycle sum l=" + std::to_string(l), false;
    }
  if (!tau_graphs_bipartite(t)) return why = "tau graph shape", false;
  // Stack: complete bipartite (n = 0,1) or at most two cliques (n = 2,3);
  // for planes, empty or complete.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int sum = 0;
      for (int c = 0; c < k; ++c)
        if (c != i && c != j) sum += t.get(c, i, j);
      if ((sum & 1) != e) return why = "plane condition", false;
    }
  const auto st = stack(t);
  if ((st.shape == StackShape::CompleteBipartite) != (e == 0)) return why = "stack shape", false;
  if (!st.plane_shape || *st.plane_shape != (e ? PlaneStackShape::Complete : PlaneStackShape::Empty))
    return why = "plane stack", false;
  if (check_plausible(t).pp_plausible != PpVerdict::Yes) return why = "PP verdict", false;
  // sigma graph degrees.
  const SigmaMatrix full = s;
  std::set<int> out_par, in_par;
  for (int v = 0; v < k; ++v) {
    out_par.insert(full.row_sum(v) & 1);
    in_par.insert(full.column_sum(v) & 1);
  }
  switch (mod4(n)) {
    case 0:
      if (out_par != std::set<int>{0}) return why = "degrees n=0 mod 4", false;
      break;
    case 1:
      if (out_par.size() != 1) return why = "degrees n=1 mod 4", false;
      break;
    case 2:
      if (out_par != std::set<int>{1} || in_par != std::set<int>{1}) return why = "degrees n=2 mod 4", false;
      break;
    default:
      if (out_par.size() != 1 || in_par.size() != 1 || *out_par.begin() == *in_par.begin()) return why = "degrees n=3 mod 4", false;
  }
  const auto sg = sigma_graph(s);
  if (!sg.plane_degree_law || !*sg.plane_degree_law) return why = "degree law report", false;
  // Partite sets of a tau graph share the parity of n/2 for even n.
  if (n % 2 == 0)
    for (const auto& d : tau_graphs(t))
      if (static_cast<int>(d.side1.size() % 2) != (n / 2) % 2 || static_cast<int>(d.side2.size() % 2) != (n / 2) % 2)
        return why = "partite set parity", false;
  return true;
}

OrthogonalArray random_relative(const OrthogonalArray& a, std::mt19937_64& rng) {
  OrthogonalArray out = apply_transform(a, RowPermutation{Permutation::random(a.row_count(), rng)}).array;
  for (int c = 0; c < a.columns(); ++c)
    if (rng() & 1) out = apply_transform(out, SymbolPermutation{c, Permutation::random(a.order(), rng)}).array;
  return apply_transform(out, ColumnPermutation{Permutation::random(a.columns(), rng)}).array;
}

void criterion_properties(Outcome& o) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const OrthogonalArray base = linear_mols(q);
    std::string why;
    if (!plane_properties(base, rng, why)) o.fail("q=" + std::to_string(q) + ": " + why);
    ++checked;
    if (q > 9) continue;
    for (int trial = 0; trial < 1000; ++trial) {
      if (!plane_properties(random_relative(base, rng), rng, why)) {
        o.fail("q=" + std::to_string(q) + " relative: " + why);
        break;
      }
      ++checked;
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " arrays";
}

void criterion_transforms(Outcome& o) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const OrthogonalArray base = linear_mols(q);
    for (int trial = 0; trial < 1000; ++trial) {
      Transform t;
      switch (rng() % 3) {
        case 0: t = RowPermutation{Permutation::random(base.row_count(), rng)}; break;
        case 1: t = ColumnPermutation{Permutation::random(base.columns(), rng)}; break;
        default:
          t = SymbolPermutation{static_cast<int>(rng() % static_cast<std::uint64_t>(base.columns())),
                                Permutation::random(q, rng)};
      }
      const auto predicted = transform_parity_laws(base, t);
      const auto result = apply_transform(base, t);
      const SigmaMatrix stored = sigma_parity(result.array);
      const SigmaMatrix logical = result.logical_row_parity ? stored.complemented() : stored;
      if (tau_parity(result.array) != predicted.tau || logical != predicted.sigma) {
        o.fail("q=" + std::to_string(q) + " trial " + std::to_string(trial));
        break;
      }
      ++checked;
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " transforms";
}

// ---------------------------------------------------------------------------

void census_identities(const TauVector& t, const EnsembleCensus& c, Outcome& o, const std::string& what) {
  const int k = t.columns();
  std::int64_t edges = 0;
  for (int col = 0; col < k; ++col)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (i != col && j != col) edges += t.get(col, i, j);
  const SigmaMatrix m = sigma_from_tau(t).to_matrix();
  std::int64_t by_degrees = 0;
  for (int v = 0; v < k; ++v) by_degrees += static_cast<std::int64_t>(m.row_sum(v)) * (k - 1 - m.row_sum(v));
  const std::int64_t by_x = pair_parity(t.order()) ? 2 * c.x + choose3(k) : 2 * choose3(k) - 2 * c.x;
  if (edges != c.T || by_degrees != c.T || by_x != c.T) o.fail(what + ": edge count identities");
}

void criterion_ensemble(Outcome& o) {
  std::vector<int> ns;
  for (int n = 6; n <= 51; ++n)
    if (mod4(n) >= 2) ns.push_back(n);
  for (int n : ns) {
    const std::string tag = "n=" + std::to_string(n);
    const TauVector tb = tau_from_sigma(block_sigma(n));
    const auto cb = ensemble_census(tb);
    census_identities(tb, cb, o, tag + " block");
    if (cb.x != (n + 3) / 4) o.fail(tag + " block x=" + std::to_string(cb.x));
    if (check_plausible(tb).pp_plausible == PpVerdict::Yes && !check_section6(cb).all_passed()) o.fail(tag + " block checks");

    const TauVector tc = tau_from_sigma(circulant_sigma(n));
    const auto cc = ensemble_census(tc);
    census_identities(tc, cc, o, tag + " circulant");
    if (cc.x != max_equiparity(n + 1)) o.fail(tag + " circulant x=" + std::to_string(cc.x));
    if (check_plausible(tc).pp_plausible == PpVerdict::Yes) {
      for (const auto& check : check_section6(cc).checks)
        if (check.name == "equiparity-congruence" && !check.passed) o.fail(tag + " circulant congruence");
    }
  }
  // At most two equiparity squares among any four columns of a plane.
  for (int q : {3, 7, 11}) {
    const auto c = ensemble_census(linear_mols(q));
    census_identities(tau_parity(linear_mols(q)), c, o, "q=" + std::to_string(q));
    const int k = q + 1;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int d = b + 1; d < k; ++d)
          for (int f = d + 1; f < k; ++f) {
            const int equi = (c.type_of(a, b, d) == 7) + (c.type_of(a, b, f) == 7) + (c.type_of(a, d, f) == 7) +
                             (c.type_of(b, d, f) == 7);
            if (equi > 2) o.fail("q=" + std::to_string(q) + " four-column cap");
          }
  }
  if (o.pass) o.detail << ns.size() << " orders 6..51, four-column cap on q=3,7,11";
}

// ---------------------------------------------------------------------------

void criterion_small_types(Outcome& o) {
  for (int n : {3, 5}) {
    if (achieved_parity_types(n).size() != 4) o.fail("n=" + std::to_string(n) + " misses a type");
  }
  const auto four = achieved_parity_types(4);
  if (four.size() >= 4 || four.empty()) o.fail("n=4 not a proper subset");
  std::string found;
  for (const auto& type : possible_parity_types(6)) {
    SearchSpec spec;
    spec.k = 3;
    spec.n = 6;
    spec.target_types = {type};
    const auto r = find_oa_with_parity(spec);
    if (r.outcome != SearchOutcome::Found || latin_square_parities(square_from_columns(*r.array, 0, 1, 2)) != type) {
      o.fail("n=6 type " + type.label() + ": " + to_string(r.outcome));
    } else {
      found += (found.empty() ? "" : ",") + type.label();
    }
  }
  if (o.pass) {
    o.detail << "n=3,5 all four; n=4 {";
    for (std::size_t i = 0; i < four.size(); ++i) o.detail << (i ? "," : "") << four[i].label();
    o.detail << "}; n=6 found " << found;
  }
}

void criterion_divisibility(Outcome& o) {
  for (std::size_t i = 0; i < g_orbit_sizes.size(); ++i) {
    const auto [k, nmod4] = g_orbit_shapes[i];
    if (switching_group_order(k, nmod4) % g_orbit_sizes[i] != 0) {
      o.fail("orbit " + std::to_string(g_orbit_sizes[i]) + " at k=" + std::to_string(k));
      break;
    }
  }
  if (o.pass) o.detail << g_orbit_sizes.size() << " orbit sizes";
}

void criterion_circulant(Outcome& o) {
  for (int n : {6, 10, 14}) {
    const TauVector t = tau_from_sigma(circulant_sigma(n));
    const auto r = check_plausible(t);
    if (!r.plausible || r.pp_plausible != PpVerdict::Yes) o.fail("n=" + std::to_string(n) + " not PP-plausible");
  }
  if (o.pass) o.detail << "n=6,10,14 PP-plausible";
  for (int n : {7, 11}) {
    const auto r = check_plausible(tau_from_sigma(circulant_sigma(n)));
    o.detail << "; n=" << n << " recorded: " << to_string(r.pp_plausible);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool k8 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--k8") == 0) k8 = true;

  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"class tables", [&](Outcome& o) { criterion_tables(o, k8); }},
      {"plausible counts", criterion_counts},
      {"OA(5,n) family", criterion_oa5},
      {"plane class and zero state", criterion_table2},
      {"parity properties of planes", criterion_properties},
      {"transformation laws", criterion_transforms},
      {"equiparity census", criterion_ensemble},
      {"Latin square types", criterion_small_types},
      {"orbit divisibility", criterion_divisibility},
      {"circulant construction", criterion_circulant},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s (%s) [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
