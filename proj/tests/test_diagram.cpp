#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "knotrep/invariants.hpp"
#include "knotrep/pdcode.hpp"

using namespace knotrep;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) {
  return std::string(KNOTREP_DATA_DIR) + "/" + name;
}

PDCode load(const std::string& name) {
  return PDCode::parse(slurp(data(name)));
}

// Rank and elementary divisors of the abelianization, by integer row
// reduction (Smith form) of the exponent matrix.
std::pair<std::size_t, std::vector<long>> smith_invariants(
    std::vector<std::vector<long>> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long> divisors;
  std::size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // find a pivot minimizing |entry|
    std::size_t pr = rows, pc = cols;
    long best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = c; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows)
      break;
    std::swap(m[r], m[pr]);
    for (std::size_t i = 0; i < rows; ++i)
      std::swap(m[i][c], m[i][pc]);
    bool clean = true;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (m[i][c] != 0) {
        long q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
          m[i][j] -= q * m[r][j];
        if (m[i][c] != 0)
          clean = false;
      }
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m[r][j] != 0) {
        long q = m[r][j] / m[r][c];
        for (std::size_t i = r; i < rows; ++i)
          m[i][j] -= q * m[i][c];
        if (m[r][j] != 0)
          clean = false;
      }
    if (!clean)
      continue;
    divisors.push_back(std::abs(m[r][c]));
    ++r;
    ++c;
  }
  return {divisors.size(), divisors};
}

void require_infinite_cyclic_abelianization(const Presentation& p) {
  auto [rank, divisors] = smith_invariants(p.abelianized_exponent_matrix());
  REQUIRE(rank == p.generator_count() - 1);
  for (long d : divisors)
    REQUIRE(d == 1);
}

}  // namespace

TEST_CASE("pd validity") {
  REQUIRE_NOTHROW(load("trefoil_right.pd"));
  // c != a+1
  REQUIRE_THROWS(PDCode::parse("X 1 4 3 5\nX 3 6 4 1\nX 5 2 6 2\n"));
  // label out of range / wrong multiplicity
  REQUIRE_THROWS(PDCode::parse("X 1 7 2 5\nX 3 6 4 1\nX 5 2 6 3\n"));
  REQUIRE_THROWS(PDCode::parse("X 1 4 2 4\nX 3 6 4 1\nX 5 2 6 3\n"));
  // labelings that cannot be traversed as a single knot are rejected
  REQUIRE_THROWS(PDCode::parse("X 1 3 2 4\nX 3 1 4 2\n"));
}

TEST_CASE("writhe and mirror") {
  PDCode rt = load("trefoil_right.pd");
  REQUIRE(rt.writhe() == 3);
  REQUIRE(rt.mirror().writhe() == -3);
  REQUIRE(rt.mirror().mirror().crossings() == rt.crossings());
  PDCode f8 = load("figure8.pd");
  REQUIRE(f8.writhe() == 0);
  REQUIRE(f8.mirror().mirror().crossings() == f8.crossings());
  REQUIRE(load("trefoil_left.pd").crossings() == rt.mirror().crossings());
}

TEST_CASE("unknot wirtinger") {
  Presentation u = PDCode().wirtinger();
  REQUIRE(u.generator_count() == 1);
  REQUIRE(u.relators().empty());
  REQUIRE(u.selected()[0] == Word{{1}});
  REQUIRE(u.selected()[1].empty());
}

TEST_CASE("trefoil wirtinger matches the two-generator presentation") {
  PDCode rt = load("trefoil_right.pd");
  Presentation w = rt.wirtinger();
  REQUIRE(w.generator_count() == 3);
  REQUIRE(w.relators().size() == 3);
  for (const Word& r : w.relators())
    REQUIRE(r.size() == 4);
  // same homomorphism counts as the reduced presentation, with the same
  // peripheral behavior
  Presentation reduced = parse_presentation(
      "# roles: m1,l1\nfpgroup {<a,b; babABA; a,baBabAAA>}");
  TargetGroup a5 = TargetGroup::alternating(5);
  HomClassSet from_pd = enumerate_homs(w, a5);
  HomClassSet from_reduced = enumerate_homs(reduced, a5);
  REQUIRE(from_pd.count() == from_reduced.count());
  ChiralityTable t1 = chirality_table(w, a5);
  ChiralityTable t2 = chirality_table(reduced, a5);
  REQUIRE(t1 == t2);
  REQUIRE(t1.counts.at({5, 1}) == 1);
}

TEST_CASE("longitude exponent sum vanishes") {
  for (const char* name :
       {"trefoil_right.pd", "trefoil_left.pd", "figure8.pd", "granny.pd",
        "square.pd"}) {
    PDCode pd = load(name);
    for (unsigned base = 1; base <= pd.edge_count(); ++base) {
      Presentation w = pd.wirtinger(base);
      long sum = 0;
      for (std::int16_t x : w.selected()[1].letters)
        sum += x > 0 ? 1 : -1;
      INFO(name << " base " << base);
      REQUIRE(sum == 0);
    }
  }
}

TEST_CASE("wirtinger abelianization is infinite cyclic") {
  for (const char* name :
       {"trefoil_right.pd", "figure8.pd", "granny.pd", "square.pd"})
    require_infinite_cyclic_abelianization(load(name).wirtinger());
}

TEST_CASE("peripheral subgroup is abelian in every class") {
  PDCode f8 = load("figure8.pd");
  Presentation w = f8.wirtinger();
  TargetGroup a5 = TargetGroup::alternating(5);
  HomClassSet all = enumerate_homs(w, a5);
  for (const Homomorphism& h : all.classes) {
    const Perm& m = h.selected_images[0];
    const Perm& l = h.selected_images[1];
    REQUIRE(m * l == l * m);
  }
}

TEST_CASE("base edge does not change the chirality table") {
  PDCode rt = load("trefoil_right.pd");
  TargetGroup a5 = TargetGroup::alternating(5);
  ChiralityTable ref = chirality_table(rt.wirtinger(1), a5);
  for (unsigned base = 2; base <= rt.edge_count(); ++base)
    REQUIRE(chirality_table(rt.wirtinger(base), a5) == ref);
}

TEST_CASE("figure eight tables match their mirror") {
  PDCode f8 = load("figure8.pd");
  TargetGroup a5 = TargetGroup::alternating(5);
  REQUIRE(chirality_table(f8.wirtinger(), a5, true) ==
          chirality_table(f8.mirror().wirtinger(), a5, true));
}
