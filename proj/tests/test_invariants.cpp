#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotrep/invariants.hpp"

using namespace knotrep;

namespace {

// The five proper homomorphism classes of the handcuff presentation of
// handlebody knot 5_1 into A5, by their selected-element images
// (m1, m2, l1, l2).
struct ProperImages {
  const char* m1;
  const char* m2;
  const char* l1;
  const char* l2;
  const char* label;
};

const ProperImages kProper[] = {
    {"(2 5 4)", "(2 4 3)", "(2 3 5)", "(2 4)(3 5)", "A4"},
    {"(2 3 5)", "(2 5 3)", "(2 4 5)", "(2 4 5)", "A4"},
    {"(2 5)(3 4)", "(3 5 4)", "(2 4 5)", "(2 3 5)", "A4"},
    {"(1 5)(2 4)", "(1 5)(2 4)", "(1 3)(2 5)", "(1 3 5 4 2)", "D10"},
    {"(1 5 4 3 2)", "(1 3)(4 5)", "(1 4)(2 3)", "(1 4)(2 3)", "D10"},
};

Homomorphism hom_from(const ProperImages& pi) {
  Homomorphism h;
  h.surjective = true;
  h.selected_images = {parse_cycles(pi.m1, 5), parse_cycles(pi.m2, 5),
                       parse_cycles(pi.l1, 5), parse_cycles(pi.l2, 5)};
  return h;
}

const std::vector<std::size_t> kMeridians = {0, 1};
const std::vector<std::size_t> kSurface = {0, 1, 2, 3};

}  // namespace

TEST_CASE("identify_subgroup names the small groups") {
  auto closure = [](std::vector<const char*> gens, unsigned n) {
    std::vector<Perm> g;
    for (const char* s : gens)
      g.push_back(parse_cycles(s, n));
    return subgroup_closure(g, n);
  };
  REQUIRE(identify_subgroup({Perm::identity(5)}).name == "1");
  REQUIRE(identify_subgroup(closure({"(1 2 3 4 5)"}, 5)).name == "Z/5Z");
  REQUIRE(identify_subgroup(closure({"(1 2 3 4 5)", "(2 5)(3 4)"}, 5)).name ==
          "D10");
  REQUIRE(identify_subgroup(closure({"(1 2)(3 4)", "(1 3)(2 4)"}, 5)).name ==
          "V4");
  REQUIRE(identify_subgroup(closure({"(1 2 3)", "(1 2)(3 4)"}, 4)).name ==
          "A4");
  REQUIRE(identify_subgroup(closure({"(1 2 3)", "(1 2)(4 5)"}, 5)).name ==
          "S3");
  REQUIRE(identify_subgroup(closure({"(1 2 3 4)", "(1 3)"}, 4)).name == "D8");
  REQUIRE(identify_subgroup(closure({"(1 2 3 4)", "(1 2)"}, 4)).name == "S4");
  REQUIRE(identify_subgroup(closure({"(1 2 3 4 5)", "(3 4 5)"}, 5)).name ==
          "A5");
  REQUIRE(identify_subgroup(closure({"(1 2)", "(3 4)"}, 4)).name == "V4");
  REQUIRE(identify_subgroup(closure({"(1 2 3)", "(4 5 6)"}, 6)).name ==
          "Z/3Z x Z/3Z");
  // not closed
  REQUIRE_THROWS(identify_subgroup(
      {Perm::identity(5), parse_cycles("(1 2 3)", 5)}));
}

TEST_CASE("labels are invariant under conjugation") {
  std::mt19937 rng(11);
  TargetGroup s5 = TargetGroup::symmetric(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  auto d10 = subgroup_closure(
      {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)}, 5);
  for (int i = 0; i < 10; ++i) {
    const Perm& g = s5.elements()[pick(rng)];
    std::vector<Perm> moved;
    for (const Perm& x : d10)
      moved.push_back(x.conjugated_by(g));
    REQUIRE(identify_subgroup(moved) == identify_subgroup(d10));
  }
}

TEST_CASE("properness of the published classes") {
  TargetGroup a5 = TargetGroup::alternating(5);
  for (const ProperImages& pi : kProper) {
    Homomorphism h = hom_from(pi);
    REQUIRE(is_proper(h, kSurface, a5));
  }
  // trefoil surjection: meridian and trivial longitude generate Z5
  Homomorphism tref;
  tref.surjective = true;
  tref.selected_images = {parse_cycles("(1 2 3 4 5)", 5), Perm::identity(5)};
  REQUIRE(is_proper(tref, {0, 1}, a5));
  // a class generating all of A5 is not proper
  Homomorphism full;
  full.surjective = true;
  full.selected_images = {parse_cycles("(1 2 3 4 5)", 5),
                          parse_cycles("(1 2)(3 4)", 5)};
  REQUIRE(subgroup_closure(full.selected_images, 5).size() == 60);
  REQUIRE_FALSE(is_proper(full, {0, 1}, a5));
  // non-surjective input violates the precondition
  Homomorphism triv;
  triv.surjective = false;
  triv.selected_images = {Perm::identity(5), Perm::identity(5)};
  REQUIRE_THROWS(is_proper(triv, {0, 1}, a5));
  REQUIRE_THROWS(is_proper(full, {0, 7}, a5));
}

TEST_CASE("meridian images of the published classes") {
  TargetGroup a5 = TargetGroup::alternating(5);
  for (const ProperImages& pi : kProper) {
    Homomorphism h = hom_from(pi);
    REQUIRE(meridian_image(h, kMeridians, kSurface, a5).name == pi.label);
  }
  // normal closure of a 5-cycle inside D10 is Z5
  Homomorphism h;
  h.surjective = true;
  h.selected_images = {parse_cycles("(1 2 3 4 5)", 5), Perm::identity(5),
                       parse_cycles("(2 5)(3 4)", 5), Perm::identity(5)};
  REQUIRE(meridian_image(h, {0}, {0, 2}, a5).name == "Z/5Z");
  // identity meridians give the trivial label whatever the surface group
  h.selected_images[0] = Perm::identity(5);
  REQUIRE(meridian_image(h, {0}, {0, 2}, a5).name == "1");
}

TEST_CASE("meridian image is conjugation independent") {
  TargetGroup a5 = TargetGroup::alternating(5);
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, a5.size() - 1);
  for (const ProperImages& pi : kProper) {
    Homomorphism h = hom_from(pi);
    const Perm& g = a5.elements()[pick(rng)];
    Homomorphism moved = h;
    for (Perm& x : moved.selected_images)
      x = x.conjugated_by(g);
    REQUIRE(meridian_image(moved, kMeridians, kSurface, a5) ==
            meridian_image(h, kMeridians, kSurface, a5));
    REQUIRE(is_proper(moved, kSurface, a5) == is_proper(h, kSurface, a5));
  }
}

TEST_CASE("index polynomial formatting") {
  IndexPolynomial poly;
  poly.coeff[1] = 4;
  poly.coeff[2] = 15;
  poly.coeff[3] = 16;
  poly.coeff[5] = 26;
  REQUIRE(format_gindex(poly) == "4x+15x^2+16x^3+26x^5");
  REQUIRE(poly.total() == 61);
  IndexPolynomial one;
  one.coeff[1] = 1;
  REQUIRE(format_gindex(one) == "1x");
  REQUIRE(format_gindex(IndexPolynomial{}) == "0");
}

TEST_CASE("g_index over the trivial group") {
  Presentation p = parse_presentation(
      "# roles: m1,l1\nfpgroup {<a,b; babABA; a,baBabAAA>}");
  IndexPolynomial poly = g_index(p, TargetGroup::symmetric(1), {'m', 1});
  REQUIRE(poly.coeff.size() == 1);
  REQUIRE(poly.coeff.at(1) == 1);
}

TEST_CASE("gimage formatting sorts by subgroup size") {
  MeridianImageSet s = {{12, "A4"}, {10, "D10"}, {4, "V4"}, {12, "A4"}};
  std::sort(s.begin(), s.end());
  REQUIRE(format_gimage(s) == "{A4, A4, D10, V4}");
}

TEST_CASE("chirality table marginals") {
  Presentation p = parse_presentation(
      "# roles: m1,l1\nfpgroup {<a,b; babABA; a,baBabAAA>}");
  TargetGroup a5 = TargetGroup::alternating(5);
  ChiralityTable t = chirality_table(p, a5, true);
  auto marginal = t.marginal();
  // per-order class counts over all classes of the trefoil group
  HomClassSet all = enumerate_homs(p, a5);
  std::map<unsigned, std::uint64_t> expected;
  for (const Homomorphism& h : all.classes)
    ++expected[h.selected_images[0].order()];
  REQUIRE(marginal == expected);
  std::uint64_t total = 0;
  for (auto& [ij, c] : t.counts)
    total += c;
  REQUIRE(total == all.count());
}
