// Text and structured serialization of homomorphism class sets.

#ifndef KNOTREP_LISTING_HPP_
#define KNOTREP_LISTING_HPP_

#include <sstream>
#include <string>

#include "json.hpp"

#include "homsearch.hpp"
#include "invariants.hpp"

namespace knotrep {

// Line-oriented listing, one block per class:
//
//   ====== Homomorphism #1 defined by the permutations:
//   (3 4 5)
//   ...
//   Selected element #1 -> (2 5 4)
inline std::string format_listing(const HomClassSet& set) {
  std::ostringstream out;
  std::size_t k = 0;
  for (const Homomorphism& h : set.classes) {
    out << "====== Homomorphism #" << ++k
        << " defined by the permutations:\n";
    for (const Perm& p : h.images)
      out << format_cycles(p) << '\n';
    for (std::size_t i = 0; i < h.selected_images.size(); ++i)
      out << "Selected element #" << i + 1 << " -> "
          << format_cycles(h.selected_images[i]) << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const HomClassSet& set) {
  nlohmann::json classes = nlohmann::json::array();
  for (const Homomorphism& h : set.classes) {
    nlohmann::json jc;
    for (const Perm& p : h.images)
      jc["images"].push_back(format_cycles(p));
    jc["selected"] = nlohmann::json::array();
    for (const Perm& p : h.selected_images)
      jc["selected"].push_back(format_cycles(p));
    jc["surjective"] = h.surjective;
    jc["orbitSize"] = h.orbit_size;
    classes.push_back(std::move(jc));
  }
  return nlohmann::json{{"action", to_string(set.action)},
                        {"classCount", set.classes.size()},
                        {"rawCount", set.raw_count},
                        {"classes", std::move(classes)}};
}

inline nlohmann::json to_json(const MeridianImageSet& s) {
  nlohmann::json labels = nlohmann::json::array();
  for (const SubgroupLabel& l : s)
    labels.push_back(nlohmann::json{{"name", l.name}, {"order", l.order}});
  return labels;
}

inline nlohmann::json to_json(const IndexPolynomial& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [i, c] : poly.coeff)
    terms.push_back(nlohmann::json{{"order", i}, {"count", c}});
  return nlohmann::json{{"terms", std::move(terms)},
                        {"text", format_gindex(poly)}};
}

inline nlohmann::json to_json(const ChiralityTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (auto& [ij, c] : t.counts)
    cells.push_back(nlohmann::json{
        {"meridianOrder", ij.first}, {"productOrder", ij.second}, {"count", c}});
  return cells;
}

}  // namespace knotrep

#endif  // KNOTREP_LISTING_HPP_
