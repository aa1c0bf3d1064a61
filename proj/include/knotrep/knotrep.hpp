// Umbrella header.

#ifndef KNOTREP_KNOTREP_HPP_
#define KNOTREP_KNOTREP_HPP_

#include "perm.hpp"           // permutations and cycle notation
#include "target_group.hpp"   // finite groups and automorphism actions
#include "word.hpp"           // free-group words
#include "presentation.hpp"   // fpgroup format and substitutions
#include "homsearch.hpp"      // homomorphism enumeration
#include "invariants.hpp"     // G-image, G-index, chirality partition
#include "pdcode.hpp"         // planar diagrams and Wirtinger presentations
#include "listing.hpp"        // text/JSON output

#endif  // KNOTREP_KNOTREP_HPP_
