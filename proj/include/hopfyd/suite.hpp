/// @file suite.hpp
/// @brief The proposition-by-proposition verification matrix over the
///        built-in fixture catalog.
///
/// Each suite bundles the exhaustive checks for one block of the theory —
/// Hopf axioms, canonical pairings, doubles and twists, Yetter–Drinfeld
/// equivalences, duality and functor laws, and the Heisenberg double as a
/// Yetter–Drinfeld algebra — run over every applicable catalog fixture and
/// merged into a single Report whose item identifiers name fixture and law.
/// The negative-control suite runs deliberately broken structures and passes
/// exactly when each breakage is detected at its frozen lexicographically
/// minimal witness.  The matrix is the data source for both the command-line
/// `paper-suite` command and the acceptance gate.

#pragma once

#include <functional>

#include "hopfyd/report.hpp"

namespace hopfyd {

/// One named row of the verification matrix.
struct SuiteEntry {
    std::string name;
    std::function<Report()> run;
};

/// Hopf axioms for every fixture, its dual, opposite and coopposite, plus
/// structural involutivity of the dual.  `filter` (non-empty) restricts the
/// fixture loop to one catalog name; likewise below.
Report suiteHopfKernel(long p, const std::string& filter = "");

/// Canonical pairing, canonical element, slice identities and transpose
/// compatibility for every fixture.
Report suiteCanonicalElement(long p, const std::string& filter = "");

/// Heisenberg and Drinfeld doubles: dimensions, coordinate-system
/// comparisons, and the four cocycle-twist theorems.  Fixtures whose double
/// would exceed `maxDim` are skipped.
Report suiteDoubles(long p, int maxDim, const std::string& filter = "");

/// Trivial, adjoint and coideal Yetter–Drinfeld instances: both displayed
/// compatibility forms, conversion between characterizations, and agreement
/// of the three braided-commutativity formulations.
Report suiteYdEquivalences(long p, const std::string& filter = "");

/// Double/codouble dualities: the induced double action and codouble
/// coaction with exact round trips, and the slice test for the canonical
/// element of the double pairing.
Report suiteDualities(long p, const std::string& filter = "");

/// Every category-functor arrow with its round trip, the coaction functors,
/// and the four-corner equivalence.
Report suiteFunctors(long p);

/// The Heisenberg double over the Drinfeld double for kC2 and Sweedler's
/// algebra, including the empirical braided-commutativity outcome.
Report suiteHeisenbergOverDouble(long p, const std::string& filter = "");

/// Three deliberately broken structures that must fail deterministically at
/// their frozen minimal witnesses: a wrong antipode, a non-cocycle twist
/// datum, and a braided check on a noncommutative trivial instance.
Report suiteNegativeControls(long p);

/// The full matrix in display order.
std::vector<SuiteEntry> acceptanceMatrix(long p, int maxDim,
                                         const std::string& filter = "");

}  // namespace hopfyd
