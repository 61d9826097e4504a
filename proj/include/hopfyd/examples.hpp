/// @file examples.hpp
/// @brief Concrete Hopf-algebra fixtures: group algebras, their function-algebra
///        duals, and Sweedler's four-dimensional Hopf algebra.
///
/// Group algebras kG are built from Cayley tables (validated to be groups):
/// basis {g : g ∈ G}, product from the table, Δ(g) = g ⊗ g, ε(g) = 1,
/// S(g) = g⁻¹.  Function algebras are the duals on the dual basis.  Sweedler's
/// algebra H₄ = k⟨g, x⟩/(g² − 1, x², xg + gx) with Δ(g) = g ⊗ g,
/// Δ(x) = x ⊗ 1 + g ⊗ x, S(g) = g, S(x) = −gx needs characteristic ≠ 2; its
/// antipode has order four, which exercises every S ≠ S⁻¹ code path.

#pragma once

#include <string>
#include <vector>

#include "hopfyd/hopf.hpp"

namespace hopfyd {

/// Thrown when a fixture is requested over a field where it degenerates.
struct BadCharacteristic : std::runtime_error {
    explicit BadCharacteristic(const std::string& what) : std::runtime_error(what) {}
};

/// A finite group by its Cayley table: table[i][j] = index of g_i g_j.
struct GroupTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;

    int order() const { return static_cast<int>(labels.size()); }
    /// Identity and inverses; throws std::invalid_argument if not a group.
    int identity() const;
    int inverse(int i) const;
    void validate() const;
};

/// Built-in tables: "C2", "C3", "C4", "V4", "S3".
GroupTable builtinGroup(const std::string& name);

/// Group algebra kG over Q (p = 0) or F_p.
HopfAlgebraData groupAlgebra(const GroupTable& g, long p);

/// Function algebra k(G): the dual of kG on the dual basis.
HopfAlgebraData functionAlgebra(const GroupTable& g, long p);

/// Sweedler's four-dimensional Hopf algebra; throws BadCharacteristic if p = 2.
HopfAlgebraData sweedlerH4(long p);

/// The one-dimensional Hopf algebra k·1, the target of counit-like morphisms.
HopfAlgebraData trivialHopfAlgebra(long p);

/// Resolve a fixture name: "group:C2" ... "group:S3", "fn:<group>", "sweedler4".
/// Throws std::invalid_argument for unknown names.
HopfAlgebraData hopfFixture(const std::string& name, long p);

/// Names accepted by hopfFixture, in display order.
std::vector<std::string> hopfFixtureNames();

}  // namespace hopfyd
