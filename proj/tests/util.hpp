#pragma once

#include "weylmod/cartan.hpp"

// Shared Cartan data for the tests.
namespace fixtures {

// Four columns, arrows 1->3, 1->4, 2->3, 2->4.  Wild type: every grid row
// stays alive, m_12 = m_34 = 2 and all other off-diagonal orders are 3.
inline weylmod::CartanData k22() {
    return weylmod::CartanData::from_quiver(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

// Single arrow 1->2; three indecomposables.
inline weylmod::CartanData a2() {
    return weylmod::CartanData::from_quiver(2, {{1, 2}});
}

// Linear path 1->2->3; six indecomposables.
inline weylmod::CartanData a3() {
    return weylmod::CartanData::from_quiver(3, {{1, 2}, {2, 3}});
}

// Doubled arrow 1->2: tame infinite type, m_12 infinite.
inline weylmod::CartanData kronecker() {
    return weylmod::CartanData::from_quiver(2, {{1, 2}, {1, 2}});
}

// The same Cartan matrix given explicitly, so dimension vectors are not
// available but the grid combinatorics match the quiver presentation.
inline weylmod::CartanData kronecker_valued() {
    return weylmod::CartanData::from_matrix({{2, -2}, {-2, 2}});
}

// Valued rank-2 datum with c_12 * c_21 = 2, so m_12 = 4 and the grid has
// exactly the four vertices (0,1), (0,2), (1,1), (1,2).
inline weylmod::CartanData b2_valued() {
    return weylmod::CartanData::from_matrix({{2, -1}, {-2, 2}});
}

} // namespace fixtures
