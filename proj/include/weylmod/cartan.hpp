#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "weylmod/errors.hpp"

namespace weylmod {

/// Sentinel for an infinite entry of a Coxeter matrix.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// How the input datum was given.  Quiver inputs carry arrows and support
/// dimension vectors; Cartan-matrix inputs describe a valued quiver whose
/// combinatorics (existence, AR sequences, words) work the same way but
/// whose dimension vectors are not defined here.
enum class CartanMode { Quiver, Valued };

/// One arrow of a quiver, 1-based endpoints.  Admissible ordering requires
/// src < dst so that Hom(I_i, I_j) = 0 whenever i < j.
struct Arrow {
    int src = 0;
    int dst = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// An optional override for the valuation (a_ij) of a valued quiver.
/// Entries default to a_ij = -c_ij; an override may redistribute the
/// product as long as a_ij * a_ji = c_ij * c_ji is preserved.
struct ValuationOverride {
    int i = 0;
    int j = 0;
    int a_ij = 0;
    int a_ji = 0;
};

/// A (generalized) Cartan datum: c_ii = 2, c_ij <= 0 for i != j, and
/// c_ij = 0 iff c_ji = 0.  Constructed either from an acyclic quiver with
/// ascending arrows (c_ij = c_ji = -#arrows between i and j) or from an
/// explicit integer matrix.
class CartanData {
public:
    static CartanData from_quiver(int n, std::vector<Arrow> arrows);
    static CartanData from_matrix(const std::vector<std::vector<int>>& c);

    int rank() const { return n_; }
    CartanMode mode() const { return mode_; }

    /// Cartan entry c_ij, 1-based.
    int cartan(int i, int j) const;

    /// Arrow multiplicity between i and j in quiver mode (0 when no edge).
    int quiver_arrows(int i, int j) const;

    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// True when i and j are joined (c_ij != 0), i != j.
    bool edge(int i, int j) const { return i != j && cartan(i, j) != 0; }

    friend bool operator==(const CartanData&, const CartanData&) = default;

private:
    CartanData() = default;

    int n_ = 0;
    CartanMode mode_ = CartanMode::Valued;
    std::vector<int> c_;          // n x n, row-major
    std::vector<Arrow> arrows_;   // quiver mode only
};

/// The Coxeter matrix (m_ij) of a Cartan datum: m_ii = 1 and m_ij is
/// determined by the product c_ij * c_ji through
/// 0 -> 2, 1 -> 3, 2 -> 4, 3 -> 6, >= 4 -> infinity.
class CoxeterMatrix {
public:
    CoxeterMatrix(int n, std::vector<int> m) : n_(n), m_(std::move(m)) {}

    int rank() const { return n_; }

    /// Order m_ij of s_i s_j; kInfiniteOrder when infinite.  1-based.
    int order(int i, int j) const;

    bool is_finite(int i, int j) const { return order(i, j) != kInfiniteOrder; }

private:
    int n_ = 0;
    std::vector<int> m_;
};

/// Derive the Coxeter matrix from a Cartan datum.
CoxeterMatrix build_coxeter_matrix(const CartanData& cartan);

/// Bounds-check a 1-based vertex/letter index against the rank.
void check_index(const CartanData& cartan, int i, const char* what);

} // namespace weylmod
