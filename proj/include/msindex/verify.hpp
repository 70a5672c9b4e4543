#pragma once

#include <string>

#include "msindex/extremal.hpp"

namespace msindex {

inline constexpr int kDeletionMaxOrder = 18;
inline constexpr int kRotationDeltaMaxOrder = 12;
inline constexpr int kRatiosMaxOrder = 18;
inline constexpr int kRoundtripMaxOrder = 18;
inline constexpr int kSubsetOracleMaxOrder = 12;

/// For every free tree with n <= max_n and every vertex v:
/// F(T) = F(T - v) + F(T - N[v]) and F(T - v) < F(T) <= 2 F(T - v), strict
/// when deg(v) >= 1. Up to kSubsetOracleMaxOrder, F is also compared with
/// the subset scan. Throws BudgetExceeded above kDeletionMaxOrder.
VerificationReport verify_deletion_recurrence(int max_n, int jobs = 1);

/// Every rotation of every free tree with n <= max_n: the factored delta
/// equals F(T) - F(rot(T)), and the sign test matches the direct
/// comparison. Throws BudgetExceeded above kRotationDeltaMaxOrder.
VerificationReport verify_rotation_delta(int max_n, int jobs = 1);

/// Golden-ratio bounds on every tree of stars and almost tree of stars,
/// the generalized leaf bound on every balanced tree of stars (k = its
/// minimum center degree), and the R_k brackets for 2 <= k <= 64.
VerificationReport verify_ratios(int max_n, int jobs = 1);

/// Canonical code, edge-list text and center-tree round trips on every
/// free tree with n <= max_n.
VerificationReport verify_roundtrip(int max_n, int jobs = 1);

/// Dispatches on lemma1, lemma7, ratios, structure, ctpath or roundtrip.
/// Throws ParseError for an unknown suite.
VerificationReport run_suite(const std::string& suite, int max_n, int jobs = 1);

}  // namespace msindex
