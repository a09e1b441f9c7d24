#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csr/core.hpp"

namespace csr {

/// Display names for candidates 1..m (index 0 holds candidate 1).
using CandidateNames = std::vector<std::string>;

/// Names a, b, c, ... (then c27, c28, ... beyond 26).
CandidateNames default_names(int m);

struct ParsedProfile {
  int m = 0;
  int k = 0;
  CandidateNames names;
  VotingSituation situation;
};

/// Parses the profile text format:
///
///   # comment
///   m=4 k=2
///   2: a > b > c > d
///   -1/2: b > a > d > c
///
/// When the names are exactly the default ones (a, b, ...) they keep their
/// default ids; other names are numbered by first appearance. When no vote
/// lines are present, default names are used. Repeated rankings are summed.
ParsedProfile parse_profile(std::string_view text);

/// Inverse of parse_profile. Votes are written in lexicographic order.
std::string serialize_profile(const VotingSituation& p, int k, const CandidateNames& names);
std::string serialize_profile(const VotingSituation& p, int k);

/// "a,c" -> {1,3}. Throws DomainError on unknown or repeated names.
Committee parse_committee(std::string_view text, const CandidateNames& names, int k);
std::string format_committee(const Committee& c, const CandidateNames& names);

/// "1,3" -> {1,3}; validates range and strict increase after sorting.
CommitteePosition parse_positions(std::string_view text, int m, int k);
std::string format_positions(const CommitteePosition& pos);

std::string format_vote(const Vote& v, const CandidateNames& names);

}  // namespace csr
