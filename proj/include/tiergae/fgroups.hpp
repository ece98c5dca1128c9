// Copyright 2026 The tiergae Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "tiergae/graph.hpp"
#include "tiergae/molecule.hpp"

namespace tiergae {

// Ertl-style atom marking. Indices are 0-based. An atom is marked when it is
//   (a) a heteroatom (neither C nor H),
//   (b) a carbon double- or triple-bonded to a heteroatom,
//   (c) a carbon in a double or triple bond to another carbon (aromatic
//       bonds, type 4, do not count), or
//   (d) a carbon single-bonded to two or more heteroatoms.
std::set<std::size_t> mark_atoms(const Molecule& mol);

enum class GroupKind { kFunctional, kSkeleton };

struct GroupPartition {
  std::vector<std::vector<std::size_t>> groups;  // each sorted ascending
  std::vector<GroupKind> kinds;

  std::size_t size() const noexcept { return groups.size(); }
  std::size_t functional_count() const;
};

// Functional groups are the connected components of the marked atoms
// (joined by bonds between marked atoms); every other heavy atom is a
// skeleton singleton. A hydrogen joins the group of its heavy neighbour.
// Groups are ordered by their smallest member.
GroupPartition build_partition(const Molecule& mol, const std::set<std::size_t>& marked);

// Binary N×G tier-1 membership with columns in ascending smallest-member
// order. Throws Error(kIncompleteCover) when the groups do not cover
// [0, n) exactly once.
MembershipMatrix membership_from_partition(const GroupPartition& p, std::size_t n);

// Human-readable listing, one line per group, atoms as <element><file id>.
std::string describe_partition(const Molecule& mol, const GroupPartition& p);

}  // namespace tiergae
