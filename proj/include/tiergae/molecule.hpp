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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiergae {

struct Atom {
  std::string element;
  int charge = 0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class BondOrder : int { kSingle = 1, kDouble = 2, kTriple = 3, kAromatic = 4 };

// Endpoints are 1-based, exactly as stored in the CTfile bond block.
struct Bond {
  std::size_t a1 = 0;
  std::size_t a2 = 0;
  BondOrder order = BondOrder::kSingle;
};

// One connection table with its identifiers. Atom order is the file order
// and is never changed: it carries the per-atom identity.
struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::optional<std::int64_t> cid;
  std::optional<std::string> inchi;
  std::optional<std::string> name;
  // SD data items in file order, e.g. {"PUBCHEM_COMPOUND_CID", "1183"}.
  std::vector<std::pair<std::string, std::string>> properties;

  const std::string* property(std::string_view key) const;
};

// Reads every V2000 record of an SD file. The record name comes from the
// header's first line; cid and inchi are filled from the PubChem data items
// PUBCHEM_COMPOUND_CID and PUBCHEM_IUPAC_INCHI (or plain "CID" / "INCHI")
// when present. "M  CHG" lines override atom-block charges.
//
// Throws Error with kMalformedCountsLine, kTruncatedBlock, kV3000Unsupported
// or kMalformedRecord (bad atom/bond line, bond endpoint out of range,
// self bond, duplicate bond).
std::vector<Molecule> parse_sdf(std::string_view text);

// Writes V2000 records terminated by "$$$$". Only the content parse_sdf
// reads is emitted.
std::string write_sdf(const std::vector<Molecule>& molecules);

// Empty strings clear the identifier; anything else is stored verbatim.
Molecule attach_identifiers(Molecule mol, std::string_view inchi);

// Hill-order formula (C, H, then alphabetical), e.g. "C8H8O3".
std::string molecular_formula(const Molecule& mol);

// Number of bonds touching each atom (0-based result index).
std::vector<std::size_t> atom_degrees(const Molecule& mol);

}  // namespace tiergae
