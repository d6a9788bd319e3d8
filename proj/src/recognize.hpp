// Copyright 2026 The InfraNotes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFRANOTES_RECOGNIZE_HPP
#define INFRANOTES_RECOGNIZE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ingest.hpp"
#include "model.hpp"

namespace infranotes {

/// Stroke shape classes: four straight-direction bins plus the canonical
/// curves that resist decomposition.
enum class Primitive { H, V, DU, DD, C, DArc, O, S, J, U, Dot };

/// Table token for a primitive: - | / \ C ) O S J U .
const char* primitive_token(Primitive p);
std::optional<Primitive> primitive_from_token(const std::string& tok);

/// Unordered multiset of primitives, kept as a sorted vector.
using Signature = std::vector<Primitive>;

Signature make_signature(std::vector<Primitive> prims);
std::string signature_to_string(const Signature& sig);

/// Letter -> set of signature variants.  Editable at runtime; the shipped
/// default lives in data/primitives.table.
class PrimitiveTable {
 public:
  void add_variant(char letter, const Signature& sig);
  std::set<char> lookup(const Signature& sig) const;
  const std::vector<Signature>* variants(char letter) const;
  const std::map<char, std::vector<Signature>>& entries() const {
    return entries_;
  }

  static PrimitiveTable parse(const std::string& bytes);
  std::string serialize() const;
  static const PrimitiveTable& builtin();

 private:
  std::map<char, std::vector<Signature>> entries_;
};

/// Symbol -> set of valid stroke counts. Letters derive from the primitive
/// table's variant sizes; the counts file may add digits and override
/// letters whose writers join sub-strokes (pen-lift counts).
class StrokeCountTable {
 public:
  static StrokeCountTable derive(const PrimitiveTable& table);
  void set_counts(char symbol, const std::set<int>& counts);
  const std::set<int>* counts(char symbol) const;

  void apply_overrides(const std::string& bytes);  // infranotes-counts v1
  std::string serialize() const;
  static const StrokeCountTable& builtin();

 private:
  std::map<char, std::set<int>> counts_;
};

/// Classifies one smooth on-board stroke by straightness, chord direction
/// and curve shape.  Throws TooShort for strokes under 3 points.
Primitive primitive_of(const StrokeGeom& stroke);

/// Unordered multiset of primitive_of over the group's strokes.
Signature signature_of(const CharacterGroup& group);

std::set<char> table_lookup(const PrimitiveTable& table, const Signature& sig);

struct RerankResult {
  std::optional<char> symbol;           // nullopt: list exhausted (NoMatch)
  std::vector<std::string> warnings;    // symbols with no count entry
};

/// Walks the candidate list from the top and returns the first entry whose
/// valid stroke-count set contains observed_count.  With alphabet_only set,
/// non-letter symbols are skipped.
RerankResult rerank_stroke_count(const CandidateList& candidates,
                                 int observed_count,
                                 const StrokeCountTable& counts,
                                 bool alphabet_only);

enum class RecognizeMethod { PT, PTOcr, OSN, Unknown };

const char* recognize_method_name(RecognizeMethod m);

struct RecognizeResult {
  std::optional<char> letter;
  RecognizeMethod method = RecognizeMethod::Unknown;
};

/// Primitive table first; OCR probabilities break ties between table
/// candidates; stroke-count reranking when the table has no match.
RecognizeResult recognize_group(const CharacterGroup& group,
                                const CandidateList* candidates,
                                const PrimitiveTable& table,
                                const StrokeCountTable& counts);

/// Deterministic synthetic OCR candidate lists for a labeled session: the
/// true letter leads most lists; otherwise a count-mismatched decoy leads
/// so stroke-count reranking can recover.
std::map<int, CandidateList> make_candidates(const GroundTruth& truth,
                                             const PrimitiveTable& table,
                                             const StrokeCountTable& counts,
                                             unsigned long long seed);

}  // namespace infranotes

#endif  // INFRANOTES_RECOGNIZE_HPP
