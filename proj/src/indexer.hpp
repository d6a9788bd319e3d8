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

#ifndef INFRANOTES_INDEXER_HPP
#define INFRANOTES_INDEXER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "assemble.hpp"

namespace infranotes {

/// Bidirectional time index between Notes and the lecture-clip timeline,
/// plus exact-word search over recognized line text.  Queries take and
/// return video-clock times; the stored offset converts to the note clock.
struct SearchIndex {
  struct Posting {
    int page_id = 0;
    int line_id = 0;
    double start_t = 0.0;  // note clock
  };
  struct PageInterval {
    int page_id = 0;
    double start_t = 0.0;
    double end_t = 0.0;  // note clock, non-overlapping, sorted
  };

  std::map<std::string, std::vector<Posting>> postings;
  std::vector<PageInterval> page_intervals;
  double video_offset = 0.0;
};

/// Tokenizes each line's recognized text on whitespace; tokens containing
/// unknown glyphs ('?') are wildcards and stay out of the postings.
/// Page intervals run to the next page's start so every session moment
/// belongs to exactly one page.
SearchIndex build_index(const Notes& notes);

/// Page whose interval contains video time t; boundaries belong to the
/// opening page.  OutOfSession beyond the session span.
int time_to_page(const SearchIndex& index, double t);

/// The page's (start, end) interval on the video clock; UnknownPage for
/// ids the index has never seen.
std::pair<double, double> page_to_clip(const SearchIndex& index, int page_id);

/// Exact-match postings in chronological order; matching is
/// case-insensitive against the uppercase corpus.
std::vector<SearchIndex::Posting> search(const SearchIndex& index,
                                         const std::string& word);

std::string write_index(const SearchIndex& index);
SearchIndex parse_index(const std::string& bytes);

}  // namespace infranotes

#endif  // INFRANOTES_INDEXER_HPP
