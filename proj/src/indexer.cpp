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

#include "indexer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ingest.hpp"

namespace infranotes {
namespace {

std::string upper(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

}  // namespace

SearchIndex build_index(const Notes& notes) {
  SearchIndex index;
  index.video_offset = notes.video_offset;
  for (std::size_t p = 0; p < notes.pages.size(); ++p) {
    const Page& page = notes.pages[p];
    const double end = p + 1 < notes.pages.size()
                           ? notes.pages[p + 1].start_t
                           : page.end_t;
    index.page_intervals.push_back({page.id, page.start_t, end});
    for (const Line& line : page.lines) {
      std::istringstream words(line.text);
      std::string word;
      while (words >> word) {
        if (word.find('?') != std::string::npos) continue;
        index.postings[upper(word)].push_back(
            {page.id, line.id, line.created_t});
      }
    }
  }
  for (auto& [word, posts] : index.postings)
    std::sort(posts.begin(), posts.end(),
              [](const SearchIndex::Posting& a, const SearchIndex::Posting& b) {
                return a.start_t < b.start_t;
              });
  return index;
}

int time_to_page(const SearchIndex& index, double t) {
  const double note_t = t - index.video_offset;
  for (std::size_t i = 0; i < index.page_intervals.size(); ++i) {
    const auto& iv = index.page_intervals[i];
    const bool last = i + 1 == index.page_intervals.size();
    if (note_t >= iv.start_t && (note_t < iv.end_t || (last && note_t <= iv.end_t)))
      return iv.page_id;
  }
  throw Error(Errc::OutOfSession, "t=" + fmt_num(t));
}

std::pair<double, double> page_to_clip(const SearchIndex& index, int page_id) {
  for (const auto& iv : index.page_intervals)
    if (iv.page_id == page_id)
      return {iv.start_t + index.video_offset, iv.end_t + index.video_offset};
  throw Error(Errc::UnknownPage, "page " + std::to_string(page_id));
}

std::vector<SearchIndex::Posting> search(const SearchIndex& index,
                                         const std::string& word) {
  const auto it = index.postings.find(upper(word));
  if (it == index.postings.end()) return {};
  return it->second;
}

std::string write_index(const SearchIndex& index) {
  std::string out = "infranotes-index v1\n";
  out += "offset " + fmt_num(index.video_offset) + '\n';
  for (const auto& iv : index.page_intervals)
    out += "page " + std::to_string(iv.page_id) + ' ' + fmt_num(iv.start_t) +
           ' ' + fmt_num(iv.end_t) + '\n';
  for (const auto& [word, posts] : index.postings)
    for (const auto& post : posts)
      out += "post " + word + ' ' + std::to_string(post.page_id) + ' ' +
             std::to_string(post.line_id) + ' ' + fmt_num(post.start_t) + '\n';
  return out;
}

SearchIndex parse_index(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  SearchIndex index;
  auto fail = [&line_no](const std::string& what) -> void {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!saw_header) {
      if (line != "infranotes-index v1") fail("expected index header");
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "offset") {
      if (!(ls >> index.video_offset)) fail("bad offset");
    } else if (kind == "page") {
      SearchIndex::PageInterval iv;
      if (!(ls >> iv.page_id >> iv.start_t >> iv.end_t)) fail("bad page");
      index.page_intervals.push_back(iv);
    } else if (kind == "post") {
      std::string word;
      SearchIndex::Posting post;
      if (!(ls >> word >> post.page_id >> post.line_id >> post.start_t))
        fail("bad post");
      index.postings[word].push_back(post);
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  if (!saw_header) throw Error(Errc::ParseError, "missing index header");
  return index;
}

}  // namespace infranotes
