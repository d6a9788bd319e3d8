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

#include "infranotes/infranotes.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "config.hpp"
#include "pipeline.hpp"

using namespace infranotes;

struct infn_config {
  Config cfg;
};
struct infn_series {
  SampleSeries series;
};
struct infn_truth {
  GroundTruth truth;
};
struct infn_notes {
  ProcessResult result;  // events may be empty for loaded notes
};

namespace {

thread_local std::string g_last_error;

infn_status to_status(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return INFN_ERROR_PARSE;
    case Errc::IoError:
      return INFN_ERROR_IO;
    case Errc::InvalidArgument:
      return INFN_ERROR_INVALID_ARGUMENT;
    default:
      return INFN_ERROR_DATA;
  }
}

template <typename Fn>
infn_status guard(Fn&& fn) {
  try {
    fn();
    return INFN_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return INFN_ERROR_DATA;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

infn_status invalid(const char* what) {
  g_last_error = what;
  return INFN_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* infn_version(void) { return "0.1.0"; }

const char* infn_last_error(void) { return g_last_error.c_str(); }

void infn_string_free(char* s) { std::free(s); }

infn_config* infn_config_new(void) { return new infn_config{}; }

void infn_config_free(infn_config* cfg) { delete cfg; }

infn_status infn_config_set(infn_config* cfg, const char* key,
                            const char* value) {
  if (!cfg || !key || !value) return invalid("null argument");
  return guard([&] { cfg->cfg.set(key, value); });
}

infn_status infn_config_load(infn_config* cfg, const char* path) {
  if (!cfg || !path) return invalid("null argument");
  return guard([&] { cfg->cfg.load(read_file(path)); });
}

infn_status infn_config_dump(const infn_config* cfg, char** out) {
  if (!cfg || !out) return invalid("null argument");
  return guard([&] { *out = copy_string(cfg->cfg.dump()); });
}

infn_status infn_series_read(const char* path, infn_series** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] {
    auto* handle = new infn_series{parse_stream(read_file(path))};
    handle->series.source_id = std::filesystem::path(path).stem().string();
    *out = handle;
  });
}

infn_status infn_series_write(const infn_series* series, const char* path) {
  if (!series || !path) return invalid("null argument");
  return guard([&] { write_file(path, write_stream(series->series)); });
}

void infn_series_free(infn_series* series) { delete series; }

infn_status infn_truth_read(const char* path, infn_truth** out) {
  if (!path || !out) return invalid("null argument");
  return guard([&] { *out = new infn_truth{parse_truth(read_file(path))}; });
}

infn_status infn_truth_write(const infn_truth* truth, const char* path) {
  if (!truth || !path) return invalid("null argument");
  return guard([&] { write_file(path, write_truth(truth->truth)); });
}

void infn_truth_free(infn_truth* truth) { delete truth; }

infn_status infn_synth_text(const char* text, const infn_config* cfg,
                            infn_series** out_series,
                            infn_truth** out_truth) {
  if (!text || !cfg || !out_series || !out_truth)
    return invalid("null argument");
  return guard([&] {
    SynthResult result = synth_text(text, cfg->cfg.style);
    result.series = add_noise(result.series, cfg->cfg.noise);
    result.series.source_id = "synth";
    *out_series = new infn_series{std::move(result.series)};
    *out_truth = new infn_truth{std::move(result.truth)};
  });
}

infn_status infn_truth_candidates(const infn_truth* truth,
                                  unsigned long long seed, char** out) {
  if (!truth || !out) return invalid("null argument");
  return guard([&] {
    *out = copy_string(write_candidate_set(
        make_candidates(truth->truth, PrimitiveTable::builtin(),
                        StrokeCountTable::builtin(), seed)));
  });
}

infn_status infn_process(const infn_series* series, const infn_config* cfg,
                         infn_notes** out) {
  if (!series || !cfg || !out) return invalid("null argument");
  return guard([&] {
    *out = new infn_notes{process(series->series, cfg->cfg)};
  });
}

infn_status infn_segment_trace(const infn_series* series,
                               const infn_config* cfg, char** out) {
  if (!series || !cfg || !out) return invalid("null argument");
  return guard([&] {
    *out = copy_string(segment_trace(series->series, cfg->cfg.segment));
  });
}

infn_status infn_notes_save(const infn_notes* notes, const char* dir) {
  if (!notes || !dir) return invalid("null argument");
  return guard([&] { save_notes_dir(notes->result, dir); });
}

infn_status infn_notes_load(const char* dir, infn_notes** out) {
  if (!dir || !out) return invalid("null argument");
  return guard([&] {
    *out = new infn_notes{ProcessResult{load_notes_dir(dir), {}}};
  });
}

void infn_notes_free(infn_notes* notes) { delete notes; }

infn_status infn_notes_page_count(const infn_notes* notes, int* out) {
  if (!notes || !out) return invalid("null argument");
  *out = static_cast<int>(notes->result.notes.pages.size());
  return INFN_OK;
}

infn_status infn_render_page(const infn_notes* notes, int page_id,
                             double as_of, char** out_svg) {
  if (!notes || !out_svg) return invalid("null argument");
  return guard([&] {
    const Page* page = nullptr;
    for (const Page& p : notes->result.notes.pages)
      if (p.id == page_id) page = &p;
    if (!page)
      throw Error(Errc::UnknownPage, "page " + std::to_string(page_id));
    const double t = as_of < 0 ? kLatest : as_of;
    *out_svg = copy_string(render_svg(compose_page(*page, t), RenderStyle{}));
  });
}

infn_status infn_search(const infn_notes* notes, const char* word,
                        char** out_hits) {
  if (!notes || !word || !out_hits) return invalid("null argument");
  return guard([&] {
    const SearchIndex index = build_index(notes->result.notes);
    std::string hits;
    for (const auto& post : search(index, word))
      hits += "page " + std::to_string(post.page_id) + " line " +
              std::to_string(post.line_id) + " t " + fmt_num(post.start_t) +
              '\n';
    *out_hits = copy_string(hits);
  });
}

infn_status infn_eval_corpus(const char* corpus_dir, const infn_config* cfg,
                             char** out_report) {
  if (!corpus_dir || !cfg || !out_report) return invalid("null argument");
  return guard([&] {
    const EvalReport report = run_eval(load_corpus(corpus_dir), cfg->cfg);
    *out_report = copy_string(write_eval_report(report));
  });
}

}  // extern "C"
