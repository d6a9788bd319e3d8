/* Copyright 2026 The InfraNotes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the InfraNotes trajectory-processing library.
 *
 * Handles are opaque; every function returns an infn_status
 * (INFN_OK on success) and reports details through infn_last_error(),
 * which is thread-local.  Strings returned through char** out-parameters
 * are owned by the caller and released with infn_string_free().
 */

#ifndef INFRANOTES_INFRANOTES_H
#define INFRANOTES_INFRANOTES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infn_status {
  INFN_OK = 0,
  INFN_ERROR_INVALID_ARGUMENT = 1,
  INFN_ERROR_PARSE = 2,
  INFN_ERROR_DATA = 3,
  INFN_ERROR_IO = 4
} infn_status;

typedef struct infn_config infn_config;
typedef struct infn_series infn_series;
typedef struct infn_truth infn_truth;
typedef struct infn_notes infn_notes;

/* Compose the newest page version. */
#define INFN_AS_OF_LATEST (-1.0)

const char* infn_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* infn_last_error(void);

void infn_string_free(char* s);

/* -- configuration ------------------------------------------------------ */

infn_config* infn_config_new(void);
void infn_config_free(infn_config* cfg);
infn_status infn_config_set(infn_config* cfg, const char* key,
                            const char* value);
/* Applies key=value lines from a config file. */
infn_status infn_config_load(infn_config* cfg, const char* path);
/* All keys with current values, one key=value per line. */
infn_status infn_config_dump(const infn_config* cfg, char** out);

/* -- trajectory streams and ground truth -------------------------------- */

infn_status infn_series_read(const char* path, infn_series** out);
infn_status infn_series_write(const infn_series* series, const char* path);
void infn_series_free(infn_series* series);

infn_status infn_truth_read(const char* path, infn_truth** out);
infn_status infn_truth_write(const infn_truth* truth, const char* path);
void infn_truth_free(infn_truth* truth);

/* -- synthetic corpus ---------------------------------------------------- */

/* Letters A-Z, spaces, "\n" line breaks, "\f" page breaks.  Noise and
 * style come from the config (synth.* and noise.* keys). */
infn_status infn_synth_text(const char* text, const infn_config* cfg,
                            infn_series** out_series, infn_truth** out_truth);

/* Deterministic synthetic OCR candidate lists for a labeled session, in
 * the candidate-set v1 format. */
infn_status infn_truth_candidates(const infn_truth* truth,
                                  unsigned long long seed, char** out);

/* -- processing ---------------------------------------------------------- */

infn_status infn_process(const infn_series* series, const infn_config* cfg,
                         infn_notes** out);
/* Per-sample segmentation diagnostics (infranotes-trace v1). */
infn_status infn_segment_trace(const infn_series* series,
                               const infn_config* cfg, char** out);

infn_status infn_notes_save(const infn_notes* notes, const char* dir);
infn_status infn_notes_load(const char* dir, infn_notes** out);
void infn_notes_free(infn_notes* notes);

infn_status infn_notes_page_count(const infn_notes* notes, int* out);

/* SVG of one page (pages indexed from 1) as of a moment in seconds, or
 * INFN_AS_OF_LATEST. */
infn_status infn_render_page(const infn_notes* notes, int page_id,
                             double as_of, char** out_svg);

/* Hits as "page <id> line <id> t <seconds>" lines; empty string when the
 * word is absent. */
infn_status infn_search(const infn_notes* notes, const char* word,
                        char** out_hits);

/* Staged ablation over a labeled corpus directory; returns the
 * infranotes-eval v1 report. */
infn_status infn_eval_corpus(const char* corpus_dir, const infn_config* cfg,
                             char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* INFRANOTES_INFRANOTES_H */
