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
//
// Command-line front end.  Talks to the library exclusively through the
// shared C API in infranotes/infranotes.h.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "infranotes/infranotes.h"

namespace fs = std::filesystem;

namespace {

struct ConfigDeleter {
  void operator()(infn_config* p) const { infn_config_free(p); }
};
struct SeriesDeleter {
  void operator()(infn_series* p) const { infn_series_free(p); }
};
struct TruthDeleter {
  void operator()(infn_truth* p) const { infn_truth_free(p); }
};
struct NotesDeleter {
  void operator()(infn_notes* p) const { infn_notes_free(p); }
};

using ConfigPtr = std::unique_ptr<infn_config, ConfigDeleter>;
using SeriesPtr = std::unique_ptr<infn_series, SeriesDeleter>;
using TruthPtr = std::unique_ptr<infn_truth, TruthDeleter>;
using NotesPtr = std::unique_ptr<infn_notes, NotesDeleter>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { infn_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

[[noreturn]] void die(const std::string& context) {
  std::cerr << "infranotes: " << context << ": " << infn_last_error() << "\n";
  std::exit(1);
}

void check(infn_status status, const std::string& context) {
  if (status != INFN_OK) die(context);
}

// Turns literal "\n" and "\f" escapes from the shell into control chars.
std::string unescape(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size()) {
      if (text[i + 1] == 'n') {
        out += '\n';
        ++i;
        continue;
      }
      if (text[i + 1] == 'f') {
        out += '\f';
        ++i;
        continue;
      }
    }
    out += text[i];
  }
  return out;
}

ConfigPtr make_config(const std::string& config_path) {
  ConfigPtr cfg(infn_config_new());
  if (!config_path.empty())
    check(infn_config_load(cfg.get(), config_path.c_str()), config_path);
  return cfg;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "infranotes: cannot write " << path << "\n";
    std::exit(1);
  }
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"InfraNotes: handwritten trajectory processing"};
  app.require_subcommand(0, 1);
  bool print_config = false;
  app.add_flag("--print-config", print_config,
               "print all config keys with defaults and exit");

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic session");
  std::string synth_text_arg, synth_out;
  double spacing = 10.0, tilt = 0.0, sigma_xy = 0.35, sigma_z = 0.14;
  unsigned long long seed = 1;
  bool with_candidates = false;
  synth->add_option("--text", synth_text_arg, "letters A-Z, space, \\n, \\f")
      ->required();
  synth->add_option("-o,--out", synth_out, "output directory")->required();
  synth->add_option("--spacing", spacing, "letter spacing, mm");
  synth->add_option("--tilt", tilt, "per-glyph tilt, degrees");
  synth->add_option("--sigma-xy", sigma_xy, "board-plane noise, mm");
  synth->add_option("--sigma-z", sigma_z, "depth noise, mm");
  synth->add_option("--seed", seed, "noise seed");
  synth->add_flag("--with-candidates", with_candidates,
                  "also write synthetic OCR candidate lists");

  // process
  auto* process = app.add_subcommand("process", "stream -> notes directory");
  std::string process_stream, process_out, process_config, process_trace;
  process->add_option("stream", process_stream, "stream.v1 file")->required();
  process->add_option("-o,--out", process_out, "notes directory")->required();
  process->add_option("--config", process_config, "key=value config file");
  process->add_option("--trace", process_trace,
                      "write per-sample segmentation diagnostics here");

  // eval
  auto* eval = app.add_subcommand("eval", "staged ablation on a labeled corpus");
  std::string eval_corpus, eval_config;
  eval->add_option("--corpus", eval_corpus, "session dir or dir of sessions")
      ->required();
  eval->add_option("--config", eval_config, "key=value config file");

  // render
  auto* render = app.add_subcommand("render", "compose one page as SVG");
  std::string render_dir, render_out;
  int render_page = 1;
  double as_of = INFN_AS_OF_LATEST;
  render->add_option("notesdir", render_dir, "notes directory")->required();
  render->add_option("--page", render_page, "page id (from 1)");
  render->add_option("--as-of", as_of, "compose as of this time, seconds");
  render->add_option("-o,--out", render_out, "output file (default stdout)");

  // search
  auto* search = app.add_subcommand("search", "keyword lookup in notes");
  std::string search_dir, search_word;
  search->add_option("notesdir", search_dir, "notes directory")->required();
  search->add_option("word", search_word, "exact word to find")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (print_config) {
    ConfigPtr cfg(infn_config_new());
    OwnedString dump;
    check(infn_config_dump(cfg.get(), &dump.ptr), "config");
    std::cout << dump.str();
    return 0;
  }

  if (synth->parsed()) {
    ConfigPtr cfg(infn_config_new());
    auto set = [&](const char* key, const std::string& value) {
      check(infn_config_set(cfg.get(), key, value.c_str()), key);
    };
    set("synth.spacing", std::to_string(spacing));
    set("synth.tilt_deg", std::to_string(tilt));
    set("noise.sigma_xy", std::to_string(sigma_xy));
    set("noise.sigma_z", std::to_string(sigma_z));
    set("noise.seed", std::to_string(seed));

    infn_series* series = nullptr;
    infn_truth* truth = nullptr;
    check(infn_synth_text(unescape(synth_text_arg).c_str(), cfg.get(),
                          &series, &truth),
          "synth");
    SeriesPtr series_ptr(series);
    TruthPtr truth_ptr(truth);
    fs::create_directories(synth_out);
    check(infn_series_write(series, (fs::path(synth_out) / "stream.v1").c_str()),
          "write stream");
    check(infn_truth_write(truth, (fs::path(synth_out) / "truth.v1").c_str()),
          "write truth");
    if (with_candidates) {
      OwnedString cands;
      check(infn_truth_candidates(truth, seed, &cands.ptr), "candidates");
      write_output((fs::path(synth_out) / "candidates.v1").string(),
                   cands.str());
    }
    return 0;
  }

  if (process->parsed()) {
    ConfigPtr cfg = make_config(process_config);
    infn_series* series = nullptr;
    check(infn_series_read(process_stream.c_str(), &series), process_stream);
    SeriesPtr series_ptr(series);
    if (!process_trace.empty()) {
      OwnedString trace;
      check(infn_segment_trace(series, cfg.get(), &trace.ptr), "trace");
      write_output(process_trace, trace.str());
    }
    infn_notes* notes = nullptr;
    check(infn_process(series, cfg.get(), &notes), "process");
    NotesPtr notes_ptr(notes);
    check(infn_notes_save(notes, process_out.c_str()), process_out);
    return 0;
  }

  if (eval->parsed()) {
    ConfigPtr cfg = make_config(eval_config);
    OwnedString report;
    check(infn_eval_corpus(eval_corpus.c_str(), cfg.get(), &report.ptr),
          eval_corpus);
    std::cout << report.str();
    return 0;
  }

  if (render->parsed()) {
    infn_notes* notes = nullptr;
    check(infn_notes_load(render_dir.c_str(), &notes), render_dir);
    NotesPtr notes_ptr(notes);
    OwnedString svg;
    check(infn_render_page(notes, render_page, as_of, &svg.ptr), "render");
    write_output(render_out, svg.str());
    return 0;
  }

  if (search->parsed()) {
    infn_notes* notes = nullptr;
    check(infn_notes_load(search_dir.c_str(), &notes), search_dir);
    NotesPtr notes_ptr(notes);
    OwnedString hits;
    check(infn_search(notes, search_word.c_str(), &hits.ptr), "search");
    std::cout << hits.str();
    return 0;
  }

  std::cout << app.help();
  return 0;
}
