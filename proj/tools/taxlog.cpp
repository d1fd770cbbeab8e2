// Copyright 2026 The Taxlog Authors
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

// taxlog — statutory reasoning over the SARA corpus.
//
// Subcommands (growing as the library lands):
//   stats   corpus statistics: statute tree, language figures,
//           cross-reference counts
//
// Exit codes: 0 success; 1 negative answer (query-style commands);
// 2 usage or input error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "taxlog/statutes.hpp"

namespace {

std::string repo_dir() {
#ifdef TAXLOG_REPO_DIR
  return TAXLOG_REPO_DIR;
#else
  return ".";
#endif
}

int run_stats(const std::string& data_dir) {
  namespace st = taxlog::statutes;
  auto sections = st::load_statutes(data_dir + "/statutes/source");

  st::TreeStats ts = st::tree_stats(sections);
  std::printf("statute tree\n");
  std::printf("  nodes: %d\n  leaves: %d\n  median node depth: %.1f\n",
              ts.nodes, ts.leaves, ts.median_node_depth);
  std::printf("  node depth histogram:");
  for (const auto& [d, c] : ts.node_depths) std::printf(" %d:%d", d, c);
  std::printf("\n  leaf depth histogram:");
  for (const auto& [d, c] : ts.leaf_depths) std::printf(" %d:%d", d, c);
  std::printf("\n  nodes per section:");
  for (const auto& n : st::section_numbers())
    std::printf(" %s:%d", n.c_str(), ts.nodes_per_section.at(n));
  std::printf("\n");

  st::LangStats ls = st::lang_stats(sections);
  std::printf("statute language\n");
  std::printf("  words per section:");
  for (const auto& n : st::section_numbers())
    std::printf(" %s:%d", n.c_str(), ls.words_per_section.at(n));
  std::vector<int> wc;
  for (const auto& [k, v] : ls.words_per_section) wc.push_back(v);
  std::printf("\n  section words: sum %d  min %d  max %d  median %.1f  "
              "std %.2f\n",
              ls.total_words(),
              *std::min_element(wc.begin(), wc.end()),
              *std::max_element(wc.begin(), wc.end()), st::median_of(wc),
              st::pstdev_of(wc));
  const auto& sl = ls.sentence_lengths;
  std::printf("  sentences: n %d  mean %.2f  min %d  max %d  median %.1f  "
              "std %.2f\n",
              ls.total_sentences(), st::mean_of(sl),
              *std::min_element(sl.begin(), sl.end()),
              *std::max_element(sl.begin(), sl.end()), st::median_of(sl),
              st::pstdev_of(sl));
  std::printf("  vocabulary: %zu\n", ls.vocabulary.size());
  std::printf("  tokenization: lowercased whitespace tokens, punctuation "
              "retained; structural markers stripped\n");

  auto refs = st::load_cross_references(data_dir +
                                        "/statutes/cross_references.tsv");
  auto counts = st::xref_kind_presence(refs);
  std::printf("cross-references (subsections containing >=1 of kind)\n");
  std::printf("  explicit within-section: %d\n  implicit within-section: %d\n"
              "  explicit cross-section: %d\n  implicit cross-section: %d\n",
              counts["ew"], counts["iw"], counts["ec"], counts["ic"]);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taxlog — statutory reasoning over the SARA corpus"};
  app.require_subcommand(1);

  std::string data_dir = repo_dir() + "/data";

  auto* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("--data", data_dir, "data directory root");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) return run_stats(data_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "taxlog: %s\n", e.what());
    return 2;
  }
  return 2;
}
