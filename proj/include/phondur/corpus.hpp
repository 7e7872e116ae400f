#ifndef PHONDUR_CORPUS_HPP
#define PHONDUR_CORPUS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phondur/types.hpp"

namespace phondur::corpus {

enum class TableFormat { Tsv };

// Token-table columns, tab separated, one row per phone token:
//   doculect language family utterance_id index phone duration_ms word_boundary
// word_boundary is B for word-initial tokens and I otherwise.
extern const char* kTokenTableHeader;

// Parse a token table. Utterances come back grouped and ordered by
// (doculect, utterance_id, index_in_utterance). Word positions are derived
// from the B/I marks on the way in.
std::vector<Utterance> ingest(const std::string& path, TableFormat format = TableFormat::Tsv);
std::vector<Utterance> ingest_stream(std::istream& in, const std::string& name);

void write_token_table(const std::string& path, const std::vector<Utterance>& utts,
                       bool with_surprisal = false);
void write_token_table(std::ostream& out, const std::vector<Utterance>& utts,
                       bool with_surprisal = false);

// MCD table: TSV with header "utterance_id mcd". Scores attach by id;
// ids not present in the corpus are ignored.
void attach_mcd(std::vector<Utterance>& utts, const std::string& mcd_path);
void write_mcd_table(const std::string& path, const std::vector<Utterance>& utts);

struct McdFilterResult {
  std::vector<Utterance> kept;
  long dropped = 0;
  long missing_mcd = 0;  // retained but unscored, reported as a warning
};
McdFilterResult filter_mcd(std::vector<Utterance> utts, double threshold = 7.0);

// Explicit word-start indices per utterance key. Index 0 must be present
// and indices must be sorted, in range, and unique.
using WordBoundaries = std::map<std::string, std::vector<int>>;

WordBoundaries boundaries_from_marks(const std::vector<Utterance>& utts);
void tag_word_positions(std::vector<Utterance>& utts, const WordBoundaries& boundaries);

// Deterministic per-doculect 80/10/10 partition at utterance granularity.
// Utterance keys are sorted lexicographically before the seeded shuffle, so
// the result does not depend on input order or platform.
CorpusSplit split(const std::vector<Utterance>& utts,
                  double train_ratio = 0.8, double dev_ratio = 0.1, double test_ratio = 0.1,
                  uint64_t seed = 0);

std::string splits_to_json(const CorpusSplit& s);
CorpusSplit splits_from_json(const std::string& json_text);
void write_splits_json(const std::string& path, const CorpusSplit& s);
CorpusSplit read_splits_json(const std::string& path);

Inventory build_inventory(const std::vector<Utterance>& single_doculect_utts);
std::map<std::string, Inventory> build_inventories(const std::vector<Utterance>& utts);

// Utterances of one doculect, preserving order.
std::vector<Utterance> of_doculect(const std::vector<Utterance>& utts, const std::string& doculect);
std::vector<std::string> doculects(const std::vector<Utterance>& utts);

// Select utterances whose key is in the given list.
std::vector<Utterance> select(const std::vector<Utterance>& utts,
                              const std::vector<std::string>& keys);

long count_tokens(const std::vector<Utterance>& utts);

}  // namespace phondur::corpus

#endif  // PHONDUR_CORPUS_HPP
