#ifndef PHONDUR_TYPES_HPP
#define PHONDUR_TYPES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace phondur {

enum class WordPosition { Initial, Medial, Final, Single };

const char* to_string(WordPosition p);
std::optional<WordPosition> word_position_from_string(const std::string& s);

// One aligned phone occurrence.
struct PhoneToken {
  std::string doculect;
  std::string language;  // ISO-639-3
  std::string family;
  std::string utterance_id;
  int index_in_utterance = 0;
  std::string phone;
  double duration_ms = 0.0;
  bool word_initial = false;  // the raw B/I mark from the token table
  WordPosition word_position = WordPosition::Medial;
  std::optional<double> surprisal_bits;
};

struct Utterance {
  std::string utterance_id;
  std::string doculect;
  std::vector<PhoneToken> tokens;
  std::optional<double> mcd;

  // Qualified id used in split manifests; doculects must not contain '/'.
  std::string key() const { return doculect + "/" + utterance_id; }
};

// Disjoint train/dev/test partition over utterance keys.
struct CorpusSplit {
  std::vector<std::string> train, dev, test;
  uint64_t seed = 0;

  enum class Part { Train, Dev, Test, None };
  Part part_of(const std::string& key) const;
  void build_index();  // call after filling the vectors by hand

 private:
  std::unordered_set<std::string> train_set_, dev_set_, test_set_;
};

struct Inventory {
  std::string doculect;
  std::vector<std::string> phones;       // sorted
  std::map<std::string, long> counts;    // phone -> occurrence count
  size_t size() const { return phones.size(); }
};

}  // namespace phondur

#endif  // PHONDUR_TYPES_HPP
