#ifndef PHONDUR_VOCAB_HPP
#define PHONDUR_VOCAB_HPP

#include <map>
#include <string>
#include <vector>

#include "phondur/types.hpp"

namespace phondur {

// Phone label <-> contiguous id mapping.
//
// Phone ids run 0..P-1 (sorted labels; includes kUnk when enabled).
// Two reserved ids share the value P in disjoint spaces: BOS on the input
// side (embedding rows = P+1, EOS is never an input) and EOS on the output
// side (softmax dimension = P+1, BOS is never predicted).
class Vocabulary {
 public:
  static constexpr const char* kUnk = "<unk>";

  Vocabulary() = default;
  static Vocabulary build(const std::vector<Utterance>& train, bool with_unk = true);
  static Vocabulary from_labels(std::vector<std::string> labels, bool with_unk = false);

  int n_phones() const { return static_cast<int>(phones_.size()); }
  int n_outputs() const { return n_phones() + 1; }  // phones + EOS
  int n_inputs() const { return n_phones() + 1; }   // phones + BOS
  int bos_id() const { return n_phones(); }
  int eos_id() const { return n_phones(); }
  bool has_unk() const { return unk_id_ >= 0; }
  int unk_id() const { return unk_id_; }

  // id for a label; unknown labels map to UNK when enabled, else -1.
  int id(const std::string& phone) const;
  const std::string& label(int id) const { return phones_[id]; }
  const std::vector<std::string>& labels() const { return phones_; }

  // Phone-id sequence for an utterance; counts tokens that hit UNK.
  std::vector<int> encode(const Utterance& u, long* unk_hits = nullptr) const;

 private:
  std::vector<std::string> phones_;  // sorted
  std::map<std::string, int> index_;
  int unk_id_ = -1;
};

}  // namespace phondur

#endif  // PHONDUR_VOCAB_HPP
