#include "phondur/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "phondur/error.hpp"
#include "phondur/rng.hpp"

namespace phondur {

const char* to_string(WordPosition p) {
  switch (p) {
    case WordPosition::Initial: return "initial";
    case WordPosition::Medial: return "medial";
    case WordPosition::Final: return "final";
    case WordPosition::Single: return "single";
  }
  return "?";
}

std::optional<WordPosition> word_position_from_string(const std::string& s) {
  if (s == "initial") return WordPosition::Initial;
  if (s == "medial") return WordPosition::Medial;
  if (s == "final") return WordPosition::Final;
  if (s == "single") return WordPosition::Single;
  return std::nullopt;
}

CorpusSplit::Part CorpusSplit::part_of(const std::string& key) const {
  if (train_set_.count(key)) return Part::Train;
  if (dev_set_.count(key)) return Part::Dev;
  if (test_set_.count(key)) return Part::Test;
  return Part::None;
}

void CorpusSplit::build_index() {
  train_set_ = {train.begin(), train.end()};
  dev_set_ = {dev.begin(), dev.end()};
  test_set_ = {test.begin(), test.end()};
}

}  // namespace phondur

namespace phondur::corpus {

const char* kTokenTableHeader =
    "doculect\tlanguage\tfamily\tutterance_id\tindex\tphone\tduration_ms\tword_boundary";

namespace {

// Shortest representation that round-trips, via to_chars.
std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s, const std::string& where, long lineno) {
  double v;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError(where + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const std::string& where, long lineno) {
  long v;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError(where + ":" + std::to_string(lineno) + ": bad integer '" + s + "'");
  return v;
}

void tag_one_word(std::vector<PhoneToken>& toks, int start, int end) {
  // [start, end) is one word
  if (end - start == 1) {
    toks[start].word_position = WordPosition::Single;
    return;
  }
  toks[start].word_position = WordPosition::Initial;
  toks[end - 1].word_position = WordPosition::Final;
  for (int i = start + 1; i < end - 1; ++i) toks[i].word_position = WordPosition::Medial;
}

}  // namespace

std::vector<Utterance> ingest(const std::string& path, TableFormat format) {
  if (format != TableFormat::Tsv) throw ConfigError("ingest: unknown table format");
  std::ifstream in(path);
  if (!in) throw ParseError("ingest: cannot open '" + path + "'");
  return ingest_stream(in, path);
}

std::vector<Utterance> ingest_stream(std::istream& in, const std::string& name) {
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) throw ParseError(name + ": empty file");
  ++lineno;
  if (line != kTokenTableHeader)
    throw ParseError(name + ":1: unexpected header (want '" + std::string(kTokenTableHeader) + "')");

  // key -> utterance, filled in input order then re-sorted
  std::map<std::pair<std::string, std::string>, Utterance> utts;
  std::set<std::pair<std::string, long>> seen;  // (key, index) duplicates

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_tabs(line);
    bool with_surprisal = f.size() == 9;
    if (f.size() != 8 && !with_surprisal)
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected 8 columns, got " +
                       std::to_string(f.size()));
    PhoneToken t;
    t.doculect = f[0];
    t.language = f[1];
    t.family = f[2];
    t.utterance_id = f[3];
    if (t.doculect.find('/') != std::string::npos)
      throw ValidationError(name + ":" + std::to_string(lineno) + ": doculect id contains '/'");
    long idx = parse_long(f[4], name, lineno);
    if (idx < 0)
      throw ValidationError(name + ":" + std::to_string(lineno) + ": negative index");
    t.index_in_utterance = static_cast<int>(idx);
    t.phone = f[5];
    if (t.phone.empty())
      throw ParseError(name + ":" + std::to_string(lineno) + ": empty phone label");
    t.duration_ms = parse_double(f[6], name, lineno);
    if (!(t.duration_ms > 0.0))
      throw ValidationError(name + ":" + std::to_string(lineno) + ": nonpositive duration_ms '" +
                            f[6] + "'");
    if (f[7] == "B")
      t.word_initial = true;
    else if (f[7] == "I")
      t.word_initial = false;
    else
      throw ParseError(name + ":" + std::to_string(lineno) + ": word_boundary must be B or I, got '" +
                       f[7] + "'");
    if (with_surprisal) {
      double s = parse_double(f[8], name, lineno);
      if (s < 0.0)
        throw ValidationError(name + ":" + std::to_string(lineno) + ": negative surprisal_bits");
      t.surprisal_bits = s;
    }

    auto key = std::make_pair(t.doculect, t.utterance_id);
    if (!seen.insert({key.first + "/" + key.second, idx}).second)
      throw ValidationError(name + ":" + std::to_string(lineno) + ": duplicate (utterance_id, index) = (" +
                            t.utterance_id + ", " + std::to_string(idx) + ")");
    auto& u = utts[key];
    if (u.tokens.empty()) {
      u.utterance_id = t.utterance_id;
      u.doculect = t.doculect;
    }
    u.tokens.push_back(std::move(t));
  }

  std::vector<Utterance> out;
  out.reserve(utts.size());
  for (auto& [key, u] : utts) {
    std::sort(u.tokens.begin(), u.tokens.end(),
              [](const PhoneToken& a, const PhoneToken& b) {
                return a.index_in_utterance < b.index_in_utterance;
              });
    for (size_t i = 0; i < u.tokens.size(); ++i) {
      if (u.tokens[i].index_in_utterance != static_cast<int>(i))
        throw ValidationError(name + ": utterance '" + u.key() +
                              "': indices must be gapless from 0 (missing " + std::to_string(i) + ")");
    }
    out.push_back(std::move(u));
  }

  tag_word_positions(out, boundaries_from_marks(out));
  return out;
}

void write_token_table(std::ostream& out, const std::vector<Utterance>& utts, bool with_surprisal) {
  out << kTokenTableHeader;
  if (with_surprisal) out << "\tsurprisal_bits";
  out << '\n';
  for (const auto& u : utts) {
    for (const auto& t : u.tokens) {
      out << t.doculect << '\t' << t.language << '\t' << t.family << '\t' << t.utterance_id << '\t'
          << t.index_in_utterance << '\t' << t.phone << '\t' << fmt_double(t.duration_ms) << '\t'
          << (t.word_initial ? 'B' : 'I');
      if (with_surprisal) {
        if (!t.surprisal_bits)
          throw ValidationError("write_token_table: token without surprisal in annotated output (" +
                                u.key() + ")");
        out << '\t' << fmt_double(*t.surprisal_bits);
      }
      out << '\n';
    }
  }
}

void write_token_table(const std::string& path, const std::vector<Utterance>& utts,
                       bool with_surprisal) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_token_table: cannot open '" + path + "'");
  write_token_table(out, utts, with_surprisal);
}

void attach_mcd(std::vector<Utterance>& utts, const std::string& mcd_path) {
  std::ifstream in(mcd_path);
  if (!in) throw ParseError("attach_mcd: cannot open '" + mcd_path + "'");
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) throw ParseError(mcd_path + ": empty file");
  ++lineno;
  if (line != "utterance_id\tmcd")
    throw ParseError(mcd_path + ":1: unexpected header (want 'utterance_id\\tmcd')");
  std::map<std::string, double> scores;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_tabs(line);
    if (f.size() != 2)
      throw ParseError(mcd_path + ":" + std::to_string(lineno) + ": expected 2 columns");
    double v = parse_double(f[1], mcd_path, lineno);
    if (v < 0.0)
      throw ValidationError(mcd_path + ":" + std::to_string(lineno) + ": negative MCD");
    scores[f[0]] = v;
  }
  for (auto& u : utts) {
    auto it = scores.find(u.utterance_id);
    if (it != scores.end()) u.mcd = it->second;
  }
}

void write_mcd_table(const std::string& path, const std::vector<Utterance>& utts) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_mcd_table: cannot open '" + path + "'");
  out << "utterance_id\tmcd\n";
  for (const auto& u : utts)
    if (u.mcd) out << u.utterance_id << '\t' << fmt_double(*u.mcd) << '\n';
}

McdFilterResult filter_mcd(std::vector<Utterance> utts, double threshold) {
  if (threshold < 0.0) throw ValidationError("filter_mcd: threshold must be >= 0");
  McdFilterResult r;
  for (auto& u : utts) {
    if (!u.mcd) {
      ++r.missing_mcd;
      r.kept.push_back(std::move(u));
    } else if (*u.mcd <= threshold) {
      r.kept.push_back(std::move(u));
    } else {
      ++r.dropped;
    }
  }
  return r;
}

WordBoundaries boundaries_from_marks(const std::vector<Utterance>& utts) {
  WordBoundaries b;
  for (const auto& u : utts) {
    std::vector<int> starts;
    for (size_t i = 0; i < u.tokens.size(); ++i)
      if (u.tokens[i].word_initial || i == 0) starts.push_back(static_cast<int>(i));
    b[u.key()] = std::move(starts);
  }
  return b;
}

void tag_word_positions(std::vector<Utterance>& utts, const WordBoundaries& boundaries) {
  for (auto& u : utts) {
    auto it = boundaries.find(u.key());
    if (it == boundaries.end())
      throw ValidationError("tag_word_positions: no boundaries for utterance '" + u.key() + "'");
    const auto& starts = it->second;
    int n = static_cast<int>(u.tokens.size());
    if (starts.empty() || starts.front() != 0)
      throw ValidationError("tag_word_positions: utterance '" + u.key() +
                            "': first boundary must be index 0");
    for (size_t k = 0; k < starts.size(); ++k) {
      int s = starts[k];
      if (s < 0 || s >= n)
        throw ValidationError("tag_word_positions: utterance '" + u.key() + "': boundary index " +
                              std::to_string(s) + " out of range");
      if (k > 0 && starts[k - 1] >= s)
        throw ValidationError("tag_word_positions: utterance '" + u.key() +
                              "': boundary indices must be strictly increasing");
      int e = (k + 1 < starts.size()) ? starts[k + 1] : n;
      tag_one_word(u.tokens, s, e);
      u.tokens[s].word_initial = true;
      for (int i = s + 1; i < e; ++i) u.tokens[i].word_initial = false;
    }
  }
}

CorpusSplit split(const std::vector<Utterance>& utts, double train_ratio, double dev_ratio,
                  double test_ratio, uint64_t seed) {
  if (train_ratio < 0 || dev_ratio < 0 || test_ratio < 0 ||
      std::abs(train_ratio + dev_ratio + test_ratio - 1.0) > 1e-9)
    throw ConfigError("split: ratios must be nonnegative and sum to 1");

  // doculect -> sorted utterance keys
  std::map<std::string, std::vector<std::string>> per_doc;
  for (const auto& u : utts) per_doc[u.doculect].push_back(u.key());

  CorpusSplit out;
  out.seed = seed;
  for (auto& [doc, keys] : per_doc) {
    if (keys.size() < 3)
      throw ValidationError("split: doculect '" + doc + "' has only " +
                            std::to_string(keys.size()) + " utterances (need >= 3)");
    std::sort(keys.begin(), keys.end());
    Rng rng(Rng::derive(seed, doc));
    rng.shuffle(keys);
    size_t n = keys.size();
    auto round_half_up = [](double x) { return static_cast<size_t>(std::floor(x + 0.5)); };
    size_t n_train = round_half_up(train_ratio * n);
    size_t n_dev = round_half_up(dev_ratio * n);
    if (n_train + n_dev > n) n_dev = n - n_train;
    size_t n_test = n - n_train - n_dev;
    (void)n_test;
    for (size_t i = 0; i < n; ++i) {
      if (i < n_train)
        out.train.push_back(keys[i]);
      else if (i < n_train + n_dev)
        out.dev.push_back(keys[i]);
      else
        out.test.push_back(keys[i]);
    }
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.dev.begin(), out.dev.end());
  std::sort(out.test.begin(), out.test.end());
  out.build_index();
  return out;
}

std::string splits_to_json(const CorpusSplit& s) {
  nlohmann::json j;
  j["train"] = s.train;
  j["dev"] = s.dev;
  j["test"] = s.test;
  j["seed"] = s.seed;
  return j.dump(2);
}

CorpusSplit splits_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  CorpusSplit s;
  s.train = j.at("train").get<std::vector<std::string>>();
  s.dev = j.at("dev").get<std::vector<std::string>>();
  s.test = j.at("test").get<std::vector<std::string>>();
  s.seed = j.at("seed").get<uint64_t>();
  s.build_index();
  return s;
}

void write_splits_json(const std::string& path, const CorpusSplit& s) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_splits_json: cannot open '" + path + "'");
  out << splits_to_json(s) << '\n';
}

CorpusSplit read_splits_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("read_splits_json: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return splits_from_json(ss.str());
}

Inventory build_inventory(const std::vector<Utterance>& utts) {
  if (utts.empty()) throw ValidationError("build_inventory: empty utterance set");
  Inventory inv;
  inv.doculect = utts.front().doculect;
  for (const auto& u : utts) {
    if (u.doculect != inv.doculect)
      throw ValidationError("build_inventory: mixed doculects (use build_inventories)");
    for (const auto& t : u.tokens) ++inv.counts[t.phone];
  }
  for (const auto& [phone, c] : inv.counts) inv.phones.push_back(phone);
  return inv;
}

std::map<std::string, Inventory> build_inventories(const std::vector<Utterance>& utts) {
  std::map<std::string, std::vector<Utterance>> groups;
  for (const auto& u : utts) groups[u.doculect].push_back(u);
  std::map<std::string, Inventory> out;
  for (auto& [doc, g] : groups) out[doc] = build_inventory(g);
  return out;
}

std::vector<Utterance> of_doculect(const std::vector<Utterance>& utts, const std::string& doc) {
  std::vector<Utterance> out;
  for (const auto& u : utts)
    if (u.doculect == doc) out.push_back(u);
  return out;
}

std::vector<std::string> doculects(const std::vector<Utterance>& utts) {
  std::set<std::string> s;
  for (const auto& u : utts) s.insert(u.doculect);
  return {s.begin(), s.end()};
}

std::vector<Utterance> select(const std::vector<Utterance>& utts,
                              const std::vector<std::string>& keys) {
  std::set<std::string> want(keys.begin(), keys.end());
  std::vector<Utterance> out;
  for (const auto& u : utts)
    if (want.count(u.key())) out.push_back(u);
  return out;
}

long count_tokens(const std::vector<Utterance>& utts) {
  long n = 0;
  for (const auto& u : utts) n += static_cast<long>(u.tokens.size());
  return n;
}

}  // namespace phondur::corpus
