#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cubetor {

/// One line of the append-only result store: the outcome of a conjecture
/// check on one graph.
struct ResultRecord {
  std::string graph_hash;
  std::string word;
  std::string assignment;
  int k = 0;
  int nvars = 0;
  std::string n_series;  // JSON array of {i, display}
  std::string q_series;
  std::string verdict;
  std::string field;
  int D = 0;
  std::string timestamp;
  double runtime_s = 0.0;

  std::string to_json_line() const;
  static std::optional<ResultRecord> from_json_line(const std::string& line);
};

struct StoreFilter {
  std::optional<std::string> graph_hash;
  std::optional<std::string> verdict;
  std::optional<std::string> word;
};

/// Line-delimited JSON, append-only. Reads skip corrupt lines with a warning
/// count; writes are serialized through one mutex and flushed per record.
class ResultStore {
public:
  explicit ResultStore(std::filesystem::path path);

  void append(const ResultRecord& r);
  std::vector<ResultRecord> query(const StoreFilter& f = {}) const;
  int corrupt_lines_skipped() const { return corrupt_; }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  mutable int corrupt_ = 0;
};

std::string now_iso8601();

}  // namespace cubetor
