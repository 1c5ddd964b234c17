#include "cubetor/store.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace cubetor {

using nlohmann::json;

std::string now_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string ResultRecord::to_json_line() const {
  json j;
  j["hash"] = graph_hash;
  j["word"] = word;
  j["assignment"] = assignment;
  j["k"] = k;
  j["nvars"] = nvars;
  j["n"] = n_series;
  j["q"] = q_series;
  j["verdict"] = verdict;
  j["field"] = field;
  j["D"] = D;
  j["ts"] = timestamp;
  j["runtime_s"] = runtime_s;
  return j.dump();
}

std::optional<ResultRecord> ResultRecord::from_json_line(const std::string& line) {
  try {
    json j = json::parse(line);
    ResultRecord r;
    r.graph_hash = j.at("hash").get<std::string>();
    r.word = j.at("word").get<std::string>();
    r.assignment = j.at("assignment").get<std::string>();
    r.k = j.at("k").get<int>();
    r.nvars = j.at("nvars").get<int>();
    r.n_series = j.at("n").get<std::string>();
    r.q_series = j.at("q").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.D = j.at("D").get<int>();
    r.timestamp = j.at("ts").get<std::string>();
    r.runtime_s = j.at("runtime_s").get<double>();
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
}

void ResultStore::append(const ResultRecord& r) {
  std::lock_guard<std::mutex> lock(mu_);
  std::ofstream out(path_, std::ios::app);
  out << r.to_json_line() << "\n";
  out.flush();
}

std::vector<ResultRecord> ResultStore::query(const StoreFilter& f) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<ResultRecord> out;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto r = ResultRecord::from_json_line(line);
    if (!r) {
      ++corrupt_;
      continue;
    }
    if (f.graph_hash && r->graph_hash != *f.graph_hash) continue;
    if (f.verdict && r->verdict != *f.verdict) continue;
    if (f.word && r->word != *f.word) continue;
    out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace cubetor
