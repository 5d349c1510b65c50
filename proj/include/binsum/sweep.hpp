#pragma once

// Rectangle sweep over (n, r): certify every pair, write one JSONL record per
// pair in (n, r) order (r fastest), resumable, halting on any integer value.

#include "binsum/binomial_sum.hpp"
#include "binsum/certificate_json.hpp"
#include "binsum/witness.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace binsum {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resume file line that is newline-terminated but not a valid record.
class ResumeError : public std::runtime_error {
 public:
  ResumeError(std::size_t line, const std::string& what)
      : std::runtime_error("corrupt resume file at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  std::uint64_t r_min = 1;
  std::uint64_t r_max = 1;
  unsigned jobs = 0;  // 0: available parallelism
  std::filesystem::path out_path;
  bool resume = false;
  bool audit_fallback = false;
  bool record_timing = false;  // off: elapsed_micros = 0, output is deterministic
  std::size_t reorder_capacity = 4096;

  void validate() const {
    if (n_min < 1 || r_min < 1) throw ConfigError("n_min and r_min must be >= 1");
    if (n_max < n_min) throw ConfigError("n_max must be >= n_min");
    if (r_max < r_min) throw ConfigError("r_max must be >= r_min");
    if (out_path.empty()) throw ConfigError("output path is required");
    if (reorder_capacity == 0) throw ConfigError("reorder capacity must be positive");
  }
};

inline constexpr const char* kCounterexampleRoute = "COUNTEREXAMPLE";

struct SweepRecord {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string value_num;
  std::string value_den;
  bool is_integer = false;
  std::string route;
  std::string witness_prime;
  long claimed_bound = 0;
  bool verified = false;
  std::int64_t elapsed_micros = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline Json to_json(const SweepRecord& rec) {
  Json j;
  j["n"] = std::to_string(rec.n);
  j["r"] = std::to_string(rec.r);
  j["value_num"] = rec.value_num;
  j["value_den"] = rec.value_den;
  j["is_integer"] = rec.is_integer;
  j["route"] = rec.route;
  j["witness_prime"] = rec.witness_prime;
  j["claimed_bound"] = rec.claimed_bound;
  j["verified"] = rec.verified;
  j["elapsed_micros"] = rec.elapsed_micros;
  return j;
}

inline SweepRecord record_from_json(const Json& j) {
  using namespace json_detail;
  SweepRecord rec;
  rec.n = u64_field(j, "n");
  rec.r = u64_field(j, "r");
  rec.value_num = to_string(big_field(j, "value_num"));
  rec.value_den = to_string(big_field(j, "value_den"));
  rec.is_integer = bool_field(j, "is_integer");
  rec.route = string_field(j, "route");
  rec.witness_prime = string_field(j, "witness_prime");
  rec.claimed_bound = long_field(j, "claimed_bound");
  rec.verified = bool_field(j, "verified");
  rec.elapsed_micros = long_field(j, "elapsed_micros");
  if (rec.is_integer != (rec.value_den == "1"))
    throw FormatError("is_integer disagrees with value_den");
  return rec;
}

inline std::string record_line(const SweepRecord& rec) { return to_json(rec).dump(); }

inline SweepRecord parse_record_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return record_from_json(j);
}

/// Certifies one pair. With audit on, constructive certificates must also
/// agree with the factored denominator to count as verified.
inline SweepRecord compute_record(std::uint64_t n, std::uint64_t r, bool audit, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.n = n;
  rec.r = r;
  const Rational value = s_auto(n, r).value;
  rec.value_num = to_string(value.num());
  rec.value_den = to_string(value.den());
  rec.is_integer = value.is_integer();

  const CertifyResult result = certify(n, r);
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    rec.route = std::string(route_name(cert->route));
    rec.witness_prime = to_string(cert->witness_prime);
    rec.claimed_bound = cert->claimed_bound;
    rec.verified = cert->verified && !rec.is_integer;
    if (audit && cert->route != Route::FALLBACK_FACTORED)
      rec.verified = rec.verified && audit_fallback(*cert);
  } else {
    rec.route = kCounterexampleRoute;
    rec.is_integer = true;
  }
  if (timing)
    rec.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return rec;
}

struct SweepSummary {
  std::uint64_t records = 0;
  std::uint64_t computed = 0;
  std::uint64_t reused = 0;
  std::uint64_t integers = 0;
  std::uint64_t verification_failures = 0;
  bool counterexample = false;

  int exit_code() const { return counterexample || verification_failures > 0 ? 1 : 0; }
};

inline Json to_json(const SweepSummary& s) {
  Json j;
  j["records"] = s.records;
  j["computed"] = s.computed;
  j["reused"] = s.reused;
  j["integers"] = s.integers;
  j["verification_failures"] = s.verification_failures;
  j["exit_code"] = s.exit_code();
  return j;
}

namespace detail {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

struct ResumeState {
  std::uintmax_t keep_bytes = 0;    // verified in-order prefix to keep
  std::size_t prefix_records = 0;
  std::map<Pair, std::string> reusable;  // verified lines past the prefix
};

inline ResumeState scan_resume_file(const std::filesystem::path& path,
                                    const std::vector<Pair>& order) {
  ResumeState state;
  std::ifstream in(path, std::ios::binary);
  if (!in) return state;
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool in_prefix = true;
  while (pos < content.size()) {
    const std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) break;  // torn final line from an interrupted run
    ++line_no;
    const std::string line = content.substr(pos, eol - pos);
    SweepRecord rec;
    try {
      rec = parse_record_line(line);
    } catch (const FormatError& e) {
      throw ResumeError(line_no, e.what());
    }
    const Pair key{rec.n, rec.r};
    if (in_prefix && state.prefix_records < order.size() && order[state.prefix_records] == key &&
        rec.verified && !rec.is_integer) {
      ++state.prefix_records;
      state.keep_bytes = eol + 1;
    } else {
      in_prefix = false;
      if (rec.verified && !rec.is_integer) state.reusable.emplace(key, line);
    }
    pos = eol + 1;
  }
  return state;
}

}  // namespace detail

using RecordProducer = std::function<SweepRecord(std::uint64_t n, std::uint64_t r)>;

/// Runs the sweep. Throws ConfigError, ResumeError, OutputError; a worker
/// exception (arithmetic invariant broken) is rethrown on the caller.
/// `produce` replaces compute_record, for tests of the halting paths.
inline SweepSummary run_sweep(const SweepConfig& config, std::ostream& log,
                              RecordProducer produce = {}) {
  config.validate();
  if (!produce)
    produce = [&config](std::uint64_t n, std::uint64_t r) {
      return compute_record(n, r, config.audit_fallback, config.record_timing);
    };
  std::vector<detail::Pair> order;
  for (std::uint64_t n = config.n_min; n <= config.n_max; ++n)
    for (std::uint64_t r = config.r_min; r <= config.r_max; ++r) order.emplace_back(n, r);

  detail::ResumeState resume;
  if (config.resume && std::filesystem::exists(config.out_path))
    resume = detail::scan_resume_file(config.out_path, order);

  std::ofstream out;
  if (config.resume && resume.keep_bytes > 0) {
    std::error_code ec;
    std::filesystem::resize_file(config.out_path, resume.keep_bytes, ec);
    if (ec) throw OutputError("cannot truncate " + config.out_path.string() + ": " + ec.message());
    out.open(config.out_path, std::ios::binary | std::ios::app);
  } else {
    resume.prefix_records = 0;
    out.open(config.out_path, std::ios::binary | std::ios::trunc);
  }
  if (!out) throw OutputError("cannot open " + config.out_path.string() + " for writing");

  SweepSummary summary;
  summary.records = resume.prefix_records;
  summary.reused = resume.prefix_records;

  const std::vector<detail::Pair> tasks(order.begin() + static_cast<std::ptrdiff_t>(resume.prefix_records),
                                        order.end());

  struct Slot {
    std::string line;
    bool reused = false;
    bool is_integer = false;
    bool verified = false;
  };

  std::mutex mu;
  std::condition_variable space_cv;
  std::condition_variable ready_cv;
  std::map<std::size_t, Slot> done;
  std::size_t next = 0;
  std::size_t written = 0;
  bool stop = false;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t idx = 0;
      {
        std::unique_lock lk(mu);
        space_cv.wait(lk, [&] {
          return stop || next >= tasks.size() || next < written + config.reorder_capacity;
        });
        if (stop || next >= tasks.size()) return;
        idx = next++;
      }
      Slot slot;
      try {
        const auto [n, r] = tasks[idx];
        if (auto it = resume.reusable.find(tasks[idx]); it != resume.reusable.end()) {
          slot = {it->second, true, false, true};
        } else {
          const SweepRecord rec = produce(n, r);
          slot = {record_line(rec), false, rec.is_integer, rec.verified};
        }
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        ready_cv.notify_all();
        space_cv.notify_all();
        return;
      }
      {
        std::lock_guard lk(mu);
        done.emplace(idx, std::move(slot));
      }
      ready_cv.notify_all();
    }
  };

  unsigned jobs = config.jobs != 0 ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);

  auto halt = [&] {
    {
      std::lock_guard lk(mu);
      stop = true;
    }
    space_cv.notify_all();
    pool.clear();
  };

  while (written < tasks.size()) {
    Slot slot;
    {
      std::unique_lock lk(mu);
      ready_cv.wait(lk, [&] { return failure || done.count(written) != 0; });
      if (failure) {
        lk.unlock();
        halt();
        out.flush();
        std::rethrow_exception(failure);
      }
      auto node = done.extract(written);
      slot = std::move(node.mapped());
    }
    out << slot.line << '\n';
    ++summary.records;
    if (slot.reused)
      ++summary.reused;
    else
      ++summary.computed;
    if (slot.is_integer) {
      ++summary.integers;
      summary.counterexample = true;
      out.flush();
      log << "COUNTEREXAMPLE: S(n,r) is an integer: " << slot.line << std::endl;
      halt();
      break;
    }
    if (!slot.verified) ++summary.verification_failures;
    {
      std::lock_guard lk(mu);
      ++written;
    }
    space_cv.notify_all();
  }
  halt();
  out.flush();
  if (!out) throw OutputError("write to " + config.out_path.string() + " failed");
  return summary;
}

}  // namespace binsum
