#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "kalu/json_io.hpp"

namespace kalu {

// One request against the library, as delivered by the command line or by
// one line of a batch stream.
struct JobSpec {
    std::string command;  // kl | decompose | smallness | scan-relevant | essential | verify
    SchubertDatum datum;
    std::optional<CondVector> p;  // kl: required; smallness/essential: default all-zero
    std::optional<CondVector> q;  // kl: required
    std::string mode;             // verify only
    bool json_output = true;
    std::string cache_dir;        // used by the convenience run(job) only
};

JobSpec job_from_json(const Json& j);

struct JobResult {
    int code = 0;  // 0 done, 1 rejected input or failed verification, 2 broken invariant
    Json json;
    std::string text;
};

// Completed base tables (offsets all zero, extended to the maximal
// admissible vector), shared across jobs and guarded per datum. With a
// directory, each table is also written to and read from one file per
// datum; a table restored from disk skips recomputation.
class TableCache {
public:
    explicit TableCache(std::string dir);
    ~TableCache();

    bool persistent() const { return !dir_.empty(); }
    std::string file_for(const SchubertDatum& datum) const;

    // Runs fn with exclusive access to the datum's completed table,
    // building or loading it first if this is the datum's first use.
    void with_table(const SchubertDatum& datum, const std::function<void(KaLuTable&)>& fn);

private:
    struct Entry;
    std::shared_ptr<Entry> entry_for(const SchubertDatum& datum);

    std::string dir_;
    std::mutex mx_;
    std::map<std::string, std::shared_ptr<Entry>> entries_;
};

// Flag value if set, else the KALU_CACHE_DIR environment variable, else "".
std::string resolve_cache_dir(const std::string& flag_value);

// Dispatches the job. Validation problems come back as code 1, broken
// internal invariants as code 2, with the message under "error"; a verify
// job whose checks ran but failed is code 1 with the full report.
JobResult run(const JobSpec& job, TableCache& cache);
JobResult run(const JobSpec& job);  // throwaway cache from job.cache_dir

// JSON-lines: each non-blank input line is a JobSpec; one output object per
// such line, in input order, {"line": n, "result": ...} on success and
// {"line": n, "error": ...} otherwise. Lines may be processed concurrently
// (threads == 0 picks a width automatically); lines naming the same datum
// share its table through the cache.
void run_batch(std::istream& in, std::ostream& out, TableCache& cache, int threads = 0);

}  // namespace kalu
