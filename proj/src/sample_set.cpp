#include <algorithm>
#include <map>

#include "aqoci/samplers.hpp"

namespace aqoci {

namespace {

bool canonical_less(const SampleRecord& a, const SampleRecord& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.assignment < b.assignment;
}

}  // namespace

SampleSet SampleSet::from_records(std::vector<SampleRecord> records, std::string source) {
  std::map<BitVector, SampleRecord> merged;
  for (auto& record : records) {
    if (record.occurrences == 0) throw Error(ErrorKind::solver, "record with zero occurrences");
    auto [it, inserted] = merged.try_emplace(record.assignment, record);
    if (!inserted) it->second.occurrences += record.occurrences;
  }
  SampleSet out;
  out.source_ = std::move(source);
  out.records_.reserve(merged.size());
  for (auto& [bits, record] : merged) out.records_.push_back(std::move(record));
  std::sort(out.records_.begin(), out.records_.end(), canonical_less);
  return out;
}

SampleSet SampleSet::from_reads(const QuboProblem& problem, const std::vector<BitVector>& reads,
                                std::string source) {
  std::vector<SampleRecord> records;
  records.reserve(reads.size());
  for (const auto& read : reads) records.push_back({read, problem.energy(read), 1});
  return from_records(std::move(records), std::move(source));
}

const SampleRecord& SampleSet::best() const {
  if (records_.empty()) throw Error(ErrorKind::solver, "empty sample set");
  return records_.front();
}

std::uint64_t SampleSet::total_occurrences() const noexcept {
  std::uint64_t total = 0;
  for (const auto& r : records_) total += r.occurrences;
  return total;
}

}  // namespace aqoci
