#include "dgrover/query_ledger.hpp"

namespace dgrover {

namespace {

QueryLedger::PhaseCounts& slot(std::map<std::string, QueryLedger::PhaseCounts, std::less<>>& phases,
                               std::string_view name) {
  auto it = phases.find(name);
  if (it == phases.end()) it = phases.emplace(std::string(name), QueryLedger::PhaseCounts{}).first;
  return it->second;
}

}  // namespace

void QueryLedger::charge_quantum(std::string_view phase, std::uint64_t count) {
  slot(phases_, phase).quantum += count;
  quantum_ += count;
}

void QueryLedger::charge_classical(std::string_view phase, std::uint64_t count) {
  slot(phases_, phase).classical += count;
  classical_ += count;
}

void QueryLedger::merge(const QueryLedger& other) {
  for (const auto& [name, counts] : other.phases_) {
    auto& s = slot(phases_, name);
    s.quantum += counts.quantum;
    s.classical += counts.classical;
  }
  quantum_ += other.quantum_;
  classical_ += other.classical_;
}

QueryLedger::PhaseCounts QueryLedger::phase(std::string_view name) const {
  auto it = phases_.find(name);
  return it == phases_.end() ? PhaseCounts{} : it->second;
}

}  // namespace dgrover
